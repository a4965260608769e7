#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "fftreg/domain.hpp"

namespace fftreg::spectral::detail {

inline constexpr double kResidueTolerance = 1e-8;

/// Dirichlet kernel of half-width h on an M-point circle, evaluated from the
/// closed-form sine ratio. A passband covering every bin (2h+1 >= M) gives
/// the unit impulse.
inline std::vector<double> dirichlet_kernel(std::size_t length, int h_bins) {
    const auto m = static_cast<std::int64_t>(length);
    const std::int64_t taps = 2 * static_cast<std::int64_t>(h_bins) + 1;
    std::vector<double> kernel(length, 0.0);
    if (taps >= m) {
        kernel[0] = 1.0;
        return kernel;
    }
    kernel[0] = static_cast<double>(taps) / static_cast<double>(m);
    for (std::int64_t t = 1; t < m; ++t) {
        const double phase = std::numbers::pi * static_cast<double>(t) / static_cast<double>(m);
        kernel[static_cast<std::size_t>(t)] =
            std::sin(static_cast<double>(taps) * phase) /
            (static_cast<double>(m) * std::sin(phase));
    }
    return kernel;
}

/// Drops the imaginary parts of an inverse-transform output, throwing when
/// the residue is too large to be rounding noise.
inline std::vector<double> real_part_checked(const std::vector<std::complex<double>>& values) {
    double max_real = 0.0;
    double max_imag = 0.0;
    for (const auto& v : values) {
        max_real = std::max(max_real, std::abs(v.real()));
        max_imag = std::max(max_imag, std::abs(v.imag()));
    }
    const double bound = kResidueTolerance * std::max(1.0, max_real);
    if (max_imag >= bound) {
        throw numeric_error("inverse transform imaginary residue " + std::to_string(max_imag) +
                            " exceeds bound " + std::to_string(bound) +
                            " (spectrum is not conjugate-symmetric)");
    }
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i].real();
    return out;
}

}  // namespace fftreg::spectral::detail
