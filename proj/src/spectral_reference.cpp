// Serial direct-summation transforms. These are the reference the FFT path
// is verified against in the tests and benchmarked against in bench/.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "fftreg/spectral.hpp"
#include "spectral_detail.hpp"

namespace fftreg::spectral::reference {

namespace {

std::complex<double> unit_phase(std::int64_t numerator, std::int64_t m, double sign) {
    // exp(sign * 2*pi*i * (numerator mod m) / m)
    const std::int64_t k = numerator % m;
    return std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                               static_cast<double>(m));
}

}  // namespace

Spectrum dft(std::span<const double> signal, double dx) {
    if (signal.empty()) throw data_error("dft: empty input");
    if (!(dx > 0.0)) throw data_error("dft: dx must be positive");
    const auto m = static_cast<std::int64_t>(signal.size());
    std::vector<std::complex<double>> out(signal.size());
    for (std::int64_t j = 0; j < m; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (std::int64_t t = 0; t < m; ++t)
            acc += signal[static_cast<std::size_t>(t)] * unit_phase(j * t, m, -1.0);
        out[static_cast<std::size_t>(j)] = acc;
    }
    return Spectrum(std::move(out), 1.0 / (static_cast<double>(m) * dx));
}

std::vector<double> idft(const Spectrum& spectrum) {
    const auto& coeffs = spectrum.coefficients();
    const auto m = static_cast<std::int64_t>(coeffs.size());
    std::vector<std::complex<double>> out(coeffs.size());
    for (std::int64_t t = 0; t < m; ++t) {
        std::complex<double> acc{0.0, 0.0};
        for (std::int64_t j = 0; j < m; ++j)
            acc += coeffs[static_cast<std::size_t>(j)] * unit_phase(j * t, m, +1.0);
        out[static_cast<std::size_t>(t)] = acc / static_cast<double>(m);
    }
    return detail::real_part_checked(out);
}

std::vector<double> dirichlet_smooth(std::span<const double> signal, int h_bins) {
    if (signal.empty()) throw data_error("dirichlet_smooth: empty input");
    if (h_bins < 0) throw data_error("dirichlet_smooth: h_bins must be non-negative");
    const auto m = static_cast<std::int64_t>(signal.size());
    const auto kernel = detail::dirichlet_kernel(signal.size(), h_bins);
    std::vector<double> out(signal.size());
    for (std::int64_t t = 0; t < m; ++t) {
        double acc = 0.0;
        for (std::int64_t tau = 0; tau < m; ++tau) {
            const std::int64_t lag = (t - tau + m) % m;
            acc += signal[static_cast<std::size_t>(tau)] * kernel[static_cast<std::size_t>(lag)];
        }
        out[static_cast<std::size_t>(t)] = acc;
    }
    return out;
}

}  // namespace fftreg::spectral::reference
