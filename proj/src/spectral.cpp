#include "fftreg/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "spectral_detail.hpp"

namespace fftreg::spectral {

namespace {

// Sizes below these thresholds run serially; the kernels stay bitwise
// identical either way because every parallel loop writes disjoint elements
// whose per-element arithmetic order is fixed.
constexpr std::int64_t kFftParallelMin = 8192;     // butterflies per stage
constexpr std::int64_t kDirectParallelMin = 128;   // O(M^2) loops

std::vector<std::complex<double>> twiddle_table(std::int64_t m, double sign) {
    // w[k] = exp(sign * 2*pi*i*k/m), k in [0, m/2). Each entry is computed
    // from its own angle; chaining multiplications would drift.
    std::vector<std::complex<double>> w(static_cast<std::size_t>(m / 2));
    const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(m);
    for (std::int64_t k = 0; k < m / 2; ++k)
        w[static_cast<std::size_t>(k)] = std::polar(1.0, step * static_cast<double>(k));
    return w;
}

void bit_reverse_permute(std::vector<std::complex<double>>& data) {
    const std::size_t m = data.size();
    const int bits = std::countr_zero(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t rev = 0;
        std::size_t x = i;
        for (int b = 0; b < bits; ++b) {
            rev = (rev << 1) | (x & 1);
            x >>= 1;
        }
        if (rev > i) std::swap(data[i], data[rev]);
    }
}

/// Iterative radix-2 transform, sign = -1 forward, +1 inverse (unscaled).
void fft_inplace(std::vector<std::complex<double>>& data, double sign) {
    const auto m = static_cast<std::int64_t>(data.size());
    if (m == 1) return;
    const auto w = twiddle_table(m, sign);
    bit_reverse_permute(data);
    for (std::int64_t len = 2; len <= m; len <<= 1) {
        const std::int64_t half = len / 2;
        const std::int64_t stride = m / len;
        const std::int64_t butterflies = m / 2;
        // Butterfly b touches the disjoint pair (even, even + half), so the
        // schedule cannot change any arithmetic order.
#pragma omp parallel for if (butterflies >= kFftParallelMin) schedule(static)
        for (std::int64_t b = 0; b < butterflies; ++b) {
            const std::int64_t group = b / half;
            const std::int64_t j = b % half;
            const std::int64_t even = group * len + j;
            const std::complex<double> tw = w[static_cast<std::size_t>(j * stride)];
            const std::complex<double> t = tw * data[static_cast<std::size_t>(even + half)];
            const std::complex<double> u = data[static_cast<std::size_t>(even)];
            data[static_cast<std::size_t>(even)] = u + t;
            data[static_cast<std::size_t>(even + half)] = u - t;
        }
    }
}

/// Direct forward summation for lengths without a radix-2 path. The phase
/// index j*t is reduced mod M in integers before the angle is formed, so
/// large products do not lose precision.
std::vector<std::complex<double>> direct_forward(std::span<const double> signal) {
    const auto m = static_cast<std::int64_t>(signal.size());
    const auto unit = twiddle_table(2 * m, -1.0);  // exp(-2*pi*i*k/(2m)), reused as exp(-pi*i*k/m)
    std::vector<std::complex<double>> out(static_cast<std::size_t>(m));
#pragma omp parallel for if (m >= kDirectParallelMin) schedule(static)
    for (std::int64_t j = 0; j < m; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (std::int64_t t = 0; t < m; ++t) {
            const std::int64_t k = (j * t) % m;
            acc += signal[static_cast<std::size_t>(t)] * unit[static_cast<std::size_t>(k)];
        }
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

}  // namespace

Spectrum dft(std::span<const double> signal, double dx) {
    if (signal.empty()) throw data_error("dft: empty input");
    if (!(dx > 0.0)) throw data_error("dft: dx must be positive");
    const double bin_spacing = 1.0 / (static_cast<double>(signal.size()) * dx);
    if (std::has_single_bit(signal.size())) {
        std::vector<std::complex<double>> data(signal.begin(), signal.end());
        fft_inplace(data, -1.0);
        return Spectrum(std::move(data), bin_spacing);
    }
    return Spectrum(direct_forward(signal), bin_spacing);
}

std::vector<double> idft(const Spectrum& spectrum) {
    const auto& coeffs = spectrum.coefficients();
    const auto m = static_cast<std::int64_t>(coeffs.size());
    std::vector<std::complex<double>> data = coeffs;
    if (std::has_single_bit(coeffs.size())) {
        fft_inplace(data, +1.0);
    } else {
        const auto unit = twiddle_table(2 * m, +1.0);
        std::vector<std::complex<double>> out(coeffs.size());
#pragma omp parallel for if (m >= kDirectParallelMin) schedule(static)
        for (std::int64_t t = 0; t < m; ++t) {
            std::complex<double> acc{0.0, 0.0};
            for (std::int64_t j = 0; j < m; ++j) {
                const std::int64_t k = (j * t) % m;
                acc += coeffs[static_cast<std::size_t>(j)] * unit[static_cast<std::size_t>(k)];
            }
            out[static_cast<std::size_t>(t)] = acc;
        }
        data = std::move(out);
    }
    const double scale = 1.0 / static_cast<double>(m);
    for (auto& v : data) v *= scale;
    return detail::real_part_checked(data);
}

Spectrum lowpass(const Spectrum& spectrum, int h_bins) {
    if (h_bins < 0) throw data_error("lowpass: h_bins must be non-negative");
    const auto m = static_cast<std::int64_t>(spectrum.size());
    std::vector<std::complex<double>> out = spectrum.coefficients();
    const auto h = static_cast<std::int64_t>(h_bins);
    for (std::int64_t j = 0; j < m; ++j) {
        if (std::min(j, m - j) > h) out[static_cast<std::size_t>(j)] = {0.0, 0.0};
    }
    return Spectrum(std::move(out), spectrum.bin_spacing());
}

std::vector<double> dirichlet_smooth(std::span<const double> signal, int h_bins) {
    if (signal.empty()) throw data_error("dirichlet_smooth: empty input");
    if (h_bins < 0) throw data_error("dirichlet_smooth: h_bins must be non-negative");
    const auto m = static_cast<std::int64_t>(signal.size());
    const auto kernel = detail::dirichlet_kernel(signal.size(), h_bins);
    std::vector<double> out(signal.size());
#pragma omp parallel for if (m >= kDirectParallelMin) schedule(static)
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

}  // namespace fftreg::spectral
