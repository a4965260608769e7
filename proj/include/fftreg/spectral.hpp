#pragma once

#include <span>
#include <vector>

#include "fftreg/domain.hpp"

namespace fftreg::spectral {

// Transform convention: the forward transform is unnormalized,
//   coefficient[j] = sum_t signal[t] * exp(-2*pi*i*j*t/M),
// and the inverse carries the 1/M factor. The passband of the low-pass
// filter is closed: bins with min(j, M-j) <= h_bins are kept, so h_bins = 0
// keeps exactly the DC bin.

/// Forward transform. Power-of-two lengths take the radix-2 FFT path
/// (OpenMP-parallel butterfly stages for large M); other lengths fall back
/// to direct summation. `dx` only sets the spectrum's bin spacing 1/(M*dx).
Spectrum dft(std::span<const double> signal, double dx = 1.0);

/// Inverse transform, real part. Throws numeric_error when the discarded
/// imaginary residue exceeds 1e-8 * max(1, max |real|), which indicates a
/// conjugate-symmetry violation upstream.
std::vector<double> idft(const Spectrum& spectrum);

/// Zeroes every bin outside the closed passband of half-width h_bins.
/// h_bins >= M/2 keeps all bins (identity). Kept bins are copied bit-exactly.
Spectrum lowpass(const Spectrum& spectrum, int h_bins);

/// Circular convolution with the Dirichlet kernel
///   D(t) = sin(pi*(2h+1)*t/M) / (M * sin(pi*t/M)),  D(0) = (2h+1)/M,
/// the spatial-domain counterpart of the h-bin low-pass filter. When the
/// passband covers every bin (2h+1 >= M) the kernel degenerates to the unit
/// impulse. This route shares no code with dft/idft/lowpass and is used to
/// cross-check them.
std::vector<double> dirichlet_smooth(std::span<const double> signal, int h_bins);

/// Serial direct-summation implementations, kept as the reference the FFT
/// path is tested and benchmarked against.
namespace reference {

Spectrum dft(std::span<const double> signal, double dx = 1.0);
std::vector<double> idft(const Spectrum& spectrum);
std::vector<double> dirichlet_smooth(std::span<const double> signal, int h_bins);

}  // namespace reference

}  // namespace fftreg::spectral
