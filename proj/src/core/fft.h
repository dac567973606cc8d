// Minimal iterative radix-2 FFT, enough for noise filter design and fast
// block convolution. Sizes must be powers of two.
#pragma once

#include <complex>
#include <vector>

namespace choralegen {

/// In-place complex FFT. `inverse` applies the conjugate transform and the
/// 1/N scaling.
void fft(std::vector<std::complex<double>>& data, bool inverse);

/// Forward FFT of a real signal zero-padded to `n` (power of two).
std::vector<std::complex<double>> rfft(const std::vector<double>& x, size_t n);

}  // namespace choralegen
