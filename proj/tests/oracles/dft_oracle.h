// Test-local spectral analysis, written independently of the library's FFT:
// Goertzel single-bin estimates, a recursive FFT for Welch PSDs, and a
// windowed-sinc highpass for out-of-band energy measurements.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace choralegen::oracles {

/// Amplitude of the sinusoidal component at `freq` (Goertzel, rectangular
/// window): 2|X(f)|/N, exact for bin-centered tones.
inline double goertzelAmplitude(std::span<const double> x, double freq,
                                double sample_rate) {
  const double omega = 2.0 * std::numbers::pi * freq / sample_rate;
  const double coeff = 2.0 * std::cos(omega);
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (double v : x) {
    s0 = v + coeff * s1 - s2;
    s2 = s1;
    s1 = s0;
  }
  const double power =
      s1 * s1 + s2 * s2 - coeff * s1 * s2;  // |X|^2
  return 2.0 * std::sqrt(std::max(0.0, power)) / static_cast<double>(x.size());
}

/// Recursive radix-2 Cooley-Tukey, deliberately a different construction
/// from the library's iterative FFT.
inline std::vector<std::complex<double>> recursiveFft(
    std::vector<std::complex<double>> x) {
  const size_t n = x.size();
  if (n <= 1) return x;
  std::vector<std::complex<double>> even(n / 2), odd(n / 2);
  for (size_t i = 0; i < n / 2; ++i) {
    even[i] = x[2 * i];
    odd[i] = x[2 * i + 1];
  }
  even = recursiveFft(std::move(even));
  odd = recursiveFft(std::move(odd));
  std::vector<std::complex<double>> out(n);
  for (size_t k = 0; k < n / 2; ++k) {
    const auto twiddle =
        std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) / n) *
        odd[k];
    out[k] = even[k] + twiddle;
    out[k + n / 2] = even[k] - twiddle;
  }
  return out;
}

/// Welch power spectral density with Hann windows and 50% overlap.
/// Returns segment_size/2+1 bins of mean |X|^2 normalized per sample.
inline std::vector<double> welchPsd(std::span<const double> x,
                                    size_t segment_size) {
  std::vector<double> window(segment_size);
  double window_power = 0.0;
  for (size_t i = 0; i < segment_size; ++i) {
    window[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i /
                                      (segment_size - 1)));
    window_power += window[i] * window[i];
  }

  std::vector<double> psd(segment_size / 2 + 1, 0.0);
  size_t segments = 0;
  for (size_t start = 0; start + segment_size <= x.size();
       start += segment_size / 2) {
    std::vector<std::complex<double>> buf(segment_size);
    for (size_t i = 0; i < segment_size; ++i) buf[i] = x[start + i] * window[i];
    const auto spectrum = recursiveFft(std::move(buf));
    for (size_t k = 0; k < psd.size(); ++k) {
      psd[k] += std::norm(spectrum[k]);
    }
    ++segments;
  }
  for (double& v : psd) v /= segments * window_power;
  return psd;
}

/// Fraction of signal energy above `cutoff_hz`, measured by filtering with a
/// long Blackman-windowed-sinc highpass.
inline double energyFractionAbove(std::span<const double> x, double cutoff_hz,
                                  double sample_rate) {
  const int half = 1024;
  const double fc = cutoff_hz / sample_rate;
  std::vector<double> lowpass(2 * half + 1);
  double sum = 0.0;
  for (int i = -half; i <= half; ++i) {
    const double sinc =
        i == 0 ? 2.0 * fc
               : std::sin(2.0 * std::numbers::pi * fc * i) / (std::numbers::pi * i);
    const double w = 0.42 +
                     0.5 * std::cos(std::numbers::pi * i / half) +
                     0.08 * std::cos(2.0 * std::numbers::pi * i / half);
    lowpass[i + half] = sinc * w;
    sum += lowpass[i + half];
  }
  for (double& v : lowpass) v /= sum;

  double total = 0.0, high = 0.0;
  for (size_t n = 0; n < x.size(); ++n) {
    double low = 0.0;
    for (int i = -half; i <= half; ++i) {
      const long m = static_cast<long>(n) + i;
      if (m >= 0 && m < static_cast<long>(x.size())) {
        low += lowpass[i + half] * x[m];
      }
    }
    const double hp = x[n] - low;
    total += x[n] * x[n];
    high += hp * hp;
  }
  return total > 0.0 ? high / total : 0.0;
}

}  // namespace choralegen::oracles
