#pragma once

#include <cstdint>
#include <stdexcept>

namespace choralegen {

/// Harmonic-plus-noise synthesizer constants.
struct SynthConfig {
  int sample_rate = 16000;
  int num_harmonics = 64;
  int num_noise_bands = 65;
  /// Linear-phase FIR length for the per-frame noise filters (odd).
  int fir_taps = 257;
  /// Fraction of the Nyquist band over which harmonic weights taper to zero
  /// before the hard cut, so harmonics crossing sr/2 fade instead of click.
  double nyquist_taper = 0.05;
  /// Key of the counter-based noise stream; derive per (track, stem).
  uint64_t noise_key = 0;

  void validate() const {
    if (sample_rate <= 0) throw std::invalid_argument("sample_rate must be > 0");
    if (num_harmonics < 1) throw std::invalid_argument("num_harmonics must be >= 1");
    if (num_noise_bands < 2) throw std::invalid_argument("num_noise_bands must be >= 2");
    if (fir_taps < 3 || fir_taps % 2 == 0) {
      throw std::invalid_argument("fir_taps must be odd and >= 3");
    }
    if (nyquist_taper < 0.0 || nyquist_taper > 0.5) {
      throw std::invalid_argument("nyquist_taper must lie in [0, 0.5]");
    }
  }
};

}  // namespace choralegen
