// Integrated loudness per ITU-R BS.1770-4: K-weighting (pre-shelf + RLB
// high-pass), 400 ms blocks at 75% overlap, absolute gate at -70 LKFS and
// relative gate at -10 LU.
#pragma once

#include <array>
#include <optional>
#include <span>

#include "core/audio_buffer.h"

namespace choralegen {

/// One direct-form-I biquad section.
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;

  std::array<double, 4> state = {0.0, 0.0, 0.0, 0.0};

  double process(double x) {
    const double y = b0 * x + b1 * state[0] + b2 * state[1] - a1 * state[2] -
                     a2 * state[3];
    state[1] = state[0];
    state[0] = x;
    state[3] = state[2];
    state[2] = y;
    return y;
  }
};

/// K-weighting filter cascade for an arbitrary sample rate. BS.1770-4 only
/// tabulates 48 kHz coefficients; these are re-derived by bilinear transform
/// from the analog prototypes (parametrization after Mansbridge et al.,
/// 132nd AES Convention, 2012), which reproduces the published 48 kHz table.
struct KWeighting {
  Biquad shelf;
  Biquad highpass;

  explicit KWeighting(int sample_rate);

  double process(double x) { return highpass.process(shelf.process(x)); }
};

/// Gated integrated loudness of a mono buffer in LUFS.
///
/// Returns std::nullopt (the "silence" sentinel) when no block passes the
/// absolute gate. Throws std::invalid_argument for buffers shorter than one
/// 400 ms gating block.
std::optional<double> integratedLoudness(std::span<const double> samples,
                                         int sample_rate);

inline std::optional<double> integratedLoudness(const AudioBuffer& audio) {
  return integratedLoudness(audio.samples, audio.sample_rate);
}

}  // namespace choralegen
