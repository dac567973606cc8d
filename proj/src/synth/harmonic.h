// Additive harmonic synthesis with a cumulative-phase oscillator bank.
#pragma once

#include <vector>

#include "core/audio_buffer.h"
#include "expression/synthesis_params.h"
#include "synth/synth_config.h"

namespace choralegen {

/// Conversion between fractional MIDI pitch and Hz.
double semitonesToHz(double midi_pitch);

/// Frame controls expanded to the sample grid: f0 (Hz) and amplitude are
/// linearly interpolated; harmonic weights stay frame-held and are read
/// through `frames` to avoid materializing a samples x harmonics matrix.
struct PerSampleControls {
  std::vector<double> f0_hz;
  std::vector<double> amplitude;
  const SynthesisParams* frames = nullptr;
  int hop = 0;

  std::span<const double> weightsAt(size_t sample) const {
    size_t frame = sample / hop;
    const size_t last = frames->numFrames() - 1;
    if (frame > last) frame = last;
    return frames->harmonicsFrame(frame);
  }
};

/// Expands framewise parameters to the sample grid. sample_rate must be an
/// integer multiple of the frame rate.
PerSampleControls upsampleParams(const SynthesisParams& params, int sample_rate);

/// x[n] = A[n] * sum_k c_k[n] sin(phi_k[n]) with phi_k accumulated from
/// 2*pi*k*f0[n]/sr. Harmonics at or above sr/2 get zero weight (with a short
/// taper below the cut) and the surviving weights are renormalized per
/// sample.
AudioBuffer synthesizeHarmonic(const PerSampleControls& controls,
                               const SynthConfig& config);

}  // namespace choralegen
