#include "synth/harmonic.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace choralegen {

double semitonesToHz(double midi_pitch) {
  return 440.0 * std::pow(2.0, (midi_pitch - 69.0) / 12.0);
}

PerSampleControls upsampleParams(const SynthesisParams& params, int sample_rate) {
  if (params.numFrames() == 0) throw std::invalid_argument("no frames");
  const double hop_exact = sample_rate / params.frame_rate;
  const int hop = static_cast<int>(std::lround(hop_exact));
  if (std::abs(hop_exact - hop) > 1e-9 || hop < 1) {
    throw std::invalid_argument(
        "sample_rate must be an integer multiple of frame_rate");
  }

  const size_t frames = params.numFrames();
  const size_t samples = frames * hop;
  PerSampleControls controls;
  controls.frames = &params;
  controls.hop = hop;
  controls.f0_hz.resize(samples);
  controls.amplitude.resize(samples);

  // Convert frame f0 to Hz first, then interpolate linearly between frame
  // values; the last frame holds.
  std::vector<double> f0_hz(frames);
  for (size_t i = 0; i < frames; ++i) {
    f0_hz[i] = semitonesToHz(params.f0_semitones[i]);
  }

  for (size_t frame = 0; frame < frames; ++frame) {
    const double f0_a = f0_hz[frame];
    const double f0_b = frame + 1 < frames ? f0_hz[frame + 1] : f0_hz[frame];
    const double amp_a = params.amplitude[frame];
    const double amp_b =
        frame + 1 < frames ? params.amplitude[frame + 1] : params.amplitude[frame];
    for (int j = 0; j < hop; ++j) {
      const double frac = static_cast<double>(j) / hop;
      const size_t n = frame * hop + j;
      controls.f0_hz[n] = f0_a + (f0_b - f0_a) * frac;
      controls.amplitude[n] = amp_a + (amp_b - amp_a) * frac;
    }
  }
  return controls;
}

AudioBuffer synthesizeHarmonic(const PerSampleControls& controls,
                               const SynthConfig& config) {
  config.validate();
  const size_t samples = controls.f0_hz.size();
  AudioBuffer out;
  out.sample_rate = config.sample_rate;
  out.samples.assign(samples, 0.0);

  const double nyquist = 0.5 * config.sample_rate;
  const double taper_start = nyquist * (1.0 - config.nyquist_taper);
  const double two_pi = 2.0 * std::numbers::pi;

  double phase = 0.0;  // base oscillator phase, wrapped to [0, 2*pi)
  std::vector<double> gated(config.num_harmonics);

  for (size_t n = 0; n < samples; ++n) {
    const double f0 = controls.f0_hz[n];
    if (f0 < 0.0) throw std::invalid_argument("negative f0");
    phase += two_pi * f0 / config.sample_rate;
    if (phase >= two_pi) phase -= two_pi;

    const double amp = controls.amplitude[n];
    if (amp == 0.0) continue;

    const auto weights = controls.weightsAt(n);
    const int k_count =
        std::min<int>(config.num_harmonics, static_cast<int>(weights.size()));

    // Zero-weight harmonics at/above Nyquist, taper just below, renormalize.
    double total = 0.0;
    for (int k = 0; k < k_count; ++k) {
      const double freq = (k + 1) * f0;
      double gate;
      if (freq >= nyquist) {
        gate = 0.0;
      } else if (freq > taper_start && nyquist > taper_start) {
        gate = 0.5 * (1.0 + std::cos(std::numbers::pi * (freq - taper_start) /
                                     (nyquist - taper_start)));
      } else {
        gate = 1.0;
      }
      gated[k] = weights[k] * gate;
      total += gated[k];
    }
    if (total <= 0.0) continue;

    double acc = 0.0;
    for (int k = 0; k < k_count; ++k) {
      if (gated[k] == 0.0) continue;
      acc += gated[k] * std::sin((k + 1) * phase);
    }
    out.samples[n] = amp * acc / total;
  }
  return out;
}

}  // namespace choralegen
