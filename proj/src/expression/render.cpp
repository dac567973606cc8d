#include "expression/render.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace choralegen {

void RenderConfig::validate() const {
  if (frame_rate <= 0.0) throw std::invalid_argument("frame_rate must be > 0");
  if (num_harmonics < 1) throw std::invalid_argument("need >= 1 harmonic");
  if (num_noise_bands < 2) throw std::invalid_argument("need >= 2 noise bands");
  if (brightness_gamma_min > brightness_gamma_max) {
    throw std::invalid_argument("brightness gamma range inverted");
  }
}

NoteSegment renderSynthesisParams(const PerformanceNote& note,
                                  const NoteExpression& expr,
                                  const RenderConfig& config) {
  config.validate();
  if (!expr.inRange()) {
    throw std::invalid_argument("expression fields must lie in [0, 1]");
  }

  const double fr = config.frame_rate;
  const long start_frame = std::lround(note.onset_s * fr);
  const long end_frame = std::lround(note.offset_s * fr);
  const long frames = std::max<long>(1, end_frame - start_frame);
  const double duration_s = frames / fr;

  NoteSegment segment;
  segment.start_frame = start_frame;
  SynthesisParams& p = segment.params;
  p.frame_rate = fr;
  p.num_harmonics = config.num_harmonics;
  p.num_noise_bands = config.num_noise_bands;
  p.resize(frames);

  // Harmonic distribution: spectral tilt from brightness, constant over the
  // note. c_k ~ k^-gamma normalized to sum 1.
  const double gamma =
      config.brightness_gamma_max -
      expr.brightness * (config.brightness_gamma_max - config.brightness_gamma_min);
  std::vector<double> shape(config.num_harmonics);
  double shape_sum = 0.0;
  for (int k = 0; k < config.num_harmonics; ++k) {
    shape[k] = std::pow(k + 1.0, -gamma);
    shape_sum += shape[k];
  }
  for (double& s : shape) s /= shape_sum;

  // Envelope timing.
  const double apex_s =
      std::min(std::max(expr.volume_peak_position * duration_s,
                        std::min(config.attack_min_s, 0.45 * duration_s)),
               0.9 * duration_s);
  const double release_s = std::min(config.release_s, 0.3 * duration_s);
  const double release_start_s = duration_s - release_s;
  const double peak_amp =
      config.amp_peak_min + expr.volume * (config.amp_peak_max - config.amp_peak_min);

  const double vib_depth = expr.vibrato * config.vibrato_depth_st;
  const double vib_onset_s = config.vibrato_onset_frac * duration_s;
  const double vib_ramp_s = std::min(0.050, 0.25 * duration_s);

  const double attack_window_s = std::min(config.attack_window_s, duration_s);

  for (long i = 0; i < frames; ++i) {
    const double t = (i + 0.5) / fr;  // time within the note

    // Amplitude: attack to apex, decay to sustain, release to zero.
    double env;
    if (t <= apex_s) {
      env = apex_s > 0.0 ? t / apex_s : 1.0;
    } else if (t < release_start_s) {
      const double span = std::max(release_start_s - apex_s, 1e-9);
      const double frac = (t - apex_s) / span;
      env = 1.0 + (config.sustain_level - 1.0) * frac;
    } else {
      const double frac = release_s > 0.0 ? (duration_s - t) / release_s : 0.0;
      env = config.sustain_level * std::max(0.0, frac);
    }
    double amp = peak_amp * env;
    if (expr.volume_fluctuation > 0.0) {
      const double mod =
          1.0 + config.fluctuation_depth * expr.volume_fluctuation *
                    std::sin(2.0 * std::numbers::pi * config.fluctuation_rate_hz * t);
      amp *= mod;
    }
    p.amplitude[i] = std::max(0.0, amp);

    // f0: note pitch plus delayed vibrato.
    double f0 = note.pitch;
    if (vib_depth > 0.0 && t > vib_onset_s) {
      const double ramp =
          vib_ramp_s > 0.0 ? std::min(1.0, (t - vib_onset_s) / vib_ramp_s) : 1.0;
      f0 += vib_depth * ramp *
            std::sin(2.0 * std::numbers::pi * config.vibrato_rate_hz *
                     (t - vib_onset_s));
    }
    p.f0_semitones[i] = f0;

    auto harmonics = p.harmonicsFrame(i);
    for (int k = 0; k < config.num_harmonics; ++k) harmonics[k] = shape[k];

    // Noise: sustained floor plus the attack burst, tilted toward high bands.
    const double attack_env =
        t < attack_window_s ? 1.0 - t / attack_window_s : 0.0;
    const double attack_level =
        config.attack_noise_gain * expr.attack_noise * attack_env;
    const double floor_level = config.noise_floor * expr.volume;
    auto noise = p.noiseFrame(i);
    for (int b = 0; b < config.num_noise_bands; ++b) {
      const double tilt =
          0.3 + 0.7 * static_cast<double>(b) / (config.num_noise_bands - 1);
      noise[b] = floor_level + attack_level * tilt;
    }
  }
  return segment;
}

std::vector<double> applyIntonationPrior(NoteSegment& segment,
                                         const IntonationConfig& config,
                                         Rng& rng) {
  SynthesisParams& p = segment.params;
  const size_t frames = p.numFrames();
  if (frames == 0) throw std::invalid_argument("empty segment");

  const double bias = rng.normal(config.bias_mean_st, config.bias_std_st);
  // Random walk whose endpoint has std drift_std_st regardless of length.
  const double step_std =
      frames > 1 ? config.drift_std_st / std::sqrt(static_cast<double>(frames))
                 : config.drift_std_st;

  std::vector<double> deviation(frames);
  double walk = 0.0;
  for (size_t i = 0; i < frames; ++i) {
    walk += rng.normal(0.0, step_std);
    deviation[i] = bias + walk;
    p.f0_semitones[i] += deviation[i];
  }
  return deviation;
}

}  // namespace choralegen
