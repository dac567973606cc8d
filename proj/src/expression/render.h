// Deterministic rule-based rendering of (note, expression) pairs into
// framewise synthesis parameters, plus the natural-intonation prior that
// feeds pitch correction.
#pragma once

#include "augment/performance_note.h"
#include "core/rng.h"
#include "expression/note_expression.h"
#include "expression/synthesis_params.h"

namespace choralegen {

/// Physical mappings for the six expression controls. The controls are
/// defined only as scalars, so every constant here is a declared choice.
struct RenderConfig {
  double frame_rate = 250.0;
  int num_harmonics = 64;
  int num_noise_bands = 65;

  // vibrato: sinusoidal f0 modulation, depth scaled by the control.
  double vibrato_rate_hz = 5.5;
  double vibrato_depth_st = 0.5;     ///< depth at vibrato = 1, in semitones
  double vibrato_onset_frac = 0.25;  ///< delay as a fraction of note duration

  // volume -> peak amplitude (linear).
  double amp_peak_min = 0.02;
  double amp_peak_max = 0.30;

  // Envelope shape: attack to the apex, sustain, release.
  double sustain_level = 0.8;   ///< fraction of peak after the apex
  double attack_min_s = 0.010;
  double release_s = 0.040;

  // volume_fluctuation: low-frequency amplitude modulation.
  double fluctuation_rate_hz = 3.0;
  double fluctuation_depth = 0.35;  ///< relative depth at fluctuation = 1

  // brightness tilts the harmonic distribution c_k ~ k^-gamma.
  double brightness_gamma_max = 3.0;  ///< dark (brightness = 0)
  double brightness_gamma_min = 1.0;  ///< bright (brightness = 1)

  // attack_noise scales band magnitudes over an onset window.
  double attack_window_s = 0.060;
  double attack_noise_gain = 0.05;
  double noise_floor = 5e-4;  ///< sustained breath level at full volume

  void validate() const;
};

/// Per-note intonation deviation injected before pitch correction: a constant
/// sharp-skewed bias plus a slow random walk.
struct IntonationConfig {
  double bias_mean_st = 0.10;
  double bias_std_st = 0.05;
  double drift_std_st = 0.10;  ///< std of the walk's endpoint over the note
};

/// Renders one note into a synthesis-parameter segment on the stem frame
/// grid. Frame indices are lround(onset * frame_rate) inclusive to
/// lround(offset * frame_rate) exclusive, which tiles abutting notes without
/// overlap. The f0 track holds the note pitch plus vibrato; intonation and
/// pitch correction are applied separately.
NoteSegment renderSynthesisParams(const PerformanceNote& note,
                                  const NoteExpression& expr,
                                  const RenderConfig& config);

/// Adds the natural-intonation deviation to a rendered segment's f0 (in
/// place) and returns the per-frame deviation that was added.
std::vector<double> applyIntonationPrior(NoteSegment& segment,
                                         const IntonationConfig& config,
                                         Rng& rng);

}  // namespace choralegen
