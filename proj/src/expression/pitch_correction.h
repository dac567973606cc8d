// Random per-note pitch correction: transposes each note's f0 contour so its
// note-mean deviation from 12-TET shrinks by a random factor.
#pragma once

#include <span>
#include <vector>

#include "core/rng.h"
#include "expression/synthesis_params.h"

namespace choralegen {

/// Inputs for correcting one note: the scored 12-TET pitch, the framewise
/// predicted offset from it (in semitones), the note-averaged offset, and the
/// correction amount alpha in [0, 1].
struct PitchCorrectionInputs {
  double note_pitch_st = 0.0;
  std::vector<double> delta_st;
  double delta_mean_st = 0.0;
  double alpha = 0.0;
};

/// Builds inputs from a note's framewise deviation, computing the mean.
PitchCorrectionInputs makePitchCorrectionInputs(double note_pitch_st,
                                                std::vector<double> delta_st,
                                                double alpha);

/// Framewise corrected f0: note + delta - alpha * mean(delta).
/// alpha = 0 leaves the contour unchanged; alpha = 1 transposes it so the
/// note-mean lands exactly on the scored pitch.
std::vector<double> applyPitchCorrection(const PitchCorrectionInputs& inputs);

/// How alpha is drawn per note.
enum class AlphaMode {
  kUniform,  ///< alpha ~ U[0, 1]
  kZero,     ///< no correction
  kOne,      ///< full correction
  kFixed,    ///< constant configured value
};

struct AlphaPolicy {
  AlphaMode mode = AlphaMode::kUniform;
  double fixed_value = 0.5;

  double draw(Rng& rng) const;
};

/// Corrects a rendered segment in place. The segment's current f0 minus the
/// scored pitch is taken as the predicted offset (vibrato included), so the
/// correction transposes the whole contour by alpha times its mean offset.
/// Returns {alpha, note-mean deviation after correction}.
struct CorrectionRecord {
  double alpha = 0.0;
  double mean_deviation_st = 0.0;
};

CorrectionRecord correctSegment(NoteSegment& segment, double note_pitch_st,
                                const AlphaPolicy& policy, Rng& rng);

}  // namespace choralegen
