// Blocked Gibbs sampling over pianoroll cells: repeatedly masks a random
// subset of cells and asks the note model to rewrite them, with the mask
// fraction annealed over the run.
#pragma once

#include <cstdint>
#include <vector>

#include "score/note_model.h"
#include "score/pianoroll.h"
#include "score/pitch_range.h"

namespace choralegen {

/// Mask fraction as a function of step index, linearly annealed.
struct MaskSchedule {
  double start_fraction = 1.0;
  double end_fraction = 1.0 / 128.0;

  double at(int step, int num_steps) const;
  void validate() const;
};

struct GibbsConfig {
  int num_steps = 1024;
  uint64_t seed = 0;
  MaskSchedule schedule;

  void validate() const;
};

/// One blocked Gibbs step: the masked cells are replaced by the model's
/// conditional sample, every other cell is preserved exactly.
PianoRoll gibbsStep(const PianoRoll& roll, const std::vector<Cell>& mask,
                    const NoteModel& model, Rng& rng);

/// Runs the full annealed schedule and returns the final roll. Deterministic
/// given (model, config.seed).
PianoRoll sampleChorale(const NoteModel& model, const GibbsConfig& config);

struct AcceptedChorale {
  PianoRoll roll;
  /// Number of sampling attempts consumed (1 = accepted first try).
  int attempts = 1;
};

/// Samples until checkRanges accepts, redrawing with a fresh derived seed on
/// each rejection. Throws after `max_attempts` consecutive rejections.
AcceptedChorale sampleAcceptedChorale(const NoteModel& model,
                                      const GibbsConfig& config,
                                      const PitchRangeTable& table,
                                      int max_attempts = 100);

}  // namespace choralegen
