// Procedural baseline note model: first-order voice-leading Markov sampling
// over scale degrees with simple counterpoint constraints. It stands in for
// a trained infilling network so the Gibbs sampler can run end-to-end.
#pragma once

#include <array>
#include <vector>

#include "score/note_model.h"
#include "score/pitch_range.h"

namespace choralegen {

struct MarkovModelConfig {
  /// Pitch class of the tonic (0 = C). The model draws from the major scale
  /// of this key.
  int key_root = 0;
  /// Candidate pitches are restricted to [min, max] of each part, so sampled
  /// rolls stay inside the rejection table by construction.
  PitchRangeTable ranges;
  /// Interval decay scale in semitones; smaller favors stepwise motion.
  double interval_temperature = 2.5;
  /// Multiplier for repeating the previous pitch (sustains notes across
  /// sixteenth steps).
  double hold_bonus = 2.0;
};

class MarkovNoteModel : public NoteModel {
 public:
  explicit MarkovNoteModel(MarkovModelConfig config = {});

  std::vector<uint8_t> conditionalSample(const PianoRoll& roll,
                                         const std::vector<Cell>& mask,
                                         Rng& rng) const override;

 private:
  double candidateWeight(int pitch, int voice,
                         const std::array<int, 3>& melodic_context,
                         const std::array<int, kNumParts>& simultaneous,
                         const std::array<int, kNumParts>& previous) const;

  MarkovModelConfig config_;
  std::array<std::vector<int>, kNumParts> candidates_;
};

}  // namespace choralegen
