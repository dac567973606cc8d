// Ensemble definitions and instrument assignment. Fixed ensembles always map
// to the same quartet; the random ensemble draws each part's instrument from
// a per-part pool.
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "core/rng.h"
#include "core/types.h"
#include "score/pianoroll.h"

namespace choralegen {

struct EnsembleSpec {
  Ensemble kind = Ensemble::kString;
  /// Per-part candidate instruments. Singleton pools for fixed ensembles.
  std::array<std::vector<InstrumentId>, kNumParts> pools;

  void validate() const;
};

/// The built-in ensemble definitions.
EnsembleSpec ensembleSpec(Ensemble kind);

struct Orchestration {
  std::array<InstrumentId, kNumParts> instruments;
  /// Stem labels, e.g. "violin_1"/"violin_2" when an instrument repeats.
  std::array<std::string, kNumParts> labels;
};

/// Fixed ensembles return their fixed mapping regardless of rng; the random
/// ensemble draws uniformly per part.
Orchestration assignOrchestration(const EnsembleSpec& spec, Rng& rng);

/// Playable MIDI range of an instrument, used for register fitting.
struct InstrumentRange {
  int min_pitch = 0;
  int max_pitch = 127;
};

using InstrumentRangeTable = std::map<InstrumentId, InstrumentRange>;

/// Conservative default playable ranges for all 13 instruments.
InstrumentRangeTable defaultInstrumentRanges();

/// Whole-octave shift (in semitones, multiple of 12) that moves the span
/// [min_pitch, max_pitch] into the instrument's range, or as close as
/// possible when it cannot fit entirely. Returns 0 when already in range.
int octaveShiftForRange(int min_pitch, int max_pitch, const InstrumentRange& range);

/// Applies octaveShiftForRange to one part's notes (whole part, never
/// per-note). Returns the shift applied.
int fitPartToInstrument(std::vector<ScoreNote>& part_notes,
                        const InstrumentRange& range);

}  // namespace choralegen
