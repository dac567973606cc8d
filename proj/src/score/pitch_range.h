// Per-part pitch range table and the accept/reject check applied to
// sampled rolls.
#pragma once

#include <array>
#include <vector>

#include "core/types.h"
#include "score/pianoroll.h"

namespace choralegen {

/// Allowed pitch span of one part.
struct PartRange {
  int min_pitch = 0;
  int max_pitch = 127;
};

/// Min/max pitch per SATB part plus the rejection margin in semitones.
/// A roll is accepted iff every pitch p of part v satisfies
/// min_v - margin <= p <= max_v + margin (boundaries inclusive).
struct PitchRangeTable {
  std::array<PartRange, kNumParts> parts = {{
      {60, 81},  // soprano
      {53, 74},  // alto
      {48, 69},  // tenor
      {36, 64},  // bass
  }};
  int margin = 3;

  void validate() const;
};

struct RangeViolation {
  Part part = Part::kSoprano;
  int step = 0;
  int pitch = 0;

  bool operator==(const RangeViolation&) const = default;
};

struct RangeCheckResult {
  bool accepted = true;
  std::vector<RangeViolation> violations;
};

/// Scans all cells and reports every out-of-margin pitch.
RangeCheckResult checkRanges(const PianoRoll& roll, const PitchRangeTable& table);

}  // namespace choralegen
