#include "score/pitch_range.h"

#include <stdexcept>

namespace choralegen {

void PitchRangeTable::validate() const {
  if (margin < 0) throw std::invalid_argument("range margin must be >= 0");
  for (const PartRange& range : parts) {
    if (range.min_pitch >= range.max_pitch) {
      throw std::invalid_argument("part range must satisfy min < max");
    }
  }
}

RangeCheckResult checkRanges(const PianoRoll& roll, const PitchRangeTable& table) {
  table.validate();
  RangeCheckResult result;
  for (int voice = 0; voice < PianoRoll::kNumVoices; ++voice) {
    const PartRange& range = table.parts[voice];
    const int lo = range.min_pitch - table.margin;
    const int hi = range.max_pitch + table.margin;
    for (int step = 0; step < PianoRoll::kNumSteps; ++step) {
      const int pitch = roll.at(voice, step);
      if (pitch < lo || pitch > hi) {
        result.violations.push_back(
            RangeViolation{static_cast<Part>(voice), step, pitch});
      }
    }
  }
  result.accepted = result.violations.empty();
  return result;
}

}  // namespace choralegen
