#include "augment/timing.h"

#include <algorithm>
#include <stdexcept>

namespace choralegen {

double stepSeconds(int bpm) {
  if (bpm < 1 || bpm > 1000) {
    throw std::invalid_argument("bpm must lie in [1, 1000]");
  }
  return (60.0 / bpm) / 4.0;
}

std::vector<PerformanceNote> realizeTiming(std::span<const ScoreNote> notes,
                                           int bpm,
                                           const MicrotimingConfig& microtiming,
                                           Rng& rng) {
  const double step_s = stepSeconds(bpm);

  std::vector<PerformanceNote> result;
  result.reserve(notes.size());
  for (const ScoreNote& note : notes) {
    const double offset = sampleMicrotiming(microtiming, rng);
    PerformanceNote out;
    out.part = note.part;
    out.pitch = note.pitch;
    out.quantized_onset_step = note.onset_step;
    out.quantized_duration_steps = note.duration_steps;
    out.timing_offset_s = offset;
    out.onset_s = note.onset_step * step_s + offset;
    out.offset_s = out.onset_s + note.duration_steps * step_s;
    result.push_back(out);
  }

  // Overlap repair per part, left to right. Keeps a 1 ms minimum duration
  // even in degenerate configurations.
  constexpr double kMinDuration = 1e-3;
  for (int part = 0; part < kNumParts; ++part) {
    std::vector<size_t> order;
    for (size_t i = 0; i < result.size(); ++i) {
      if (static_cast<int>(result[i].part) == part) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return result[a].quantized_onset_step < result[b].quantized_onset_step;
    });
    for (size_t k = 0; k + 1 < order.size(); ++k) {
      PerformanceNote& cur = result[order[k]];
      PerformanceNote& next = result[order[k + 1]];
      if (cur.offset_s > next.onset_s) {
        double boundary = 0.5 * (next.onset_s + cur.offset_s);
        boundary = std::max(boundary, cur.onset_s + kMinDuration);
        boundary = std::min(boundary, next.offset_s - kMinDuration);
        cur.offset_s = boundary;
        next.onset_s = boundary;
      }
    }
  }

  // Clamp the first note of each part to nonnegative time.
  for (PerformanceNote& note : result) {
    if (note.onset_s < 0.0) note.onset_s = 0.0;
    if (note.offset_s <= note.onset_s) note.offset_s = note.onset_s + kMinDuration;
  }
  return result;
}

}  // namespace choralegen
