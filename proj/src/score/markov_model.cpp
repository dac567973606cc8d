#include "score/markov_model.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace choralegen {

namespace {

constexpr int kUnknown = -1;

bool inMajorScale(int pitch, int root) {
  static constexpr bool kScale[12] = {true,  false, true,  false, true, true,
                                      false, true,  false, true,  false, true};
  return kScale[((pitch - root) % 12 + 12) % 12];
}

// Interval-class consonance multipliers, unison/third/fifth/sixth favored.
double consonance(int interval) {
  switch (std::abs(interval) % 12) {
    case 0: return 1.0;
    case 3: case 4: case 7: case 8: case 9: return 1.0;
    case 5: return 0.7;
    case 2: case 10: return 0.35;
    default: return 0.15;
  }
}

}  // namespace

MarkovNoteModel::MarkovNoteModel(MarkovModelConfig config)
    : config_(config) {
  config_.ranges.validate();
  for (int voice = 0; voice < kNumParts; ++voice) {
    const PartRange& range = config_.ranges.parts[voice];
    for (int pitch = range.min_pitch; pitch <= range.max_pitch; ++pitch) {
      if (inMajorScale(pitch, config_.key_root)) {
        candidates_[voice].push_back(pitch);
      }
    }
  }
}

double MarkovNoteModel::candidateWeight(
    int pitch, int voice, const std::array<int, 3>& melodic_context,
    const std::array<int, kNumParts>& simultaneous,
    const std::array<int, kNumParts>& previous) const {
  double weight = 1.0;

  const int left = melodic_context[0];
  const int right = melodic_context[1];
  if (left != kUnknown) {
    weight *= std::exp(-std::abs(pitch - left) / config_.interval_temperature);
    if (pitch == left) weight *= config_.hold_bonus;
  }
  if (right != kUnknown) {
    weight *= std::exp(-std::abs(pitch - right) / config_.interval_temperature);
  }
  if (left == kUnknown && right == kUnknown) {
    // No melodic context: prefer the middle of the part's range.
    const PartRange& range = config_.ranges.parts[voice];
    const double center = 0.5 * (range.min_pitch + range.max_pitch);
    weight *= std::exp(-std::abs(pitch - center) / 6.0);
  }

  for (int other = 0; other < kNumParts; ++other) {
    if (other == voice || simultaneous[other] == kUnknown) continue;
    const int other_pitch = simultaneous[other];
    weight *= consonance(pitch - other_pitch);
    // Keep voices in score order (higher part index = lower voice).
    if (other < voice && other_pitch < pitch) weight *= 0.02;
    if (other > voice && other_pitch > pitch) weight *= 0.02;
    // Forbid parallel unisons: both voices at a unison now and one step ago.
    if (pitch == other_pitch && previous[voice] != kUnknown &&
        previous[other] != kUnknown && previous[voice] == previous[other] &&
        previous[voice] != pitch) {
      weight = 0.0;
    }
  }
  return weight;
}

std::vector<uint8_t> MarkovNoteModel::conditionalSample(
    const PianoRoll& roll, const std::vector<Cell>& mask, Rng& rng) const {
  // Known-context table: unmasked cells plus cells filled earlier in this
  // call. Masked cells start unknown so their current values are never read.
  std::array<std::array<int, PianoRoll::kNumSteps>, PianoRoll::kNumVoices> known;
  for (int voice = 0; voice < PianoRoll::kNumVoices; ++voice) {
    for (int step = 0; step < PianoRoll::kNumSteps; ++step) {
      known[voice][step] = roll.at(voice, step);
    }
  }
  for (const Cell& cell : mask) known[cell.voice][cell.step] = kUnknown;

  std::vector<Cell> order = mask;
  std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
    return a.step != b.step ? a.step < b.step : a.voice < b.voice;
  });

  std::vector<double> weights;
  for (const Cell& cell : order) {
    const auto& candidates = candidates_[cell.voice];
    std::array<int, 3> melodic = {kUnknown, kUnknown, kUnknown};
    if (cell.step > 0) melodic[0] = known[cell.voice][cell.step - 1];
    if (cell.step + 1 < PianoRoll::kNumSteps) {
      melodic[1] = known[cell.voice][cell.step + 1];
    }
    std::array<int, kNumParts> simultaneous;
    std::array<int, kNumParts> previous;
    for (int voice = 0; voice < kNumParts; ++voice) {
      simultaneous[voice] = known[voice][cell.step];
      previous[voice] =
          cell.step > 0 ? known[voice][cell.step - 1] : kUnknown;
    }

    weights.resize(candidates.size());
    double total = 0.0;
    for (size_t i = 0; i < candidates.size(); ++i) {
      weights[i] = candidateWeight(candidates[i], cell.voice, melodic,
                                   simultaneous, previous);
      total += weights[i];
    }

    int chosen = candidates.front();
    if (total > 0.0) {
      double draw = rng.uniform() * total;
      for (size_t i = 0; i < candidates.size(); ++i) {
        draw -= weights[i];
        if (draw <= 0.0) {
          chosen = candidates[i];
          break;
        }
      }
    } else {
      chosen = candidates[rng.uniformInt(0, candidates.size() - 1)];
    }
    known[cell.voice][cell.step] = chosen;
  }

  std::vector<uint8_t> result;
  result.reserve(mask.size());
  for (const Cell& cell : mask) {
    result.push_back(static_cast<uint8_t>(known[cell.voice][cell.step]));
  }
  return result;
}

}  // namespace choralegen
