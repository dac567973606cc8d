#include "score/gibbs.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "core/rng.h"

namespace choralegen {

double MaskSchedule::at(int step, int num_steps) const {
  if (num_steps <= 1) return start_fraction;
  const double t = static_cast<double>(step) / (num_steps - 1);
  return start_fraction + t * (end_fraction - start_fraction);
}

void MaskSchedule::validate() const {
  if (start_fraction <= 0.0 || start_fraction > 1.0 || end_fraction <= 0.0 ||
      end_fraction > 1.0) {
    throw std::invalid_argument("mask fractions must lie in (0, 1]");
  }
}

void GibbsConfig::validate() const {
  if (num_steps < 1) throw std::invalid_argument("num_steps must be >= 1");
  schedule.validate();
}

PianoRoll gibbsStep(const PianoRoll& roll, const std::vector<Cell>& mask,
                    const NoteModel& model, Rng& rng) {
  if (mask.empty()) throw std::invalid_argument("gibbs step needs a nonempty mask");
  for (const Cell& cell : mask) {
    if (cell.voice < 0 || cell.voice >= PianoRoll::kNumVoices ||
        cell.step < 0 || cell.step >= PianoRoll::kNumSteps) {
      throw std::out_of_range("mask cell out of bounds");
    }
  }

  const std::vector<uint8_t> pitches = model.conditionalSample(roll, mask, rng);
  if (pitches.size() != mask.size()) {
    throw std::runtime_error(
        "note model contract violation: expected " +
        std::to_string(mask.size()) + " pitches, got " +
        std::to_string(pitches.size()));
  }

  PianoRoll next = roll;
  for (size_t i = 0; i < mask.size(); ++i) next.set(mask[i], pitches[i]);
  return next;
}

namespace {

/// Uniform mask of `count` distinct cells via partial Fisher-Yates.
std::vector<Cell> drawMask(int count, Rng& rng) {
  static_assert(PianoRoll::kNumCells == 512);
  std::array<int16_t, PianoRoll::kNumCells> indices;
  std::iota(indices.begin(), indices.end(), 0);
  std::vector<Cell> mask;
  mask.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int j = static_cast<int>(rng.uniformInt(i, PianoRoll::kNumCells - 1));
    std::swap(indices[i], indices[j]);
    mask.push_back(Cell{indices[i] / PianoRoll::kNumSteps,
                        indices[i] % PianoRoll::kNumSteps});
  }
  return mask;
}

}  // namespace

PianoRoll sampleChorale(const NoteModel& model, const GibbsConfig& config) {
  config.validate();
  Rng rng(config.seed);

  // Initialize by rewriting every cell with no context.
  std::vector<Cell> full_mask;
  full_mask.reserve(PianoRoll::kNumCells);
  for (int voice = 0; voice < PianoRoll::kNumVoices; ++voice) {
    for (int step = 0; step < PianoRoll::kNumSteps; ++step) {
      full_mask.push_back(Cell{voice, step});
    }
  }
  PianoRoll roll = gibbsStep(PianoRoll{}, full_mask, model, rng);

  for (int step = 0; step < config.num_steps; ++step) {
    const double fraction = config.schedule.at(step, config.num_steps);
    const int count = std::max(
        1, static_cast<int>(std::lround(fraction * PianoRoll::kNumCells)));
    const std::vector<Cell> mask = drawMask(count, rng);
    roll = gibbsStep(roll, mask, model, rng);
  }
  return roll;
}

AcceptedChorale sampleAcceptedChorale(const NoteModel& model,
                                      const GibbsConfig& config,
                                      const PitchRangeTable& table,
                                      int max_attempts) {
  if (max_attempts < 1) throw std::invalid_argument("max_attempts must be >= 1");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    GibbsConfig attempt_config = config;
    attempt_config.seed = deriveSeed(config.seed, {rng_tag::kScore,
                                     static_cast<uint64_t>(attempt)});
    PianoRoll roll = sampleChorale(model, attempt_config);
    if (checkRanges(roll, table).accepted) {
      return AcceptedChorale{std::move(roll), attempt + 1};
    }
  }
  throw std::runtime_error("chorale sampling rejected " +
                           std::to_string(max_attempts) +
                           " consecutive candidates");
}

}  // namespace choralegen
