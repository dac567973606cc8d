#include "augment/orchestration.h"

#include <algorithm>
#include <stdexcept>

namespace choralegen {

void EnsembleSpec::validate() const {
  for (const auto& pool : pools) {
    if (pool.empty()) {
      throw std::invalid_argument("ensemble part pool must not be empty");
    }
  }
  if (kind != Ensemble::kRandom) {
    for (const auto& pool : pools) {
      if (pool.size() != 1) {
        throw std::invalid_argument("fixed ensembles need singleton pools");
      }
    }
  }
}

EnsembleSpec ensembleSpec(Ensemble kind) {
  using I = InstrumentId;
  EnsembleSpec spec;
  spec.kind = kind;
  switch (kind) {
    case Ensemble::kString:
      // Violin 1 and Violin 2 share the instrument; labels disambiguate.
      spec.pools = {{{I::kViolin}, {I::kViolin}, {I::kViola}, {I::kCello}}};
      break;
    case Ensemble::kBrass:
      spec.pools = {{{I::kTrumpet}, {I::kFrenchHorn}, {I::kTrombone}, {I::kTuba}}};
      break;
    case Ensemble::kWoodwind:
      spec.pools = {{{I::kFlute}, {I::kOboe}, {I::kClarinet}, {I::kBassoon}}};
      break;
    case Ensemble::kRandom:
      spec.pools = {{
          {I::kViolin, I::kFlute, I::kTrumpet, I::kClarinet, I::kOboe},
          {I::kViolin, I::kViola, I::kFlute, I::kClarinet, I::kOboe,
           I::kSaxophone, I::kTrumpet, I::kFrenchHorn},
          {I::kViola, I::kCello, I::kClarinet, I::kSaxophone, I::kTrombone,
           I::kFrenchHorn},
          {I::kCello, I::kDoubleBass, I::kBassoon, I::kTuba},
      }};
      break;
  }
  return spec;
}

Orchestration assignOrchestration(const EnsembleSpec& spec, Rng& rng) {
  spec.validate();
  Orchestration result;
  for (int part = 0; part < kNumParts; ++part) {
    const auto& pool = spec.pools[part];
    if (pool.size() == 1) {
      result.instruments[part] = pool.front();
    } else {
      result.instruments[part] =
          pool[rng.uniformInt(0, static_cast<int64_t>(pool.size()) - 1)];
    }
  }
  // Label stems by instrument, suffixing duplicates in part order.
  for (int part = 0; part < kNumParts; ++part) {
    const InstrumentId id = result.instruments[part];
    const int copies =
        static_cast<int>(std::count(result.instruments.begin(),
                                    result.instruments.end(), id));
    std::string label(instrumentName(id));
    if (copies > 1) {
      int ordinal = 1;
      for (int before = 0; before < part; ++before) {
        if (result.instruments[before] == id) ++ordinal;
      }
      label += "_" + std::to_string(ordinal);
    }
    result.labels[part] = label;
  }
  return result;
}

InstrumentRangeTable defaultInstrumentRanges() {
  using I = InstrumentId;
  return InstrumentRangeTable{
      {I::kViolin, {55, 100}},    {I::kViola, {48, 91}},
      {I::kCello, {33, 76}},      {I::kDoubleBass, {28, 67}},
      {I::kFlute, {59, 96}},      {I::kOboe, {58, 91}},
      {I::kClarinet, {50, 94}},   {I::kSaxophone, {49, 81}},
      {I::kBassoon, {34, 75}},    {I::kTrumpet, {54, 86}},
      {I::kFrenchHorn, {34, 77}}, {I::kTrombone, {40, 77}},
      {I::kTuba, {26, 67}},
  };
}

int octaveShiftForRange(int min_pitch, int max_pitch,
                        const InstrumentRange& range) {
  if (min_pitch >= range.min_pitch && max_pitch <= range.max_pitch) return 0;
  // Search octave shifts, picking the one with the least out-of-range spill;
  // ties resolve toward the smaller move.
  int best_shift = 0;
  int best_spill = INT32_MAX;
  for (int octaves = -5; octaves <= 5; ++octaves) {
    const int shift = 12 * octaves;
    const int lo = min_pitch + shift;
    const int hi = max_pitch + shift;
    const int spill =
        std::max(0, range.min_pitch - lo) + std::max(0, hi - range.max_pitch);
    if (spill < best_spill ||
        (spill == best_spill && std::abs(shift) < std::abs(best_shift))) {
      best_spill = spill;
      best_shift = shift;
    }
  }
  return best_shift;
}

int fitPartToInstrument(std::vector<ScoreNote>& part_notes,
                        const InstrumentRange& range) {
  if (part_notes.empty()) return 0;
  int lo = 127;
  int hi = 0;
  for (const ScoreNote& note : part_notes) {
    lo = std::min(lo, note.pitch);
    hi = std::max(hi, note.pitch);
  }
  const int shift = octaveShiftForRange(lo, hi, range);
  if (shift != 0) {
    for (ScoreNote& note : part_notes) note.pitch += shift;
  }
  return shift;
}

}  // namespace choralegen
