#include "expression/priors.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace choralegen {

ExpressionPriorTable ExpressionPriorTable::defaults() {
  using I = InstrumentId;
  ExpressionPriorTable table;

  ExpressionPrior strings;
  strings.mean = {0.55, 0.25, 0.35, 0.45, 0.50, 0.25};
  ExpressionPrior winds;
  winds.mean = {0.55, 0.30, 0.30, 0.25, 0.45, 0.35};
  ExpressionPrior brass;
  brass.mean = {0.60, 0.20, 0.25, 0.15, 0.55, 0.40};

  for (I id : {I::kViolin, I::kViola, I::kCello, I::kDoubleBass}) {
    table.set(id, strings);
  }
  for (I id : {I::kFlute, I::kOboe, I::kClarinet, I::kSaxophone, I::kBassoon}) {
    table.set(id, winds);
  }
  for (I id : {I::kTrumpet, I::kFrenchHorn, I::kTrombone, I::kTuba}) {
    table.set(id, brass);
  }
  return table;
}

const ExpressionPrior& ExpressionPriorTable::at(InstrumentId id) const {
  const auto it = priors_.find(id);
  if (it == priors_.end()) {
    throw std::out_of_range("no expression prior for instrument " +
                            std::string(instrumentName(id)));
  }
  return it->second;
}

std::vector<NoteExpression> generateExpressions(
    std::span<const PerformanceNote> notes, InstrumentId instrument,
    const ExpressionPriorTable& table, Rng& rng) {
  if (notes.empty()) {
    throw std::invalid_argument("generateExpressions needs at least one note");
  }
  const ExpressionPrior& prior = table.at(instrument);

  std::vector<NoteExpression> result;
  result.reserve(notes.size());
  for (size_t i = 0; i < notes.size(); ++i) {
    std::array<double, 6> fields;
    for (int f = 0; f < 6; ++f) {
      fields[f] = std::clamp(rng.normal(prior.mean[f], prior.stddev[f]), 0.0, 1.0);
    }
    NoteExpression expr;
    expr.volume = fields[0];
    expr.volume_fluctuation = fields[1];
    expr.volume_peak_position = fields[2];
    expr.vibrato = fields[3];
    expr.brightness = fields[4];
    expr.attack_noise = fields[5];
    result.push_back(expr);
  }
  return result;
}

}  // namespace choralegen
