// Per-instrument priors over note expression controls. A stand-in for a
// learned expression generator: each field is drawn from a clamped normal
// with configurable per-instrument mean and spread.
#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "augment/performance_note.h"
#include "core/rng.h"
#include "core/types.h"
#include "expression/note_expression.h"

namespace choralegen {

struct ExpressionPrior {
  /// Field order matches kExpressionFieldNames.
  std::array<double, 6> mean = {0.55, 0.25, 0.35, 0.30, 0.50, 0.30};
  std::array<double, 6> stddev = {0.10, 0.10, 0.12, 0.12, 0.10, 0.10};
};

class ExpressionPriorTable {
 public:
  /// Priors for all 13 instruments with mild per-family flavoring.
  static ExpressionPriorTable defaults();

  void set(InstrumentId id, const ExpressionPrior& prior) { priors_[id] = prior; }

  /// Throws std::out_of_range for instruments without a prior.
  const ExpressionPrior& at(InstrumentId id) const;

  const std::map<InstrumentId, ExpressionPrior>& priors() const { return priors_; }

 private:
  std::map<InstrumentId, ExpressionPrior> priors_;
};

/// One NoteExpression per note, fields clamped to [0, 1]. Deterministic given
/// the rng seed; throws if the instrument has no prior.
std::vector<NoteExpression> generateExpressions(
    std::span<const PerformanceNote> notes, InstrumentId instrument,
    const ExpressionPriorTable& table, Rng& rng);

}  // namespace choralegen
