// Note model backed by pre-composed scores. Useful when a corpus of real
// chorales should be rendered instead of sampled material.
#pragma once

#include <vector>

#include "score/note_model.h"

namespace choralegen {

/// Fills masked cells from one fixed score, so Gibbs sampling converges to
/// that score after a single full-mask step.
class ExternalScoreModel : public NoteModel {
 public:
  /// `scores` must be nonempty; `index` selects the score (wrapped).
  ExternalScoreModel(std::vector<PianoRoll> scores, size_t index);

  std::vector<uint8_t> conditionalSample(const PianoRoll& roll,
                                         const std::vector<Cell>& mask,
                                         Rng& rng) const override;

  size_t scoreCount() const { return scores_.size(); }

 private:
  std::vector<PianoRoll> scores_;
  size_t index_;
};

}  // namespace choralegen
