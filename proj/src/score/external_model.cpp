#include "score/external_model.h"

#include <stdexcept>

namespace choralegen {

ExternalScoreModel::ExternalScoreModel(std::vector<PianoRoll> scores,
                                       size_t index)
    : scores_(std::move(scores)) {
  if (scores_.empty()) {
    throw std::invalid_argument("external score model needs at least one score");
  }
  index_ = index % scores_.size();
}

std::vector<uint8_t> ExternalScoreModel::conditionalSample(
    const PianoRoll& roll, const std::vector<Cell>& mask, Rng& rng) const {
  (void)roll;
  (void)rng;
  const PianoRoll& score = scores_[index_];
  std::vector<uint8_t> result;
  result.reserve(mask.size());
  for (const Cell& cell : mask) result.push_back(score.at(cell));
  return result;
}

}  // namespace choralegen
