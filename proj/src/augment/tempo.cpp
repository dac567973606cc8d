#include "augment/tempo.h"

#include <stdexcept>

namespace choralegen {

void TempoConfig::validate() const {
  if (min_bpm <= 0 || max_bpm <= 0 || min_bpm > max_bpm) {
    throw std::invalid_argument("tempo range must be positive with min <= max");
  }
}

int sampleTempo(const TempoConfig& config, Rng& rng) {
  config.validate();
  return static_cast<int>(rng.uniformInt(config.min_bpm, config.max_bpm));
}

}  // namespace choralegen
