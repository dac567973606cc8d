#include "augment/microtiming.h"

#include <stdexcept>

namespace choralegen {

void MicrotimingConfig::validate() const {
  if (sigma_s <= 0.0 || bound_s <= 0.0) {
    throw std::invalid_argument("microtiming sigma and bound must be > 0");
  }
}

double sampleMicrotiming(const MicrotimingConfig& config, Rng& rng) {
  config.validate();
  // Degenerate case: the interval does not contain any parent mass worth
  // rejecting over would still terminate, but guard against a mu far outside
  // the bounds producing a near-infinite loop.
  if (config.mu_s - 8.0 * config.sigma_s > config.bound_s ||
      config.mu_s + 8.0 * config.sigma_s < -config.bound_s) {
    throw std::invalid_argument("microtiming mean too far outside bounds");
  }
  while (true) {
    const double draw = rng.normal(config.mu_s, config.sigma_s);
    if (draw >= -config.bound_s && draw <= config.bound_s) return draw;
  }
}

}  // namespace choralegen
