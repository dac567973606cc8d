#pragma once

#include "core/rng.h"

namespace choralegen {

/// Truncated normal distribution of per-note timing offsets, in seconds.
struct MicrotimingConfig {
  double mu_s = 0.0;
  double sigma_s = 0.015;
  double bound_s = 0.050;

  void validate() const;
};

/// One draw from normal(mu, sigma) truncated to [-bound, +bound], sampled by
/// rejection from the parent normal (acceptance ~99.9% at the defaults).
double sampleMicrotiming(const MicrotimingConfig& config, Rng& rng);

}  // namespace choralegen
