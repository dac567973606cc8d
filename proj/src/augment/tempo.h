#pragma once

#include "core/rng.h"

namespace choralegen {

/// Tempo range in BPM; draws are integer and uniform over [min, max].
struct TempoConfig {
  int min_bpm = 50;
  int max_bpm = 150;

  void validate() const;
};

int sampleTempo(const TempoConfig& config, Rng& rng);

}  // namespace choralegen
