#pragma once

#include <string>
#include <string_view>

namespace choralegen {

enum class Split : int { kTrain = 0, kValid = 1, kTest = 2 };

std::string_view splitName(Split split);
Split splitFromName(std::string_view name);

/// Train/valid/test fractions; must sum to 1.
struct SplitPolicy {
  double train = 0.8;
  double valid = 0.1;
  double test = 0.1;

  void validate() const;
};

/// Deterministic assignment by hashing the track id (FNV-1a 64 mapped to
/// [0, 1)). Stable across runs and platforms.
Split assignSplit(std::string_view track_id, const SplitPolicy& policy);

}  // namespace choralegen
