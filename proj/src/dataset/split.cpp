#include "dataset/split.h"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace choralegen {

std::string_view splitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kValid: return "valid";
    case Split::kTest: return "test";
  }
  return "train";
}

Split splitFromName(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "valid") return Split::kValid;
  if (name == "test") return Split::kTest;
  throw std::invalid_argument("unknown split name: " + std::string(name));
}

void SplitPolicy::validate() const {
  if (train < 0.0 || valid < 0.0 || test < 0.0) {
    throw std::invalid_argument("split fractions must be >= 0");
  }
  if (std::abs(train + valid + test - 1.0) > 1e-9) {
    throw std::invalid_argument("split fractions must sum to 1");
  }
}

Split assignSplit(std::string_view track_id, const SplitPolicy& policy) {
  policy.validate();
  uint64_t hash = 0xcbf29ce484222325ULL;  // FNV-1a 64
  for (char c : track_id) {
    hash ^= static_cast<uint8_t>(c);
    hash *= 0x100000001b3ULL;
  }
  const double u = static_cast<double>(hash >> 11) * 0x1.0p-53;
  if (u < policy.train) return Split::kTrain;
  if (u < policy.train + policy.valid) return Split::kValid;
  return Split::kTest;
}

}  // namespace choralegen
