#pragma once

#include <cstddef>
#include <vector>

namespace choralegen {

/// Mono floating-point audio. Nominal full scale is [-1, 1]; intermediate
/// buffers may exceed it until mastering applies the final gains.
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 16000;

  double durationSeconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
  size_t size() const { return samples.size(); }
};

}  // namespace choralegen
