#include "mixdown/loudness.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace choralegen {

KWeighting::KWeighting(int sample_rate) {
  if (sample_rate <= 0) throw std::invalid_argument("sample rate must be > 0");
  const double fs = sample_rate;

  // Stage 1: high-shelf pre-filter (head effects), +4 dB above ~1.7 kHz.
  {
    const double gain_db = 3.999843853973347;
    const double f0 = 1681.974450955533;
    const double q = 0.7071752369554196;

    const double k = std::tan(std::numbers::pi * f0 / fs);
    const double vh = std::pow(10.0, gain_db / 20.0);
    const double vb = std::pow(vh, 0.4996667741545416);
    const double a0 = 1.0 + k / q + k * k;

    shelf.b0 = (vh + vb * k / q + k * k) / a0;
    shelf.b1 = 2.0 * (k * k - vh) / a0;
    shelf.b2 = (vh - vb * k / q + k * k) / a0;
    shelf.a1 = 2.0 * (k * k - 1.0) / a0;
    shelf.a2 = (1.0 - k / q + k * k) / a0;
  }

  // Stage 2: RLB high-pass.
  {
    const double f0 = 38.13547087602444;
    const double q = 0.5003270373238773;

    const double k = std::tan(std::numbers::pi * f0 / fs);
    const double a0 = 1.0 + k / q + k * k;

    highpass.b0 = 1.0;
    highpass.b1 = -2.0;
    highpass.b2 = 1.0;
    highpass.a1 = 2.0 * (k * k - 1.0) / a0;
    highpass.a2 = (1.0 - k / q + k * k) / a0;
  }
}

std::optional<double> integratedLoudness(std::span<const double> samples,
                                         int sample_rate) {
  const size_t block_size = static_cast<size_t>(std::lround(0.400 * sample_rate));
  const size_t hop = static_cast<size_t>(std::lround(0.100 * sample_rate));
  if (samples.size() < block_size) {
    throw std::invalid_argument("buffer shorter than one 400 ms gating block");
  }

  KWeighting filter(sample_rate);
  std::vector<double> weighted(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    weighted[i] = filter.process(samples[i]);
  }

  // Mean square of every complete 400 ms block, hopped by 100 ms.
  std::vector<double> block_power;
  for (size_t start = 0; start + block_size <= samples.size(); start += hop) {
    double sum = 0.0;
    for (size_t i = start; i < start + block_size; ++i) {
      sum += weighted[i] * weighted[i];
    }
    block_power.push_back(sum / static_cast<double>(block_size));
  }

  constexpr double kOffsetDb = -0.691;
  constexpr double kAbsoluteGateDb = -70.0;
  const auto block_loudness = [&](double power) {
    return power > 0.0 ? kOffsetDb + 10.0 * std::log10(power)
                       : -1e12;
  };

  // Absolute gate.
  double sum_abs = 0.0;
  size_t count_abs = 0;
  for (double power : block_power) {
    if (block_loudness(power) > kAbsoluteGateDb) {
      sum_abs += power;
      ++count_abs;
    }
  }
  if (count_abs == 0) return std::nullopt;

  // Relative gate: 10 LU below the mean of the absolute-gated set.
  const double relative_gate_db =
      kOffsetDb + 10.0 * std::log10(sum_abs / static_cast<double>(count_abs)) -
      10.0;

  double sum_rel = 0.0;
  size_t count_rel = 0;
  for (double power : block_power) {
    const double loudness = block_loudness(power);
    if (loudness > kAbsoluteGateDb && loudness > relative_gate_db) {
      sum_rel += power;
      ++count_rel;
    }
  }
  if (count_rel == 0) return std::nullopt;

  return kOffsetDb + 10.0 * std::log10(sum_rel / static_cast<double>(count_rel));
}

}  // namespace choralegen
