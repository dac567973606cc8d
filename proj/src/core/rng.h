// Deterministic random number generation.
//
// Every random draw in the pipeline flows through this header so that a
// generated corpus is a pure function of the configured seed. The generator
// is splitmix64: the mixing function is also exposed as a stateless
// counter-based stream (used for synthesis noise and dither), so workers can
// draw from disjoint substreams regardless of scheduling.
#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace choralegen {

/// splitmix64 finalizer; a bijective 64-bit mix.
constexpr uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent substream seed from a parent seed and a list of
/// branch words (ensemble index, track index, purpose tag, ...).
constexpr uint64_t deriveSeed(uint64_t seed, std::initializer_list<uint64_t> words) {
  uint64_t s = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  for (uint64_t w : words) {
    s = mix64(s ^ mix64(w + 0x9e3779b97f4a7c15ULL));
  }
  return s;
}

/// Purpose tags for substream derivation. Values are arbitrary but frozen:
/// changing them changes every generated corpus.
namespace rng_tag {
inline constexpr uint64_t kScore = 1;
inline constexpr uint64_t kTempo = 2;
inline constexpr uint64_t kMicrotiming = 3;
inline constexpr uint64_t kOrchestration = 4;
inline constexpr uint64_t kExpression = 5;
inline constexpr uint64_t kIntonation = 6;
inline constexpr uint64_t kAlpha = 7;
inline constexpr uint64_t kNoise = 8;
inline constexpr uint64_t kDither = 9;
}  // namespace rng_tag

/// Sequential splitmix64 generator with the usual scalar draws.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t nextU64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(nextU64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], both inclusive; unbiased via rejection.
  int64_t uniformInt(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    const uint64_t reject_above = UINT64_MAX - UINT64_MAX % span;
    uint64_t draw;
    do {
      draw = nextU64();
    } while (draw >= reject_above);
    return lo + static_cast<int64_t>(draw % span);
  }

  /// Standard normal via Box-Muller; the spare value is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Stateless gaussian stream with random access, keyed by a seed. Sample i is
/// a pure function of (key, i), which keeps synthesis noise reproducible under
/// any parallel schedule.
class GaussianStream {
 public:
  explicit GaussianStream(uint64_t key) : key_(key) {}

  double at(uint64_t index) const {
    // Two counter-derived uniforms -> one Box-Muller normal (cos branch).
    double u1 = static_cast<double>(mix64(key_ ^ (2 * index + 1)) >> 11) * 0x1.0p-53;
    const double u2 =
        static_cast<double>(mix64(key_ ^ (2 * index + 2)) >> 11) * 0x1.0p-53;
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  uint64_t key_;
};

/// Uniform [0,1) stream with random access, for dither.
class UniformStream {
 public:
  explicit UniformStream(uint64_t key) : key_(key) {}

  double at(uint64_t index) const {
    return static_cast<double>(mix64(key_ ^ (index + 1)) >> 11) * 0x1.0p-53;
  }

 private:
  uint64_t key_;
};

}  // namespace choralegen
