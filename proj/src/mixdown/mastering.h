// Stem normalization and mixing: each stem is normalized to the target
// integrated loudness, summed into an instantaneous mixture, and a uniform
// guard gain pulls the mix peak down to the ceiling when needed.
#pragma once

#include <vector>

#include "core/audio_buffer.h"

namespace choralegen {

struct MasteringConfig {
  double target_lufs = -13.0;
  double peak_ceiling_dbfs = -1.0;
  /// True-peak (oversampled) measurement is not used; the guard watches
  /// sample peaks.
  bool use_sample_peak = true;
};

struct NormalizeResult {
  AudioBuffer audio;
  double gain_db = 0.0;
  double measured_lufs = 0.0;
};

/// Scales the buffer so its integrated loudness hits the target.
/// Throws std::runtime_error on the silence sentinel.
NormalizeResult normalizeToLufs(const AudioBuffer& audio, double target_lufs);

struct MixResult {
  AudioBuffer mix;
  std::vector<AudioBuffer> stems;  ///< inputs with the guard gain applied
  double peak_guard_gain_db = 0.0;  ///< <= 0
  double mix_peak_dbfs = 0.0;       ///< after the guard
};

/// Sums stems sample-wise. If the mix sample peak exceeds the ceiling, one
/// scalar gain is applied to the mix and every stem so the final peak sits
/// exactly at the ceiling; mixture consistency (mix == sum of stems) is
/// preserved either way.
MixResult mixStems(std::vector<AudioBuffer> stems, const MasteringConfig& config = {});

/// Per-stem record of the full mastering pass.
struct StemMastering {
  double gain_db = 0.0;          ///< normalization gain (pre-guard)
  double measured_lufs = 0.0;    ///< loudness before normalization
  bool silent = false;           ///< unmeasurable stem kept at unity gain
};

struct MasterResult {
  MixResult mix;
  std::vector<StemMastering> stems;
};

/// normalize (silent stems keep unity gain and are flagged) + mix + guard.
MasterResult masterTrack(const std::vector<AudioBuffer>& raw_stems,
                         const MasteringConfig& config = {});

}  // namespace choralegen
