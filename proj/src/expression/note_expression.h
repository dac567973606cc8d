#pragma once

#include <array>

namespace choralegen {

/// The six per-note performance controls, each normalized to [0, 1].
struct NoteExpression {
  double volume = 0.5;
  double volume_fluctuation = 0.2;
  double volume_peak_position = 0.3;
  double vibrato = 0.2;
  double brightness = 0.5;
  double attack_noise = 0.3;

  std::array<double, 6> asArray() const {
    return {volume,  volume_fluctuation, volume_peak_position,
            vibrato, brightness,         attack_noise};
  }

  bool inRange() const {
    for (double v : asArray()) {
      if (v < 0.0 || v > 1.0) return false;
    }
    return true;
  }
};

inline constexpr std::array<const char*, 6> kExpressionFieldNames = {
    "volume",  "volume_fluctuation", "volume_peak_position",
    "vibrato", "brightness",         "attack_noise"};

}  // namespace choralegen
