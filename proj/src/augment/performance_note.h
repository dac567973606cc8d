#pragma once

#include "core/types.h"

namespace choralegen {

/// A note with realized timing: quantized grid position plus the microtiming
/// offset applied to it. Within a part, notes never overlap; overlap caused
/// by offsetting is repaired at realization time.
struct PerformanceNote {
  Part part = Part::kSoprano;
  InstrumentId instrument = InstrumentId::kViolin;
  int pitch = 60;
  double onset_s = 0.0;
  double offset_s = 0.0;
  int quantized_onset_step = 0;
  int quantized_duration_steps = 1;
  double timing_offset_s = 0.0;

  double durationSeconds() const { return offset_s - onset_s; }
};

}  // namespace choralegen
