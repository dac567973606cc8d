#pragma once

#include "core/audio_buffer.h"
#include "expression/synthesis_params.h"
#include "synth/harmonic.h"
#include "synth/noise.h"

namespace choralegen {

/// Full stem render: harmonic and noise components summed sample-wise.
/// Length is frames * hop.
AudioBuffer synthesizeStem(const SynthesisParams& params, const SynthConfig& config);

}  // namespace choralegen
