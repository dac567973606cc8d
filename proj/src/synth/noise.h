// Filtered-noise synthesis: per frame, a linear-phase FIR is designed by
// frequency sampling of the band-magnitude envelope and applied to a
// counter-based white-noise stream with windowed overlap-add.
#pragma once

#include "core/audio_buffer.h"
#include "expression/synthesis_params.h"
#include "synth/synth_config.h"

namespace choralegen {

/// Designs the linear-phase FIR (config.fir_taps taps) whose magnitude
/// response follows `band_magnitudes` interpolated across [0, Nyquist].
/// A flat envelope of 1.0 yields a unit impulse (identity filter).
std::vector<double> designNoiseFir(std::span<const double> band_magnitudes,
                                   const SynthConfig& config);

/// Renders the noise component of a stem. Output length is frames * hop.
AudioBuffer synthesizeNoise(const SynthesisParams& params,
                            const SynthConfig& config);

}  // namespace choralegen
