#include "synth/stem.h"

namespace choralegen {

AudioBuffer synthesizeStem(const SynthesisParams& params, const SynthConfig& config) {
  const PerSampleControls controls = upsampleParams(params, config.sample_rate);
  AudioBuffer harmonic = synthesizeHarmonic(controls, config);
  const AudioBuffer noise = synthesizeNoise(params, config);
  for (size_t i = 0; i < harmonic.samples.size(); ++i) {
    harmonic.samples[i] += noise.samples[i];
  }
  return harmonic;
}

}  // namespace choralegen
