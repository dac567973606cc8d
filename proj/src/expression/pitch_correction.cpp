#include "expression/pitch_correction.h"

#include <numeric>
#include <stdexcept>

namespace choralegen {

PitchCorrectionInputs makePitchCorrectionInputs(double note_pitch_st,
                                                std::vector<double> delta_st,
                                                double alpha) {
  if (delta_st.empty()) {
    throw std::invalid_argument("pitch correction needs a nonempty frame span");
  }
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  PitchCorrectionInputs inputs;
  inputs.note_pitch_st = note_pitch_st;
  inputs.delta_mean_st =
      std::accumulate(delta_st.begin(), delta_st.end(), 0.0) /
      static_cast<double>(delta_st.size());
  inputs.delta_st = std::move(delta_st);
  inputs.alpha = alpha;
  return inputs;
}

std::vector<double> applyPitchCorrection(const PitchCorrectionInputs& inputs) {
  if (inputs.delta_st.empty()) {
    throw std::invalid_argument("pitch correction needs a nonempty frame span");
  }
  if (inputs.alpha < 0.0 || inputs.alpha > 1.0) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  std::vector<double> corrected(inputs.delta_st.size());
  const double shift = inputs.alpha * inputs.delta_mean_st;
  for (size_t i = 0; i < inputs.delta_st.size(); ++i) {
    corrected[i] = inputs.note_pitch_st + inputs.delta_st[i] - shift;
  }
  return corrected;
}

double AlphaPolicy::draw(Rng& rng) const {
  switch (mode) {
    case AlphaMode::kUniform: return rng.uniform();
    case AlphaMode::kZero: return 0.0;
    case AlphaMode::kOne: return 1.0;
    case AlphaMode::kFixed: return fixed_value;
  }
  return 0.0;
}

CorrectionRecord correctSegment(NoteSegment& segment, double note_pitch_st,
                                const AlphaPolicy& policy, Rng& rng) {
  SynthesisParams& p = segment.params;
  if (p.numFrames() == 0) {
    throw std::invalid_argument("pitch correction needs a nonempty frame span");
  }

  std::vector<double> delta(p.numFrames());
  for (size_t i = 0; i < delta.size(); ++i) {
    delta[i] = p.f0_semitones[i] - note_pitch_st;
  }
  const double alpha = policy.draw(rng);
  const PitchCorrectionInputs inputs =
      makePitchCorrectionInputs(note_pitch_st, std::move(delta), alpha);
  p.f0_semitones = applyPitchCorrection(inputs);

  CorrectionRecord record;
  record.alpha = alpha;
  record.mean_deviation_st = (1.0 - alpha) * inputs.delta_mean_st;
  return record;
}

}  // namespace choralegen
