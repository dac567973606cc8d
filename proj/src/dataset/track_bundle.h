// The complete in-memory artifact set of one generated piece.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "augment/performance_note.h"
#include "core/audio_buffer.h"
#include "core/types.h"
#include "dataset/split.h"
#include "expression/note_expression.h"
#include "expression/synthesis_params.h"

namespace choralegen {

/// Everything belonging to one stem: audio, score, annotations.
struct StemData {
  Part part = Part::kSoprano;
  InstrumentId instrument = InstrumentId::kViolin;
  std::string label;  ///< e.g. "violin_1"

  AudioBuffer audio;  ///< mastered (normalization and guard applied)
  std::vector<PerformanceNote> notes;
  std::vector<NoteExpression> expressions;
  std::vector<int> velocities;
  std::vector<double> alphas;                ///< pitch-correction draw per note
  std::vector<double> mean_deviations_st;    ///< residual note-mean f0 offset
  SynthesisParams params;                    ///< stitched, post-correction

  double gain_db = 0.0;        ///< normalization gain (pre-guard)
  double measured_lufs = 0.0;  ///< loudness before normalization
  bool silent = false;
};

struct TrackBundle {
  std::string track_id;
  Ensemble ensemble = Ensemble::kString;
  Split split = Split::kTrain;
  int tempo_bpm = 100;
  int sample_rate = 16000;
  double frame_rate = 250.0;
  double duration_s = 0.0;
  double target_lufs = -13.0;
  uint64_t seed = 0;

  AudioBuffer mix;
  double peak_guard_gain_db = 0.0;
  double mix_peak_dbfs = 0.0;
  std::array<StemData, kNumParts> stems;

  /// Checks the structural invariants (stem order, equal audio lengths,
  /// one expression record per note); throws on violation.
  void validate() const;
};

}  // namespace choralegen
