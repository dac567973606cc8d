// Pipeline configuration: one structured file holding every knob of the
// generator. The written config is the experiment record; a corpus is a pure
// function of it.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "augment/microtiming.h"
#include "augment/orchestration.h"
#include "augment/tempo.h"
#include "core/types.h"
#include "dataset/split.h"
#include "expression/pitch_correction.h"
#include "expression/priors.h"
#include "expression/render.h"
#include "mixdown/mastering.h"
#include "score/gibbs.h"
#include "score/markov_model.h"
#include "score/pitch_range.h"
#include "synth/synth_config.h"

namespace choralegen {

struct ModelConfig {
  /// "markov" or "external".
  std::string type = "markov";
  /// Tonic pitch class for the markov baseline.
  int key_root = 0;
  /// Directory of .mid scores for the external model.
  std::string external_dir;
};

struct PipelineConfig {
  uint64_t seed = 2024;
  std::string output_root = "dataset_out";
  int num_tracks_per_ensemble = 50;
  std::vector<Ensemble> ensembles = {Ensemble::kString, Ensemble::kBrass,
                                     Ensemble::kWoodwind, Ensemble::kRandom};
  int workers = 1;
  bool overwrite = false;

  int sample_rate = 16000;
  double frame_rate = 250.0;

  ModelConfig model;
  GibbsConfig gibbs;
  PitchRangeTable ranges;
  int max_sample_attempts = 100;
  TempoConfig tempo;
  MicrotimingConfig microtiming;
  RenderConfig render;  ///< harmonic/band counts mirror `synth`
  SynthConfig synth;
  IntonationConfig intonation;
  AlphaPolicy alpha;
  MasteringConfig mastering;
  SplitPolicy split;
  ExpressionPriorTable priors = ExpressionPriorTable::defaults();
  InstrumentRangeTable instrument_ranges = defaultInstrumentRanges();

  /// Validates every module config; throws std::invalid_argument.
  void validate() const;
};

/// JSON serialization (all fields, suitable as a default template).
std::string configToJson(const PipelineConfig& config);

/// Parses JSON over the defaults: absent fields keep their default values.
PipelineConfig configFromJson(const std::string& text);

PipelineConfig loadConfigFile(const std::filesystem::path& path);
void saveConfigFile(const std::filesystem::path& path, const PipelineConfig& config);

}  // namespace choralegen
