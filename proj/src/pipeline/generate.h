// End-to-end track generation: score sampling, augmentation, expression
// rendering, synthesis, mastering and writing, with deterministic
// per-track seeding so results are independent of worker count.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dataset/track_bundle.h"
#include "dataset/track_writer.h"
#include "pipeline/config.h"

namespace choralegen {

/// Builds one track bundle per (ensemble, index). All state is immutable
/// after construction, so a single instance serves every worker thread.
class TrackGenerator {
 public:
  explicit TrackGenerator(const PipelineConfig& config);

  /// Pure function of (config, ensemble, index).
  TrackBundle generate(Ensemble ensemble, int index) const;

  static std::string trackId(Ensemble ensemble, int index);

 private:
  std::unique_ptr<NoteModel> makeModel(Ensemble ensemble, int index) const;

  PipelineConfig config_;
  RenderConfig render_;        ///< config.render with counts/rate resolved
  std::vector<PianoRoll> external_scores_;
};

struct GenerateResult {
  int written = 0;
  int failed = 0;
  std::vector<ManifestEntry> entries;
  std::vector<std::string> errors;
};

/// Generates the whole corpus described by the config into
/// config.output_root, writing manifest.jsonl and a copy of the config.
/// Per-track failures are recorded and skipped.
GenerateResult runGenerate(const PipelineConfig& config);

}  // namespace choralegen
