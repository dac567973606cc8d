// Corpus statistics: f0-deviation histograms (per frame against the nearest
// integer pitch, per note against the scored pitch) and per-ensemble totals.
#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace choralegen {

struct EnsembleStats {
  size_t tracks = 0;
  double duration_s = 0.0;
  size_t notes = 0;
};

struct StatsResult {
  double bin_width_st = 0.01;
  /// Both histograms share the bin grid over [-1, 1); masses sum to 1 when
  /// any data was counted, otherwise the histogram is all zero.
  std::vector<double> frame_mass;
  std::vector<double> note_mass;
  size_t voiced_frames = 0;
  size_t total_notes = 0;
  double mean_abs_note_deviation_st = 0.0;
  double frame_mode_center_st = 0.0;
  double note_mode_center_st = 0.0;
  std::map<std::string, EnsembleStats> per_ensemble;
  std::vector<std::string> unreadable_tracks;

  double binCenter(size_t bin) const {
    return -1.0 + (bin + 0.5) * bin_width_st;
  }
};

/// Scans every track in the manifest. Frame deviations come from the
/// synth_params CSVs (voiced frames only); note deviations average frames
/// over each note span from the metadata.
StatsResult runStats(const std::filesystem::path& dataset_root,
                     double bin_width_st = 0.01);

/// Writes f0_deviation_histogram.csv and corpus_stats.csv under out_dir.
void writeStatsCsv(const StatsResult& stats, const std::filesystem::path& out_dir);

}  // namespace choralegen
