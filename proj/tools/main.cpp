// choralegen: deterministic four-part chorale performance dataset generator.
//
// Subcommands:
//   generate  sample, synthesize and master tracks into a dataset directory
//   validate  re-check every written track against the format contracts
//   stats     f0-deviation histograms and corpus totals
//
// Exit codes: 0 success, 1 validation violations or per-track failures,
// 2 configuration errors.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dataset/validate.h"
#include "pipeline/config.h"
#include "pipeline/generate.h"
#include "pipeline/stats.h"

namespace {

using namespace choralegen;

int cmdGenerate(const std::string& config_path, const std::string& out,
                int64_t seed, int workers, int num_tracks,
                const std::vector<std::string>& ensembles, bool overwrite) {
  PipelineConfig config;
  try {
    if (!config_path.empty()) config = loadConfigFile(config_path);
    if (!out.empty()) config.output_root = out;
    if (seed >= 0) config.seed = static_cast<uint64_t>(seed);
    if (workers > 0) config.workers = workers;
    if (num_tracks >= 0) config.num_tracks_per_ensemble = num_tracks;
    if (!ensembles.empty()) {
      config.ensembles.clear();
      for (const std::string& name : ensembles) {
        config.ensembles.push_back(ensembleFromName(name));
      }
    }
    if (overwrite) config.overwrite = true;
    config.validate();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  const GenerateResult result = runGenerate(config);
  std::cerr << "wrote " << result.written << " tracks to " << config.output_root;
  if (result.failed > 0) {
    std::cerr << " (" << result.failed << " failed)";
  }
  std::cerr << "\n";
  for (const std::string& error : result.errors) {
    std::cerr << "  failed: " << error << "\n";
  }
  return result.failed == 0 ? 0 : 1;
}

int cmdValidate(const std::string& root) {
  const DatasetReport report = validateDataset(root);
  size_t bad_tracks = 0;
  for (const TrackReport& track : report.tracks) {
    if (!track.ok()) {
      ++bad_tracks;
      for (const std::string& violation : track.violations) {
        std::cout << track.track_path << ": " << violation << "\n";
      }
    }
  }
  for (const std::string& violation : report.dataset_violations) {
    std::cout << root << ": " << violation << "\n";
  }
  std::cout << report.tracks.size() << " tracks checked, " << bad_tracks
            << " with violations, " << report.totalViolations()
            << " violations total\n";
  return report.ok() ? 0 : 1;
}

int cmdStats(const std::string& root, const std::string& out, double bin_width) {
  const StatsResult stats = runStats(root, bin_width);
  writeStatsCsv(stats, out.empty() ? root : out);
  std::cout << "voiced_frames: " << stats.voiced_frames << "\n";
  std::cout << "notes: " << stats.total_notes << "\n";
  std::cout << "mean_abs_note_deviation_st: " << stats.mean_abs_note_deviation_st
            << "\n";
  std::cout << "note_mode_center_st: " << stats.note_mode_center_st << "\n";
  std::cout << "frame_mode_center_st: " << stats.frame_mode_center_st << "\n";
  for (const auto& [name, ensemble] : stats.per_ensemble) {
    std::cout << name << ": " << ensemble.tracks << " tracks, "
              << ensemble.duration_s << " s, " << ensemble.notes << " notes\n";
  }
  for (const std::string& track : stats.unreadable_tracks) {
    std::cerr << "unreadable: " << track << "\n";
  }
  return stats.unreadable_tracks.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-part chorale performance dataset generator"};
  app.require_subcommand(0, 1);

  bool print_default_config = false;
  app.add_flag("--print-default-config", print_default_config,
               "Print the full default config as JSON and exit");

  auto* generate = app.add_subcommand("generate", "Generate a dataset");
  std::string config_path, out;
  int64_t seed = -1;
  int workers = 0, num_tracks = -1;
  std::vector<std::string> ensembles;
  bool overwrite = false;
  generate->add_option("--config", config_path, "Config JSON file");
  generate->add_option("--out", out, "Output root (overrides config)");
  generate->add_option("--seed", seed, "Global seed (overrides config)");
  generate->add_option("--workers", workers, "Worker threads (overrides config)");
  generate->add_option("--num-tracks", num_tracks,
                       "Tracks per ensemble (overrides config)");
  generate->add_option("--ensembles", ensembles,
                       "Ensembles: string brass woodwind random");
  generate->add_flag("--overwrite", overwrite, "Replace existing tracks");

  auto* validate = app.add_subcommand("validate", "Validate a dataset");
  std::string validate_root;
  validate->add_option("root", validate_root, "Dataset root")->required();

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  std::string stats_root, stats_out;
  double bin_width = 0.01;
  stats->add_option("root", stats_root, "Dataset root")->required();
  stats->add_option("--out", stats_out, "Output directory for CSVs");
  stats->add_option("--bin-width", bin_width, "Histogram bin width in semitones");

  CLI11_PARSE(app, argc, argv);

  try {
    if (print_default_config) {
      std::cout << configToJson(PipelineConfig{});
      return 0;
    }
    if (generate->parsed()) {
      return cmdGenerate(config_path, out, seed, workers, num_tracks, ensembles,
                         overwrite);
    }
    if (validate->parsed()) return cmdValidate(validate_root);
    if (stats->parsed()) return cmdStats(stats_root, stats_out, bin_width);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << app.help();
  return 0;
}
