// Post-write validation of track directories and whole datasets.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace choralegen {

struct TrackReport {
  std::string track_path;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks one written track directory:
///   - presence of every expected file
///   - WAV header fields (sample rate, 16-bit, mono)
///   - mixture consistency: RMS(mix - sum of stems) <= 1e-4 after
///     quantization (independent TPDF dither makes a per-sample max bound
///     larger than this tolerance, so the check is RMS-based)
///   - loudness contract: stem loudness minus the guard gain hits the target
///     within 0.1 LU; mix sample peak at most the ceiling plus one LSB
///   - MIDI/audio duration agreement within 60 ms
///   - expression record count equals note count (CSV, metadata and MIDI)
/// Missing files are reported, not thrown.
TrackReport validateTrack(const std::filesystem::path& track_dir);

struct DatasetReport {
  std::vector<TrackReport> tracks;
  size_t manifest_entries = 0;
  std::vector<std::string> dataset_violations;  ///< manifest-level problems

  size_t totalViolations() const {
    size_t n = dataset_violations.size();
    for (const TrackReport& t : tracks) n += t.violations.size();
    return n;
  }
  bool ok() const { return totalViolations() == 0; }
};

/// Validates every track listed in <root>/manifest.jsonl and cross-checks
/// the manifest against the directory tree.
DatasetReport validateDataset(const std::filesystem::path& root);

}  // namespace choralegen
