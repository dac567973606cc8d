// On-disk track layout and the dataset manifest.
//
// Each track is written atomically (staged under <root>/.tmp, then renamed)
// into <root>/<split>/<track_id>/ with this layout:
//
//   mix.wav                      mono 16 kHz 16-bit PCM
//   stems_audio/<i>_<part>.wav   one per stem, same format
//   stems_midi/<i>_<part>.mid    SMF format 0, 220 PPQN, one tempo event
//   expression/<i>_<part>.csv    one row per note, six controls
//   synth_params/<i>_<part>.csv  framewise controls (f0, amplitude, bands)
//   metadata.json                everything else (tempo, gains, notes, ...)
//
// The manifest is line-delimited JSON at <root>/manifest.jsonl.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dataset/track_bundle.h"

namespace choralegen {

struct ManifestEntry {
  std::string track_id;
  Split split = Split::kTrain;
  std::string ensemble;
  int tempo_bpm = 0;
  std::vector<std::string> instruments;  ///< stem labels in SATB order
  std::vector<double> stem_gains_db;
  double peak_guard_gain_db = 0.0;
  std::string relative_path;  ///< "<split>/<track_id>"
};

/// File name of stem `i` (0-based SATB order) with the given extension,
/// e.g. "0_soprano.wav".
std::string stemFileName(int stem_index, std::string_view extension);

/// Writes all track files. Fails if the track directory already exists,
/// unless `overwrite` is set. I/O errors carry the offending path.
ManifestEntry writeTrack(const TrackBundle& bundle,
                         const std::filesystem::path& root,
                         bool overwrite = false);

void writeManifest(const std::filesystem::path& path,
                   const std::vector<ManifestEntry>& entries);
std::vector<ManifestEntry> readManifest(const std::filesystem::path& path);

}  // namespace choralegen
