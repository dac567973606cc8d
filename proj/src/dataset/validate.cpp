#include "dataset/validate.h"

#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "core/types.h"
#include "dataset/midi_io.h"
#include "dataset/track_writer.h"
#include "dataset/wav_io.h"
#include "mixdown/loudness.h"

namespace choralegen {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

size_t countCsvRows(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  size_t rows = 0;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    ++rows;
  }
  return rows;
}

}  // namespace

TrackReport validateTrack(const fs::path& track_dir) {
  TrackReport report;
  report.track_path = track_dir.string();
  auto violation = [&](const std::string& message) {
    report.violations.push_back(message);
  };

  if (!fs::is_directory(track_dir)) {
    violation("track directory missing");
    return report;
  }

  // File presence.
  std::vector<fs::path> required = {track_dir / "mix.wav",
                                    track_dir / "metadata.json"};
  for (int i = 0; i < kNumParts; ++i) {
    required.push_back(track_dir / "stems_audio" / stemFileName(i, "wav"));
    required.push_back(track_dir / "stems_midi" / stemFileName(i, "mid"));
    required.push_back(track_dir / "expression" / stemFileName(i, "csv"));
    required.push_back(track_dir / "synth_params" / stemFileName(i, "csv"));
  }
  bool missing_any = false;
  for (const fs::path& path : required) {
    if (!fs::exists(path)) {
      violation("missing file: " + path.lexically_relative(track_dir).string());
      missing_any = true;
    }
  }
  if (missing_any) return report;

  json meta;
  try {
    std::ifstream in(track_dir / "metadata.json");
    in >> meta;
  } catch (const std::exception& e) {
    violation(std::string("unreadable metadata: ") + e.what());
    return report;
  }

  const int sample_rate = meta.value("sample_rate", 16000);
  const double target_lufs =
      meta.at("mastering").value("target_lufs", -13.0);
  const double guard_db = meta.at("mastering").value("peak_guard_gain_db", 0.0);

  // WAV format fields and content.
  WavData mix;
  std::vector<WavData> stems(kNumParts);
  try {
    mix = readWav16(track_dir / "mix.wav");
    for (int i = 0; i < kNumParts; ++i) {
      stems[i] = readWav16(track_dir / "stems_audio" / stemFileName(i, "wav"));
    }
  } catch (const std::exception& e) {
    violation(std::string("unreadable audio: ") + e.what());
    return report;
  }
  for (int i = -1; i < kNumParts; ++i) {
    const WavData& wav = i < 0 ? mix : stems[i];
    const std::string name = i < 0 ? "mix.wav" : stemFileName(i, "wav");
    if (wav.sample_rate != sample_rate) {
      violation(name + ": sample rate " + std::to_string(wav.sample_rate));
    }
    if (wav.num_channels != 1) violation(name + ": not mono");
    if (wav.bits_per_sample != 16) violation(name + ": not 16-bit");
    if (wav.samples.size() != mix.samples.size()) {
      violation(name + ": length differs from mix");
    }
  }

  // Mixture consistency after quantization (RMS over the full length).
  double err_energy = 0.0;
  for (size_t n = 0; n < mix.samples.size(); ++n) {
    double sum = 0.0;
    for (int i = 0; i < kNumParts; ++i) {
      if (n < stems[i].samples.size()) sum += stems[i].samples[n] / 32767.0;
    }
    const double diff = mix.samples[n] / 32767.0 - sum;
    err_energy += diff * diff;
  }
  if (!mix.samples.empty()) {
    const double rms = std::sqrt(err_energy / mix.samples.size());
    if (rms > 1e-4) {
      violation("mixture consistency: RMS(mix - sum stems) = " +
                std::to_string(rms));
    }
  }

  // Loudness contract: stored stems carry normalization plus guard gain.
  const auto stem_meta = meta.at("mastering").at("stems");
  for (int i = 0; i < kNumParts; ++i) {
    if (stem_meta.at(i).value("silent", false)) continue;
    const AudioBuffer audio = stems[i].toAudio();
    try {
      const auto lufs = integratedLoudness(audio);
      if (!lufs.has_value()) {
        violation(stemFileName(i, "wav") + ": unexpectedly silent");
      } else if (std::abs(*lufs - guard_db - target_lufs) > 0.1) {
        violation(stemFileName(i, "wav") + ": pre-guard loudness " +
                  std::to_string(*lufs - guard_db) + " LUFS, expected " +
                  std::to_string(target_lufs));
      }
    } catch (const std::exception& e) {
      violation(stemFileName(i, "wav") + ": loudness check failed: " + e.what());
    }
  }

  // Peak contract: ceiling plus one quantization step.
  int peak = 0;
  for (int16_t s : mix.samples) {
    peak = std::max(peak, std::abs(static_cast<int>(s)));
  }
  const double ceiling = std::pow(10.0, -1.0 / 20.0);
  if (peak / 32767.0 > ceiling + 1.0 / 32767.0) {
    violation("mix peak above ceiling: " + std::to_string(peak / 32767.0));
  }

  // MIDI/audio duration agreement and per-note record counts.
  const double audio_duration =
      static_cast<double>(mix.samples.size()) / sample_rate;
  for (int i = 0; i < kNumParts; ++i) {
    ParsedMidi midi;
    try {
      midi = readMidi(track_dir / "stems_midi" / stemFileName(i, "mid"));
    } catch (const std::exception& e) {
      violation(stemFileName(i, "mid") + ": unreadable: " + e.what());
      continue;
    }
    if (std::abs(midi.durationSeconds() - audio_duration) > 0.060) {
      violation(stemFileName(i, "mid") + ": duration " +
                std::to_string(midi.durationSeconds()) + " s vs audio " +
                std::to_string(audio_duration) + " s");
    }
    const size_t note_count = meta.at("stems").at(i).at("notes").size();
    if (midi.notes.size() != note_count) {
      violation(stemFileName(i, "mid") + ": note count " +
                std::to_string(midi.notes.size()) + " vs metadata " +
                std::to_string(note_count));
    }
    const size_t expression_rows =
        countCsvRows(track_dir / "expression" / stemFileName(i, "csv"));
    if (expression_rows != note_count) {
      violation(stemFileName(i, "csv") + ": expression rows " +
                std::to_string(expression_rows) + " vs note count " +
                std::to_string(note_count));
    }
  }

  return report;
}

DatasetReport validateDataset(const fs::path& root) {
  DatasetReport report;
  std::vector<ManifestEntry> entries;
  try {
    entries = readManifest(root / "manifest.jsonl");
  } catch (const std::exception& e) {
    report.dataset_violations.push_back(std::string("manifest: ") + e.what());
    return report;
  }
  report.manifest_entries = entries.size();

  std::set<std::string> listed;
  for (const ManifestEntry& entry : entries) {
    listed.insert(entry.relative_path);
    report.tracks.push_back(validateTrack(root / entry.relative_path));
  }

  // Every track directory on disk must be listed in the manifest.
  for (const char* split : {"train", "valid", "test"}) {
    const fs::path split_dir = root / split;
    if (!fs::is_directory(split_dir)) continue;
    for (const auto& dir : fs::directory_iterator(split_dir)) {
      if (!dir.is_directory()) continue;
      const std::string rel =
          std::string(split) + "/" + dir.path().filename().string();
      if (!listed.count(rel)) {
        report.dataset_violations.push_back("not in manifest: " + rel);
      }
    }
  }
  return report;
}

}  // namespace choralegen
