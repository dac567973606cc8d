#include "dataset/track_writer.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "core/rng.h"
#include "dataset/midi_io.h"
#include "dataset/wav_io.h"

namespace choralegen {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string formatDouble(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

void appendDouble(std::string& out, double v, int precision = 7) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, precision);
  out.append(buf, res.ptr);
}

void writeTextFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for write: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string expressionCsv(const StemData& stem) {
  std::string csv = "note_index";
  for (const char* field : kExpressionFieldNames) {
    csv += ",";
    csv += field;
  }
  csv += "\n";
  for (size_t i = 0; i < stem.expressions.size(); ++i) {
    csv += std::to_string(i);
    for (double v : stem.expressions[i].asArray()) {
      csv += "," + formatDouble(v);
    }
    csv += "\n";
  }
  return csv;
}

std::string synthParamsCsv(const StemData& stem) {
  const SynthesisParams& p = stem.params;
  std::string csv = "time_s,f0_semitones,f0_hz,amplitude";
  for (int k = 0; k < p.num_harmonics; ++k) csv += ",h" + std::to_string(k);
  for (int b = 0; b < p.num_noise_bands; ++b) csv += ",n" + std::to_string(b);
  csv += "\n";
  csv.reserve(csv.size() + p.numFrames() * (p.num_harmonics + p.num_noise_bands + 4) * 10);
  for (size_t frame = 0; frame < p.numFrames(); ++frame) {
    const double f0 = p.f0_semitones[frame];
    appendDouble(csv, frame / p.frame_rate);
    csv.push_back(',');
    appendDouble(csv, f0, 9);
    csv.push_back(',');
    appendDouble(csv, 440.0 * std::pow(2.0, (f0 - 69.0) / 12.0));
    csv.push_back(',');
    appendDouble(csv, p.amplitude[frame]);
    for (double h : p.harmonicsFrame(frame)) {
      csv.push_back(',');
      appendDouble(csv, h);
    }
    for (double n : p.noiseFrame(frame)) {
      csv.push_back(',');
      appendDouble(csv, n);
    }
    csv.push_back('\n');
  }
  return csv;
}

json metadataJson(const TrackBundle& bundle) {
  json meta;
  meta["track_id"] = bundle.track_id;
  meta["ensemble"] = std::string(ensembleName(bundle.ensemble));
  meta["split"] = std::string(splitName(bundle.split));
  meta["tempo_bpm"] = bundle.tempo_bpm;
  meta["sample_rate"] = bundle.sample_rate;
  meta["frame_rate"] = bundle.frame_rate;
  meta["duration_s"] = bundle.duration_s;
  meta["seed"] = bundle.seed;

  json mastering;
  mastering["target_lufs"] = bundle.target_lufs;
  mastering["peak_guard_gain_db"] = bundle.peak_guard_gain_db;
  mastering["mix_peak_dbfs"] = bundle.mix_peak_dbfs;
  json stem_gains = json::array();
  for (const StemData& stem : bundle.stems) {
    stem_gains.push_back({{"part", std::string(partName(stem.part))},
                          {"gain_db", stem.gain_db},
                          {"measured_lufs", stem.measured_lufs},
                          {"silent", stem.silent}});
  }
  mastering["stems"] = stem_gains;
  meta["mastering"] = mastering;

  json stems = json::array();
  for (const StemData& stem : bundle.stems) {
    json notes = json::array();
    for (size_t i = 0; i < stem.notes.size(); ++i) {
      const PerformanceNote& note = stem.notes[i];
      notes.push_back({
          {"pitch", note.pitch},
          {"onset_s", note.onset_s},
          {"offset_s", note.offset_s},
          {"quantized_onset_step", note.quantized_onset_step},
          {"quantized_duration_steps", note.quantized_duration_steps},
          {"timing_offset_s", note.timing_offset_s},
          {"velocity", stem.velocities[i]},
          {"alpha", stem.alphas[i]},
          {"mean_f0_deviation_st", stem.mean_deviations_st[i]},
      });
    }
    stems.push_back({{"part", std::string(partName(stem.part))},
                     {"instrument", std::string(instrumentName(stem.instrument))},
                     {"label", stem.label},
                     {"notes", notes}});
  }
  meta["stems"] = stems;
  return meta;
}

}  // namespace

void TrackBundle::validate() const {
  for (int i = 0; i < kNumParts; ++i) {
    const StemData& stem = stems[i];
    if (static_cast<int>(stem.part) != i) {
      throw std::invalid_argument("stems must be in SATB order");
    }
    if (stem.audio.samples.size() != mix.samples.size()) {
      throw std::invalid_argument("stem/mix length mismatch");
    }
    if (stem.expressions.size() != stem.notes.size() ||
        stem.alphas.size() != stem.notes.size() ||
        stem.velocities.size() != stem.notes.size() ||
        stem.mean_deviations_st.size() != stem.notes.size()) {
      throw std::invalid_argument("per-note record count mismatch");
    }
  }
}

std::string stemFileName(int stem_index, std::string_view extension) {
  return std::to_string(stem_index) + "_" +
         std::string(partName(static_cast<Part>(stem_index))) + "." +
         std::string(extension);
}

ManifestEntry writeTrack(const TrackBundle& bundle, const fs::path& root,
                         bool overwrite) {
  bundle.validate();

  const fs::path final_dir =
      root / std::string(splitName(bundle.split)) / bundle.track_id;
  if (fs::exists(final_dir)) {
    if (!overwrite) {
      throw std::runtime_error("track already exists: " + final_dir.string());
    }
    fs::remove_all(final_dir);
  }

  // Stage in a temp directory, then rename so partial tracks never surface.
  const fs::path tmp_dir =
      root / ".tmp" / (bundle.track_id + "." + std::to_string(mix64(bundle.seed) & 0xffffff));
  std::error_code ec;
  fs::remove_all(tmp_dir, ec);
  fs::create_directories(tmp_dir / "stems_audio");
  fs::create_directories(tmp_dir / "stems_midi");
  fs::create_directories(tmp_dir / "expression");
  fs::create_directories(tmp_dir / "synth_params");

  try {
    writeWav16(tmp_dir / "mix.wav", bundle.mix,
               deriveSeed(bundle.seed, {rng_tag::kDither, kNumParts}));
    for (int i = 0; i < kNumParts; ++i) {
      const StemData& stem = bundle.stems[i];
      writeWav16(tmp_dir / "stems_audio" / stemFileName(i, "wav"), stem.audio,
                 deriveSeed(bundle.seed, {rng_tag::kDither, static_cast<uint64_t>(i)}));
      writeStemMidi(tmp_dir / "stems_midi" / stemFileName(i, "mid"), stem.notes,
                    bundle.tempo_bpm, stem.instrument, stem.velocities);
      writeTextFile(tmp_dir / "expression" / stemFileName(i, "csv"),
                    expressionCsv(stem));
      writeTextFile(tmp_dir / "synth_params" / stemFileName(i, "csv"),
                    synthParamsCsv(stem));
    }
    writeTextFile(tmp_dir / "metadata.json", metadataJson(bundle).dump(2) + "\n");
  } catch (...) {
    fs::remove_all(tmp_dir, ec);
    throw;
  }

  fs::create_directories(final_dir.parent_path());
  fs::rename(tmp_dir, final_dir);

  ManifestEntry entry;
  entry.track_id = bundle.track_id;
  entry.split = bundle.split;
  entry.ensemble = std::string(ensembleName(bundle.ensemble));
  entry.tempo_bpm = bundle.tempo_bpm;
  for (const StemData& stem : bundle.stems) {
    entry.instruments.push_back(stem.label);
    entry.stem_gains_db.push_back(stem.gain_db);
  }
  entry.peak_guard_gain_db = bundle.peak_guard_gain_db;
  entry.relative_path =
      std::string(splitName(bundle.split)) + "/" + bundle.track_id;
  return entry;
}

void writeManifest(const fs::path& path,
                   const std::vector<ManifestEntry>& entries) {
  std::string content;
  for (const ManifestEntry& entry : entries) {
    json line = {{"track_id", entry.track_id},
                 {"split", std::string(splitName(entry.split))},
                 {"ensemble", entry.ensemble},
                 {"tempo_bpm", entry.tempo_bpm},
                 {"instruments", entry.instruments},
                 {"stem_gains_db", entry.stem_gains_db},
                 {"peak_guard_gain_db", entry.peak_guard_gain_db},
                 {"path", entry.relative_path}};
    content += line.dump() + "\n";
  }
  writeTextFile(path, content);
}

std::vector<ManifestEntry> readManifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path.string());
  std::vector<ManifestEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json parsed = json::parse(line);
    ManifestEntry entry;
    entry.track_id = parsed.at("track_id").get<std::string>();
    entry.split = splitFromName(parsed.at("split").get<std::string>());
    entry.ensemble = parsed.at("ensemble").get<std::string>();
    entry.tempo_bpm = parsed.at("tempo_bpm").get<int>();
    entry.instruments = parsed.at("instruments").get<std::vector<std::string>>();
    entry.stem_gains_db = parsed.at("stem_gains_db").get<std::vector<double>>();
    entry.peak_guard_gain_db = parsed.at("peak_guard_gain_db").get<double>();
    entry.relative_path = parsed.at("path").get<std::string>();
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace choralegen
