#include "pipeline/stats.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "core/types.h"
#include "dataset/track_writer.h"

namespace choralegen {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct FrameData {
  std::vector<double> time_s;
  std::vector<double> f0_semitones;
  std::vector<double> amplitude;
};

/// Reads only the needed columns of a synth_params CSV.
FrameData readSynthParamsCsv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv " + path.string());

  int time_col = -1, f0_col = -1, amp_col = -1;
  {
    std::stringstream header(line);
    std::string name;
    int col = 0;
    while (std::getline(header, name, ',')) {
      if (name == "time_s") time_col = col;
      if (name == "f0_semitones") f0_col = col;
      if (name == "amplitude") amp_col = col;
      ++col;
    }
  }
  if (time_col < 0 || f0_col < 0 || amp_col < 0) {
    throw std::runtime_error("missing columns in " + path.string());
  }
  const int last_needed = std::max({time_col, f0_col, amp_col});

  FrameData data;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    size_t start = 0;
    double values[3] = {0.0, 0.0, 0.0};
    for (int col = 0; col <= last_needed; ++col) {
      size_t end = line.find(',', start);
      if (end == std::string::npos) end = line.size();
      if (col == time_col) values[0] = std::stod(line.substr(start, end - start));
      if (col == f0_col) values[1] = std::stod(line.substr(start, end - start));
      if (col == amp_col) values[2] = std::stod(line.substr(start, end - start));
      start = end + 1;
      if (start > line.size()) break;
    }
    data.time_s.push_back(values[0]);
    data.f0_semitones.push_back(values[1]);
    data.amplitude.push_back(values[2]);
  }
  return data;
}

}  // namespace

StatsResult runStats(const fs::path& dataset_root, double bin_width_st) {
  if (bin_width_st <= 0.0 || bin_width_st > 1.0) {
    throw std::invalid_argument("bin width must lie in (0, 1]");
  }
  StatsResult stats;
  stats.bin_width_st = bin_width_st;
  const size_t num_bins =
      static_cast<size_t>(std::ceil(2.0 / bin_width_st));
  stats.frame_mass.assign(num_bins, 0.0);
  stats.note_mass.assign(num_bins, 0.0);

  std::vector<ManifestEntry> entries = readManifest(dataset_root / "manifest.jsonl");

  std::vector<size_t> frame_counts(num_bins, 0);
  std::vector<size_t> note_counts(num_bins, 0);
  double abs_note_dev_sum = 0.0;

  auto bin_of = [&](double deviation) -> long {
    const long bin = static_cast<long>(std::floor((deviation + 1.0) / bin_width_st));
    return bin < 0 || bin >= static_cast<long>(num_bins) ? -1 : bin;
  };

  for (const ManifestEntry& entry : entries) {
    const fs::path track_dir = dataset_root / entry.relative_path;
    try {
      json meta;
      {
        std::ifstream in(track_dir / "metadata.json");
        if (!in) throw std::runtime_error("missing metadata");
        in >> meta;
      }
      const double frame_rate = meta.at("frame_rate").get<double>();

      EnsembleStats& ensemble = stats.per_ensemble[entry.ensemble];
      ensemble.tracks += 1;
      ensemble.duration_s += meta.at("duration_s").get<double>();

      for (int part = 0; part < kNumParts; ++part) {
        const FrameData frames = readSynthParamsCsv(
            track_dir / "synth_params" / stemFileName(part, "csv"));

        for (size_t i = 0; i < frames.f0_semitones.size(); ++i) {
          if (frames.amplitude[i] <= 0.0) continue;
          ++stats.voiced_frames;
          const double f0 = frames.f0_semitones[i];
          const double deviation = f0 - std::round(f0);
          const long bin = bin_of(deviation);
          if (bin >= 0) ++frame_counts[bin];
        }

        const json& notes = meta.at("stems").at(part).at("notes");
        ensemble.notes += notes.size();
        for (const json& note : notes) {
          const double pitch = note.at("pitch").get<double>();
          const long lo =
              std::lround(note.at("onset_s").get<double>() * frame_rate);
          const long hi =
              std::lround(note.at("offset_s").get<double>() * frame_rate);
          double sum = 0.0;
          long count = 0;
          for (long f = lo; f < hi; ++f) {
            if (f < 0 || f >= static_cast<long>(frames.f0_semitones.size())) continue;
            sum += frames.f0_semitones[f];
            ++count;
          }
          if (count == 0) continue;
          const double deviation = sum / count - pitch;
          ++stats.total_notes;
          abs_note_dev_sum += std::abs(deviation);
          const long bin = bin_of(deviation);
          if (bin >= 0) ++note_counts[bin];
        }
      }
    } catch (const std::exception& e) {
      stats.unreadable_tracks.push_back(entry.relative_path + ": " + e.what());
    }
  }

  if (stats.voiced_frames > 0) {
    for (size_t b = 0; b < num_bins; ++b) {
      stats.frame_mass[b] =
          static_cast<double>(frame_counts[b]) / stats.voiced_frames;
    }
    stats.frame_mode_center_st = stats.binCenter(
        std::max_element(frame_counts.begin(), frame_counts.end()) -
        frame_counts.begin());
  }
  if (stats.total_notes > 0) {
    for (size_t b = 0; b < num_bins; ++b) {
      stats.note_mass[b] = static_cast<double>(note_counts[b]) / stats.total_notes;
    }
    stats.note_mode_center_st = stats.binCenter(
        std::max_element(note_counts.begin(), note_counts.end()) -
        note_counts.begin());
    stats.mean_abs_note_deviation_st = abs_note_dev_sum / stats.total_notes;
  }
  return stats;
}

void writeStatsCsv(const StatsResult& stats, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  {
    std::ofstream out(out_dir / "f0_deviation_histogram.csv");
    out << "bin_center_st,frame_mass,note_mass\n";
    for (size_t b = 0; b < stats.frame_mass.size(); ++b) {
      out << stats.binCenter(b) << "," << stats.frame_mass[b] << ","
          << stats.note_mass[b] << "\n";
    }
  }
  {
    std::ofstream out(out_dir / "corpus_stats.csv");
    out << "ensemble,tracks,duration_s,notes\n";
    for (const auto& [name, ensemble] : stats.per_ensemble) {
      out << name << "," << ensemble.tracks << "," << ensemble.duration_s << ","
          << ensemble.notes << "\n";
    }
    out << "total_voiced_frames," << stats.voiced_frames << ",,\n";
    out << "total_notes," << stats.total_notes << ",,\n";
    out << "mean_abs_note_deviation_st," << stats.mean_abs_note_deviation_st
        << ",,\n";
  }
}

}  // namespace choralegen
