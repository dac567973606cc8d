#include "pipeline/generate.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "augment/timing.h"
#include "core/rng.h"
#include "dataset/midi_io.h"
#include "expression/stitch.h"
#include "mixdown/mastering.h"
#include "score/external_model.h"
#include "synth/stem.h"

namespace choralegen {

namespace fs = std::filesystem;

namespace {

/// Converts a parsed multi-voice MIDI file to a pianoroll. Voices are taken
/// from tracks (or channels for single-track files), ordered by mean pitch,
/// quantized to sixteenths; gaps hold the previous pitch.
PianoRoll rollFromMidi(const ParsedMidi& midi) {
  if (midi.notes.empty()) throw std::runtime_error("MIDI file has no notes");

  // Group by track when multiple tracks carry notes, else by channel.
  std::vector<int> group_ids;
  for (const MidiNote& note : midi.notes) {
    if (std::find(group_ids.begin(), group_ids.end(), note.track) ==
        group_ids.end()) {
      group_ids.push_back(note.track);
    }
  }
  bool by_channel = group_ids.size() < 2;
  if (by_channel) {
    group_ids.clear();
    for (const MidiNote& note : midi.notes) {
      if (std::find(group_ids.begin(), group_ids.end(), note.channel) ==
          group_ids.end()) {
        group_ids.push_back(note.channel);
      }
    }
  }
  if (group_ids.size() != kNumParts) {
    throw std::runtime_error("external score needs exactly 4 voices, got " +
                             std::to_string(group_ids.size()));
  }

  // Order the voices soprano-first by mean pitch.
  std::vector<std::pair<double, int>> ordered;
  for (int g : group_ids) {
    double sum = 0.0;
    int count = 0;
    for (const MidiNote& note : midi.notes) {
      const int id = by_channel ? note.channel : note.track;
      if (id == g) {
        sum += note.pitch;
        ++count;
      }
    }
    ordered.push_back({sum / count, g});
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  const double ticks_per_step = midi.ppqn / 4.0;
  PianoRoll roll;
  for (int voice = 0; voice < kNumParts; ++voice) {
    const int g = ordered[voice].second;
    std::array<int, PianoRoll::kNumSteps> grid;
    grid.fill(-1);
    for (const MidiNote& note : midi.notes) {
      const int id = by_channel ? note.channel : note.track;
      if (id != g) continue;
      const long on = std::lround(note.onset_tick / ticks_per_step);
      long off = std::lround((note.onset_tick + note.duration_ticks) / ticks_per_step);
      if (off <= on) off = on + 1;
      for (long step = on; step < off && step < PianoRoll::kNumSteps; ++step) {
        if (step >= 0) grid[step] = note.pitch;
      }
    }
    int hold = -1;
    for (int step = 0; step < PianoRoll::kNumSteps; ++step) {
      if (grid[step] >= 0) hold = grid[step];
    }
    if (hold < 0) throw std::runtime_error("external score voice is empty");
    hold = -1;
    for (int step = 0; step < PianoRoll::kNumSteps; ++step) {
      if (grid[step] < 0) {
        if (hold < 0) {
          // Leading gap: borrow the first sounding pitch.
          for (int ahead = step; ahead < PianoRoll::kNumSteps; ++ahead) {
            if (grid[ahead] >= 0) {
              hold = grid[ahead];
              break;
            }
          }
        }
        grid[step] = hold;
      } else {
        hold = grid[step];
      }
    }
    for (int step = 0; step < PianoRoll::kNumSteps; ++step) {
      roll.set(voice, step, static_cast<uint8_t>(std::clamp(grid[step], 0, 127)));
    }
  }
  return roll;
}

}  // namespace

TrackGenerator::TrackGenerator(const PipelineConfig& config) : config_(config) {
  config_.validate();
  render_ = config_.render;
  render_.frame_rate = config_.frame_rate;
  render_.num_harmonics = config_.synth.num_harmonics;
  render_.num_noise_bands = config_.synth.num_noise_bands;

  if (config_.model.type == "external") {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(config_.model.external_dir)) {
      if (entry.path().extension() == ".mid") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      external_scores_.push_back(rollFromMidi(readMidi(file)));
    }
    if (external_scores_.empty()) {
      throw std::runtime_error("no .mid scores in " + config_.model.external_dir);
    }
  }
}

std::string TrackGenerator::trackId(Ensemble ensemble, int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%06d", index);
  return std::string(ensembleName(ensemble)) + "_" + buf;
}

std::unique_ptr<NoteModel> TrackGenerator::makeModel(Ensemble ensemble,
                                                     int index) const {
  if (config_.model.type == "external") {
    const size_t score_index =
        (static_cast<size_t>(ensemble) * config_.num_tracks_per_ensemble + index) %
        external_scores_.size();
    return std::make_unique<ExternalScoreModel>(external_scores_, score_index);
  }
  MarkovModelConfig model_config;
  model_config.key_root = config_.model.key_root;
  model_config.ranges = config_.ranges;
  return std::make_unique<MarkovNoteModel>(model_config);
}

TrackBundle TrackGenerator::generate(Ensemble ensemble, int index) const {
  const uint64_t track_seed = deriveSeed(
      config_.seed, {static_cast<uint64_t>(ensemble), static_cast<uint64_t>(index)});

  // 1. Score: Gibbs sampling with range rejection.
  const std::unique_ptr<NoteModel> model = makeModel(ensemble, index);
  GibbsConfig gibbs = config_.gibbs;
  gibbs.seed = track_seed;
  const AcceptedChorale chorale = sampleAcceptedChorale(
      *model, gibbs, config_.ranges, config_.max_sample_attempts);
  std::vector<ScoreNote> score_notes = pianorollToNotes(chorale.roll);

  // 2. Augmentation: tempo, orchestration, register fit, microtiming.
  Rng tempo_rng(deriveSeed(track_seed, {rng_tag::kTempo}));
  const int bpm = sampleTempo(config_.tempo, tempo_rng);

  Rng orch_rng(deriveSeed(track_seed, {rng_tag::kOrchestration}));
  const Orchestration orchestration =
      assignOrchestration(ensembleSpec(ensemble), orch_rng);

  for (int part = 0; part < kNumParts; ++part) {
    std::vector<ScoreNote> part_notes;
    for (const ScoreNote& note : score_notes) {
      if (static_cast<int>(note.part) == part) part_notes.push_back(note);
    }
    const auto range_it =
        config_.instrument_ranges.find(orchestration.instruments[part]);
    if (range_it == config_.instrument_ranges.end()) {
      throw std::runtime_error("no playable range for instrument");
    }
    const int shift = fitPartToInstrument(part_notes, range_it->second);
    if (shift != 0) {
      size_t cursor = 0;
      for (ScoreNote& note : score_notes) {
        if (static_cast<int>(note.part) == part) note = part_notes[cursor++];
      }
    }
  }

  Rng timing_rng(deriveSeed(track_seed, {rng_tag::kMicrotiming}));
  std::vector<PerformanceNote> performed =
      realizeTiming(score_notes, bpm, config_.microtiming, timing_rng);
  for (PerformanceNote& note : performed) {
    note.instrument = orchestration.instruments[static_cast<int>(note.part)];
  }

  // 3. Per-stem expression, rendering, correction, synthesis.
  const double step_s = stepSeconds(bpm);
  const double duration_s =
      PianoRoll::kNumSteps * step_s + config_.microtiming.bound_s;
  const long track_frames =
      static_cast<long>(std::ceil(duration_s * config_.frame_rate));

  TrackBundle bundle;
  bundle.track_id = trackId(ensemble, index);
  bundle.ensemble = ensemble;
  bundle.split = assignSplit(bundle.track_id, config_.split);
  bundle.tempo_bpm = bpm;
  bundle.sample_rate = config_.sample_rate;
  bundle.frame_rate = config_.frame_rate;
  bundle.duration_s = track_frames / config_.frame_rate;
  bundle.target_lufs = config_.mastering.target_lufs;
  bundle.seed = track_seed;

  std::vector<AudioBuffer> raw_stems;
  for (int part = 0; part < kNumParts; ++part) {
    StemData& stem = bundle.stems[part];
    stem.part = static_cast<Part>(part);
    stem.instrument = orchestration.instruments[part];
    stem.label = orchestration.labels[part];
    for (const PerformanceNote& note : performed) {
      if (static_cast<int>(note.part) == part) stem.notes.push_back(note);
    }

    Rng expr_rng(deriveSeed(track_seed, {rng_tag::kExpression,
                                         static_cast<uint64_t>(part)}));
    stem.expressions =
        generateExpressions(stem.notes, stem.instrument, config_.priors, expr_rng);

    Rng intonation_rng(deriveSeed(track_seed, {rng_tag::kIntonation,
                                               static_cast<uint64_t>(part)}));
    Rng alpha_rng(deriveSeed(track_seed, {rng_tag::kAlpha,
                                          static_cast<uint64_t>(part)}));
    std::vector<NoteSegment> segments;
    segments.reserve(stem.notes.size());
    for (size_t i = 0; i < stem.notes.size(); ++i) {
      NoteSegment segment =
          renderSynthesisParams(stem.notes[i], stem.expressions[i], render_);
      applyIntonationPrior(segment, config_.intonation, intonation_rng);
      const CorrectionRecord record = correctSegment(
          segment, stem.notes[i].pitch, config_.alpha, alpha_rng);
      stem.alphas.push_back(record.alpha);
      stem.mean_deviations_st.push_back(record.mean_deviation_st);
      stem.velocities.push_back(static_cast<int>(std::clamp(
          std::lround(30.0 + 80.0 * stem.expressions[i].volume), 1L, 127L)));
      segments.push_back(std::move(segment));
    }
    stem.params = stitchNoteSegments(segments, track_frames);

    SynthConfig synth = config_.synth;
    synth.sample_rate = config_.sample_rate;
    synth.noise_key =
        deriveSeed(track_seed, {rng_tag::kNoise, static_cast<uint64_t>(part)});
    raw_stems.push_back(synthesizeStem(stem.params, synth));
  }

  // 4. Mastering.
  MasterResult mastered = masterTrack(raw_stems, config_.mastering);
  bundle.mix = std::move(mastered.mix.mix);
  bundle.peak_guard_gain_db = mastered.mix.peak_guard_gain_db;
  bundle.mix_peak_dbfs = mastered.mix.mix_peak_dbfs;
  for (int part = 0; part < kNumParts; ++part) {
    bundle.stems[part].audio = std::move(mastered.mix.stems[part]);
    bundle.stems[part].gain_db = mastered.stems[part].gain_db;
    bundle.stems[part].measured_lufs = mastered.stems[part].measured_lufs;
    bundle.stems[part].silent = mastered.stems[part].silent;
  }
  bundle.validate();
  return bundle;
}

GenerateResult runGenerate(const PipelineConfig& config) {
  config.validate();
  const fs::path root = config.output_root;
  fs::create_directories(root);
  saveConfigFile(root / "config.json", config);

  const TrackGenerator generator(config);

  struct Task {
    Ensemble ensemble;
    int index;
  };
  std::vector<Task> tasks;
  for (Ensemble ensemble : config.ensembles) {
    for (int i = 0; i < config.num_tracks_per_ensemble; ++i) {
      tasks.push_back({ensemble, i});
    }
  }

  std::vector<ManifestEntry> entries(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::vector<char> succeeded(tasks.size(), 0);

  std::atomic<size_t> next{0};
  std::atomic<size_t> completed{0};
  std::mutex log_mutex;

  auto worker = [&]() {
    while (true) {
      const size_t t = next.fetch_add(1);
      if (t >= tasks.size()) break;
      try {
        const TrackBundle bundle =
            generator.generate(tasks[t].ensemble, tasks[t].index);
        entries[t] = writeTrack(bundle, root, config.overwrite);
        succeeded[t] = 1;
      } catch (const std::exception& e) {
        errors[t] = TrackGenerator::trackId(tasks[t].ensemble, tasks[t].index) +
                    ": " + e.what();
      }
      const size_t done = completed.fetch_add(1) + 1;
      if (done % 10 == 0 || done == tasks.size()) {
        std::lock_guard<std::mutex> lock(log_mutex);
        std::fprintf(stderr, "generated %zu/%zu tracks\n", done, tasks.size());
      }
    }
  };

  const int thread_count =
      std::max(1, std::min<int>(config.workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> threads;
  for (int i = 0; i < thread_count; ++i) threads.emplace_back(worker);
  for (std::thread& thread : threads) thread.join();

  GenerateResult result;
  for (size_t t = 0; t < tasks.size(); ++t) {
    if (succeeded[t]) {
      result.entries.push_back(entries[t]);
      ++result.written;
    } else {
      result.errors.push_back(errors[t]);
      ++result.failed;
    }
  }
  writeManifest(root / "manifest.jsonl", result.entries);

  std::error_code ec;
  fs::remove_all(root / ".tmp", ec);
  return result;
}

}  // namespace choralegen
