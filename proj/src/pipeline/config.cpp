#include "pipeline/config.h"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace choralegen {

using nlohmann::json;

namespace {

std::string alphaModeName(AlphaMode mode) {
  switch (mode) {
    case AlphaMode::kUniform: return "uniform";
    case AlphaMode::kZero: return "zero";
    case AlphaMode::kOne: return "one";
    case AlphaMode::kFixed: return "fixed";
  }
  return "uniform";
}

AlphaMode alphaModeFromName(const std::string& name) {
  if (name == "uniform") return AlphaMode::kUniform;
  if (name == "zero") return AlphaMode::kZero;
  if (name == "one") return AlphaMode::kOne;
  if (name == "fixed") return AlphaMode::kFixed;
  throw std::invalid_argument("unknown alpha mode: " + name);
}

json toJson(const PipelineConfig& c) {
  json j;
  j["seed"] = c.seed;
  j["output_root"] = c.output_root;
  j["num_tracks_per_ensemble"] = c.num_tracks_per_ensemble;
  std::vector<std::string> ensembles;
  for (Ensemble e : c.ensembles) ensembles.emplace_back(ensembleName(e));
  j["ensembles"] = ensembles;
  j["workers"] = c.workers;
  j["overwrite"] = c.overwrite;
  j["sample_rate"] = c.sample_rate;
  j["frame_rate"] = c.frame_rate;

  j["model"] = {{"type", c.model.type},
                {"key_root", c.model.key_root},
                {"external_dir", c.model.external_dir}};
  j["gibbs"] = {{"num_steps", c.gibbs.num_steps},
                {"mask_start_fraction", c.gibbs.schedule.start_fraction},
                {"mask_end_fraction", c.gibbs.schedule.end_fraction}};
  json ranges;
  for (int p = 0; p < kNumParts; ++p) {
    ranges[std::string(partName(static_cast<Part>(p)))] = {
        {"min_pitch", c.ranges.parts[p].min_pitch},
        {"max_pitch", c.ranges.parts[p].max_pitch}};
  }
  ranges["margin"] = c.ranges.margin;
  j["pitch_ranges"] = ranges;
  j["max_sample_attempts"] = c.max_sample_attempts;

  j["tempo"] = {{"min_bpm", c.tempo.min_bpm}, {"max_bpm", c.tempo.max_bpm}};
  j["microtiming"] = {{"mu_s", c.microtiming.mu_s},
                      {"sigma_s", c.microtiming.sigma_s},
                      {"bound_s", c.microtiming.bound_s}};

  j["render"] = {{"vibrato_rate_hz", c.render.vibrato_rate_hz},
                 {"vibrato_depth_st", c.render.vibrato_depth_st},
                 {"vibrato_onset_frac", c.render.vibrato_onset_frac},
                 {"amp_peak_min", c.render.amp_peak_min},
                 {"amp_peak_max", c.render.amp_peak_max},
                 {"sustain_level", c.render.sustain_level},
                 {"attack_min_s", c.render.attack_min_s},
                 {"release_s", c.render.release_s},
                 {"fluctuation_rate_hz", c.render.fluctuation_rate_hz},
                 {"fluctuation_depth", c.render.fluctuation_depth},
                 {"brightness_gamma_max", c.render.brightness_gamma_max},
                 {"brightness_gamma_min", c.render.brightness_gamma_min},
                 {"attack_window_s", c.render.attack_window_s},
                 {"attack_noise_gain", c.render.attack_noise_gain},
                 {"noise_floor", c.render.noise_floor}};
  j["synth"] = {{"num_harmonics", c.synth.num_harmonics},
                {"num_noise_bands", c.synth.num_noise_bands},
                {"fir_taps", c.synth.fir_taps},
                {"nyquist_taper", c.synth.nyquist_taper}};
  j["intonation"] = {{"bias_mean_st", c.intonation.bias_mean_st},
                     {"bias_std_st", c.intonation.bias_std_st},
                     {"drift_std_st", c.intonation.drift_std_st}};
  j["pitch_correction"] = {{"alpha_mode", alphaModeName(c.alpha.mode)},
                           {"alpha_fixed_value", c.alpha.fixed_value}};
  j["mastering"] = {{"target_lufs", c.mastering.target_lufs},
                    {"peak_ceiling_dbfs", c.mastering.peak_ceiling_dbfs}};
  j["split"] = {{"train", c.split.train},
                {"valid", c.split.valid},
                {"test", c.split.test}};

  json priors;
  for (const auto& [id, prior] : c.priors.priors()) {
    priors[std::string(instrumentName(id))] = {{"mean", prior.mean},
                                               {"stddev", prior.stddev}};
  }
  j["expression_priors"] = priors;

  json instrument_ranges;
  for (const auto& [id, range] : c.instrument_ranges) {
    instrument_ranges[std::string(instrumentName(id))] = {
        {"min_pitch", range.min_pitch}, {"max_pitch", range.max_pitch}};
  }
  j["instrument_ranges"] = instrument_ranges;
  return j;
}

void fromJson(const json& j, PipelineConfig& c) {
  c.seed = j.value("seed", c.seed);
  c.output_root = j.value("output_root", c.output_root);
  c.num_tracks_per_ensemble =
      j.value("num_tracks_per_ensemble", c.num_tracks_per_ensemble);
  if (j.contains("ensembles")) {
    c.ensembles.clear();
    for (const auto& name : j.at("ensembles")) {
      c.ensembles.push_back(ensembleFromName(name.get<std::string>()));
    }
  }
  c.workers = j.value("workers", c.workers);
  c.overwrite = j.value("overwrite", c.overwrite);
  c.sample_rate = j.value("sample_rate", c.sample_rate);
  c.frame_rate = j.value("frame_rate", c.frame_rate);

  if (j.contains("model")) {
    const json& m = j.at("model");
    c.model.type = m.value("type", c.model.type);
    c.model.key_root = m.value("key_root", c.model.key_root);
    c.model.external_dir = m.value("external_dir", c.model.external_dir);
  }
  if (j.contains("gibbs")) {
    const json& g = j.at("gibbs");
    c.gibbs.num_steps = g.value("num_steps", c.gibbs.num_steps);
    c.gibbs.schedule.start_fraction =
        g.value("mask_start_fraction", c.gibbs.schedule.start_fraction);
    c.gibbs.schedule.end_fraction =
        g.value("mask_end_fraction", c.gibbs.schedule.end_fraction);
  }
  if (j.contains("pitch_ranges")) {
    const json& r = j.at("pitch_ranges");
    for (int p = 0; p < kNumParts; ++p) {
      const std::string name(partName(static_cast<Part>(p)));
      if (r.contains(name)) {
        c.ranges.parts[p].min_pitch =
            r.at(name).value("min_pitch", c.ranges.parts[p].min_pitch);
        c.ranges.parts[p].max_pitch =
            r.at(name).value("max_pitch", c.ranges.parts[p].max_pitch);
      }
    }
    c.ranges.margin = r.value("margin", c.ranges.margin);
  }
  c.max_sample_attempts = j.value("max_sample_attempts", c.max_sample_attempts);

  if (j.contains("tempo")) {
    c.tempo.min_bpm = j.at("tempo").value("min_bpm", c.tempo.min_bpm);
    c.tempo.max_bpm = j.at("tempo").value("max_bpm", c.tempo.max_bpm);
  }
  if (j.contains("microtiming")) {
    const json& m = j.at("microtiming");
    c.microtiming.mu_s = m.value("mu_s", c.microtiming.mu_s);
    c.microtiming.sigma_s = m.value("sigma_s", c.microtiming.sigma_s);
    c.microtiming.bound_s = m.value("bound_s", c.microtiming.bound_s);
  }
  if (j.contains("render")) {
    const json& r = j.at("render");
    RenderConfig& rc = c.render;
    rc.vibrato_rate_hz = r.value("vibrato_rate_hz", rc.vibrato_rate_hz);
    rc.vibrato_depth_st = r.value("vibrato_depth_st", rc.vibrato_depth_st);
    rc.vibrato_onset_frac = r.value("vibrato_onset_frac", rc.vibrato_onset_frac);
    rc.amp_peak_min = r.value("amp_peak_min", rc.amp_peak_min);
    rc.amp_peak_max = r.value("amp_peak_max", rc.amp_peak_max);
    rc.sustain_level = r.value("sustain_level", rc.sustain_level);
    rc.attack_min_s = r.value("attack_min_s", rc.attack_min_s);
    rc.release_s = r.value("release_s", rc.release_s);
    rc.fluctuation_rate_hz = r.value("fluctuation_rate_hz", rc.fluctuation_rate_hz);
    rc.fluctuation_depth = r.value("fluctuation_depth", rc.fluctuation_depth);
    rc.brightness_gamma_max = r.value("brightness_gamma_max", rc.brightness_gamma_max);
    rc.brightness_gamma_min = r.value("brightness_gamma_min", rc.brightness_gamma_min);
    rc.attack_window_s = r.value("attack_window_s", rc.attack_window_s);
    rc.attack_noise_gain = r.value("attack_noise_gain", rc.attack_noise_gain);
    rc.noise_floor = r.value("noise_floor", rc.noise_floor);
  }
  if (j.contains("synth")) {
    const json& s = j.at("synth");
    c.synth.num_harmonics = s.value("num_harmonics", c.synth.num_harmonics);
    c.synth.num_noise_bands = s.value("num_noise_bands", c.synth.num_noise_bands);
    c.synth.fir_taps = s.value("fir_taps", c.synth.fir_taps);
    c.synth.nyquist_taper = s.value("nyquist_taper", c.synth.nyquist_taper);
  }
  if (j.contains("intonation")) {
    const json& i = j.at("intonation");
    c.intonation.bias_mean_st = i.value("bias_mean_st", c.intonation.bias_mean_st);
    c.intonation.bias_std_st = i.value("bias_std_st", c.intonation.bias_std_st);
    c.intonation.drift_std_st = i.value("drift_std_st", c.intonation.drift_std_st);
  }
  if (j.contains("pitch_correction")) {
    const json& p = j.at("pitch_correction");
    if (p.contains("alpha_mode")) {
      c.alpha.mode = alphaModeFromName(p.at("alpha_mode").get<std::string>());
    }
    c.alpha.fixed_value = p.value("alpha_fixed_value", c.alpha.fixed_value);
  }
  if (j.contains("mastering")) {
    const json& m = j.at("mastering");
    c.mastering.target_lufs = m.value("target_lufs", c.mastering.target_lufs);
    c.mastering.peak_ceiling_dbfs =
        m.value("peak_ceiling_dbfs", c.mastering.peak_ceiling_dbfs);
  }
  if (j.contains("split")) {
    const json& s = j.at("split");
    c.split.train = s.value("train", c.split.train);
    c.split.valid = s.value("valid", c.split.valid);
    c.split.test = s.value("test", c.split.test);
  }
  if (j.contains("expression_priors")) {
    for (const auto& [name, value] : j.at("expression_priors").items()) {
      ExpressionPrior prior;
      prior.mean = value.at("mean").get<std::array<double, 6>>();
      prior.stddev = value.at("stddev").get<std::array<double, 6>>();
      c.priors.set(instrumentFromName(name), prior);
    }
  }
  if (j.contains("instrument_ranges")) {
    for (const auto& [name, value] : j.at("instrument_ranges").items()) {
      InstrumentRange range;
      range.min_pitch = value.at("min_pitch").get<int>();
      range.max_pitch = value.at("max_pitch").get<int>();
      c.instrument_ranges[instrumentFromName(name)] = range;
    }
  }
}

}  // namespace

void PipelineConfig::validate() const {
  if (num_tracks_per_ensemble < 0) {
    throw std::invalid_argument("num_tracks_per_ensemble must be >= 0");
  }
  if (ensembles.empty()) throw std::invalid_argument("no ensembles enabled");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (sample_rate <= 0 || frame_rate <= 0) {
    throw std::invalid_argument("sample_rate and frame_rate must be > 0");
  }
  const double hop = sample_rate / frame_rate;
  if (std::abs(hop - std::lround(hop)) > 1e-9) {
    throw std::invalid_argument("sample_rate must be an integer multiple of frame_rate");
  }
  if (model.type != "markov" && model.type != "external") {
    throw std::invalid_argument("model.type must be markov or external");
  }
  if (model.type == "external" && model.external_dir.empty()) {
    throw std::invalid_argument("external model needs external_dir");
  }
  if (max_sample_attempts < 1) {
    throw std::invalid_argument("max_sample_attempts must be >= 1");
  }
  gibbs.validate();
  ranges.validate();
  tempo.validate();
  microtiming.validate();
  RenderConfig render_full = render;
  render_full.frame_rate = frame_rate;
  render_full.num_harmonics = synth.num_harmonics;
  render_full.num_noise_bands = synth.num_noise_bands;
  render_full.validate();
  SynthConfig synth_full = synth;
  synth_full.sample_rate = sample_rate;
  synth_full.validate();
  split.validate();
  if (priors.priors().empty()) {
    throw std::invalid_argument("no expression priors configured");
  }
}

std::string configToJson(const PipelineConfig& config) {
  return toJson(config).dump(2) + "\n";
}

PipelineConfig configFromJson(const std::string& text) {
  PipelineConfig config;
  fromJson(json::parse(text), config);
  return config;
}

PipelineConfig loadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return configFromJson(text);
}

void saveConfigFile(const std::filesystem::path& path,
                    const PipelineConfig& config) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config: " + path.string());
  out << configToJson(config);
}

}  // namespace choralegen
