#include "mixdown/mastering.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mixdown/loudness.h"

namespace choralegen {

namespace {

void applyGain(AudioBuffer& audio, double linear) {
  for (double& s : audio.samples) s *= linear;
}

}  // namespace

NormalizeResult normalizeToLufs(const AudioBuffer& audio, double target_lufs) {
  const std::optional<double> measured = integratedLoudness(audio);
  if (!measured.has_value()) {
    throw std::runtime_error("cannot normalize silence");
  }
  NormalizeResult result;
  result.measured_lufs = *measured;
  result.gain_db = target_lufs - *measured;
  result.audio = audio;
  applyGain(result.audio, std::pow(10.0, result.gain_db / 20.0));
  return result;
}

MixResult mixStems(std::vector<AudioBuffer> stems, const MasteringConfig& config) {
  if (stems.empty()) throw std::invalid_argument("no stems to mix");
  const size_t length = stems.front().samples.size();
  const int sample_rate = stems.front().sample_rate;
  for (const AudioBuffer& stem : stems) {
    if (stem.samples.size() != length || stem.sample_rate != sample_rate) {
      throw std::invalid_argument("stem length or sample rate mismatch");
    }
  }

  MixResult result;
  result.mix.sample_rate = sample_rate;
  result.mix.samples.assign(length, 0.0);
  for (const AudioBuffer& stem : stems) {
    for (size_t i = 0; i < length; ++i) {
      result.mix.samples[i] += stem.samples[i];
    }
  }

  double peak = 0.0;
  for (double s : result.mix.samples) peak = std::max(peak, std::abs(s));

  const double ceiling = std::pow(10.0, config.peak_ceiling_dbfs / 20.0);
  if (peak > ceiling) {
    const double gain = ceiling / peak;
    result.peak_guard_gain_db = 20.0 * std::log10(gain);
    applyGain(result.mix, gain);
    for (AudioBuffer& stem : stems) applyGain(stem, gain);
    peak = ceiling;
  }
  result.mix_peak_dbfs = peak > 0.0 ? 20.0 * std::log10(peak) : -1e12;
  result.stems = std::move(stems);
  return result;
}

MasterResult masterTrack(const std::vector<AudioBuffer>& raw_stems,
                         const MasteringConfig& config) {
  MasterResult result;
  std::vector<AudioBuffer> normalized;
  normalized.reserve(raw_stems.size());
  for (const AudioBuffer& stem : raw_stems) {
    StemMastering record;
    const std::optional<double> measured = integratedLoudness(stem);
    if (!measured.has_value()) {
      // Unmeasurable stem: keep unity gain, flag it, continue the track.
      record.silent = true;
      normalized.push_back(stem);
    } else {
      record.measured_lufs = *measured;
      record.gain_db = config.target_lufs - *measured;
      AudioBuffer scaled = stem;
      applyGain(scaled, std::pow(10.0, record.gain_db / 20.0));
      normalized.push_back(std::move(scaled));
    }
    result.stems.push_back(record);
  }
  result.mix = mixStems(std::move(normalized), config);
  return result;
}

}  // namespace choralegen
