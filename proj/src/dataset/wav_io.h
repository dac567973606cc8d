// 16-bit PCM RIFF/WAVE reading and writing with TPDF-dithered quantization.
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "core/audio_buffer.h"

namespace choralegen {

/// Quantizes floats to 16-bit with triangular (TPDF) dither of +/-1 LSB,
/// deterministically keyed. Values are clamped to the representable range.
std::vector<int16_t> quantizeWithDither(std::span<const double> samples,
                                        uint64_t dither_key);

/// Writes mono 16-bit PCM. The samples on disk equal
/// quantizeWithDither(audio.samples, dither_key) exactly.
void writeWav16(const std::filesystem::path& path, const AudioBuffer& audio,
                uint64_t dither_key);

struct WavData {
  std::vector<int16_t> samples;
  int sample_rate = 0;
  int num_channels = 0;
  int bits_per_sample = 0;

  AudioBuffer toAudio() const {
    AudioBuffer audio;
    audio.sample_rate = sample_rate;
    audio.samples.reserve(samples.size());
    for (int16_t s : samples) audio.samples.push_back(s / 32767.0);
    return audio;
  }
};

/// Reads a PCM WAV file; throws on malformed or non-16-bit content.
WavData readWav16(const std::filesystem::path& path);

}  // namespace choralegen
