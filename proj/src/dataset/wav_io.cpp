#include "dataset/wav_io.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "core/rng.h"

namespace choralegen {

namespace {

void putU32(std::string& out, uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void putU16(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

uint32_t readU32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return b[0] | (b[1] << 8) | (b[2] << 16) | (uint32_t(b[3]) << 24);
}

uint16_t readU16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

}  // namespace

std::vector<int16_t> quantizeWithDither(std::span<const double> samples,
                                        uint64_t dither_key) {
  const UniformStream dither(dither_key);
  std::vector<int16_t> out(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    // TPDF: difference of two uniforms spans [-1, 1) LSB.
    const double tpdf = dither.at(2 * i) - dither.at(2 * i + 1);
    const double scaled = samples[i] * 32767.0 + tpdf;
    const long q = std::lround(scaled);
    out[i] = static_cast<int16_t>(std::clamp<long>(q, -32768, 32767));
  }
  return out;
}

void writeWav16(const std::filesystem::path& path, const AudioBuffer& audio,
                uint64_t dither_key) {
  const std::vector<int16_t> pcm = quantizeWithDither(audio.samples, dither_key);
  const uint32_t data_bytes = static_cast<uint32_t>(pcm.size() * 2);
  const uint32_t sample_rate = static_cast<uint32_t>(audio.sample_rate);

  std::string header;
  header.reserve(44);
  header += "RIFF";
  putU32(header, 36 + data_bytes);
  header += "WAVE";
  header += "fmt ";
  putU32(header, 16);
  putU16(header, 1);  // PCM
  putU16(header, 1);  // mono
  putU32(header, sample_rate);
  putU32(header, sample_rate * 2);  // byte rate
  putU16(header, 2);                // block align
  putU16(header, 16);               // bits per sample
  header += "data";
  putU32(header, data_bytes);

  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for write: " + path.string());
  file.write(header.data(), static_cast<std::streamsize>(header.size()));
  for (int16_t s : pcm) {
    const char bytes[2] = {static_cast<char>(s & 0xff),
                           static_cast<char>((s >> 8) & 0xff)};
    file.write(bytes, 2);
  }
  if (!file) throw std::runtime_error("write failed: " + path.string());
}

WavData readWav16(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for read: " + path.string());

  char tag[4];
  file.read(tag, 4);
  if (!file || std::memcmp(tag, "RIFF", 4) != 0) {
    throw std::runtime_error("not a RIFF file: " + path.string());
  }
  readU32(file);  // riff size
  file.read(tag, 4);
  if (!file || std::memcmp(tag, "WAVE", 4) != 0) {
    throw std::runtime_error("not a WAVE file: " + path.string());
  }

  WavData data;
  bool have_fmt = false;
  while (file.read(tag, 4)) {
    const uint32_t chunk_size = readU32(file);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      const uint16_t format = readU16(file);
      data.num_channels = readU16(file);
      data.sample_rate = static_cast<int>(readU32(file));
      readU32(file);  // byte rate
      readU16(file);  // block align
      data.bits_per_sample = readU16(file);
      if (chunk_size > 16) file.seekg(chunk_size - 16, std::ios::cur);
      if (format != 1) throw std::runtime_error("not PCM: " + path.string());
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw std::runtime_error("data before fmt: " + path.string());
      if (data.bits_per_sample != 16) {
        throw std::runtime_error("not 16-bit: " + path.string());
      }
      const size_t count = chunk_size / 2;
      data.samples.resize(count);
      for (size_t i = 0; i < count; ++i) {
        unsigned char b[2];
        file.read(reinterpret_cast<char*>(b), 2);
        data.samples[i] = static_cast<int16_t>(b[0] | (b[1] << 8));
      }
      return data;
    } else {
      file.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  throw std::runtime_error("no data chunk: " + path.string());
}

}  // namespace choralegen
