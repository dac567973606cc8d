#include "dataset/midi_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace choralegen {

namespace {

void putVarLen(std::string& out, uint32_t value) {
  uint8_t bytes[4];
  int count = 0;
  do {
    bytes[count++] = value & 0x7f;
    value >>= 7;
  } while (value > 0);
  for (int i = count - 1; i >= 0; --i) {
    uint8_t b = bytes[i];
    if (i > 0) b |= 0x80;
    out.push_back(static_cast<char>(b));
  }
}

void putU32be(std::string& out, uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

void putU16be(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

struct ByteReader {
  const std::string& data;
  size_t pos = 0;

  uint8_t u8() {
    if (pos >= data.size()) throw std::runtime_error("truncated MIDI file");
    return static_cast<uint8_t>(data[pos++]);
  }
  uint16_t u16be() { return static_cast<uint16_t>(u8() << 8 | u8()); }
  uint32_t u32be() {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | u8();
    return v;
  }
  uint32_t varLen() {
    uint32_t value = 0;
    for (int i = 0; i < 4; ++i) {
      const uint8_t b = u8();
      value = (value << 7) | (b & 0x7f);
      if (!(b & 0x80)) return value;
    }
    throw std::runtime_error("bad MIDI varlen");
  }
  void skip(size_t n) {
    if (pos + n > data.size()) throw std::runtime_error("truncated MIDI file");
    pos += n;
  }
};

}  // namespace

double ParsedMidi::durationSeconds() const {
  long end = 0;
  for (const MidiNote& note : notes) {
    end = std::max(end, note.onset_tick + note.duration_ticks);
  }
  return end * tickSeconds();
}

void writeStemMidi(const std::filesystem::path& path,
                   std::span<const PerformanceNote> notes, int bpm,
                   InstrumentId instrument, std::span<const int> velocities) {
  if (bpm < 1) throw std::invalid_argument("bpm must be >= 1");
  if (!velocities.empty() && velocities.size() != notes.size()) {
    throw std::invalid_argument("velocity count mismatch");
  }

  struct Event {
    long tick;
    int order;  // offs before ons at the same tick
    uint8_t status, data1, data2;
  };
  std::vector<Event> events;
  events.reserve(notes.size() * 2);
  for (size_t i = 0; i < notes.size(); ++i) {
    const PerformanceNote& note = notes[i];
    const long on = static_cast<long>(note.quantized_onset_step) * kTicksPerStep;
    const long off = on + static_cast<long>(note.quantized_duration_steps) *
                              kTicksPerStep;
    const int velocity = velocities.empty() ? 80 : velocities[i];
    events.push_back({on, 1, 0x90, static_cast<uint8_t>(note.pitch),
                      static_cast<uint8_t>(std::clamp(velocity, 1, 127))});
    events.push_back({off, 0, 0x80, static_cast<uint8_t>(note.pitch), 64});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.tick != b.tick ? a.tick < b.tick : a.order < b.order;
  });

  std::string track;
  // Tempo meta-event at tick 0.
  const uint32_t us_per_quarter =
      static_cast<uint32_t>(std::lround(60e6 / bpm));
  putVarLen(track, 0);
  track += '\xff';
  track += '\x51';
  track += '\x03';
  track.push_back(static_cast<char>((us_per_quarter >> 16) & 0xff));
  track.push_back(static_cast<char>((us_per_quarter >> 8) & 0xff));
  track.push_back(static_cast<char>(us_per_quarter & 0xff));
  // Program change.
  putVarLen(track, 0);
  track += '\xc0';
  track.push_back(static_cast<char>(gmProgram(instrument)));

  long cursor = 0;
  for (const Event& event : events) {
    putVarLen(track, static_cast<uint32_t>(event.tick - cursor));
    cursor = event.tick;
    track.push_back(static_cast<char>(event.status));
    track.push_back(static_cast<char>(event.data1));
    track.push_back(static_cast<char>(event.data2));
  }
  // End of track.
  putVarLen(track, 0);
  track += '\xff';
  track += '\x2f';
  track += '\x00';

  std::string file_data;
  file_data += "MThd";
  putU32be(file_data, 6);
  putU16be(file_data, 0);  // format 0
  putU16be(file_data, 1);  // one track
  putU16be(file_data, kMidiPpqn);
  file_data += "MTrk";
  putU32be(file_data, static_cast<uint32_t>(track.size()));
  file_data += track;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for write: " + path.string());
  out.write(file_data.data(), static_cast<std::streamsize>(file_data.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

ParsedMidi readMidi(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for read: " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  ByteReader reader{data};

  if (data.size() < 14 || data.compare(0, 4, "MThd") != 0) {
    throw std::runtime_error("not an SMF file: " + path.string());
  }
  reader.pos = 4;
  const uint32_t header_len = reader.u32be();
  const uint16_t format = reader.u16be();
  const uint16_t num_tracks = reader.u16be();
  const uint16_t division = reader.u16be();
  if (format > 1) throw std::runtime_error("unsupported SMF format");
  if (division & 0x8000) throw std::runtime_error("SMPTE division unsupported");
  reader.skip(header_len - 6);

  ParsedMidi parsed;
  parsed.ppqn = division;
  bool tempo_seen = false;

  struct Open {
    int pitch;
    int velocity;
    long tick;
  };

  for (int t = 0; t < num_tracks; ++t) {
    if (data.compare(reader.pos, 4, "MTrk") != 0) {
      throw std::runtime_error("missing MTrk chunk");
    }
    reader.pos += 4;
    const uint32_t length = reader.u32be();
    const size_t track_end = reader.pos + length;

    long tick = 0;
    uint8_t running = 0;
    std::vector<Open> open;
    while (reader.pos < track_end) {
      tick += reader.varLen();
      uint8_t status = reader.u8();
      if (status < 0x80) {
        reader.pos -= 1;
        status = running;
        if (status < 0x80) throw std::runtime_error("bad running status");
      } else if (status < 0xf0) {
        running = status;
      }

      if (status == 0xff) {
        const uint8_t type = reader.u8();
        const uint32_t len = reader.varLen();
        if (type == 0x51 && len == 3 && !tempo_seen) {
          const uint32_t us = (uint32_t(reader.u8()) << 16) |
                              (uint32_t(reader.u8()) << 8) | reader.u8();
          parsed.tempo_us_per_quarter = us;
          tempo_seen = true;
        } else {
          reader.skip(len);
        }
        continue;
      }
      if (status == 0xf0 || status == 0xf7) {
        reader.skip(reader.varLen());
        continue;
      }

      const uint8_t kind = status & 0xf0;
      const uint8_t d1 = reader.u8();
      const uint8_t d2 = (kind == 0xc0 || kind == 0xd0) ? 0 : reader.u8();
      if (kind == 0x90 && d2 > 0) {
        open.push_back({d1, d2, tick});
      } else if (kind == 0x80 || (kind == 0x90 && d2 == 0)) {
        for (size_t i = 0; i < open.size(); ++i) {
          if (open[i].pitch == d1) {
            parsed.notes.push_back(MidiNote{d1, open[i].velocity, open[i].tick,
                                            tick - open[i].tick, t,
                                            status & 0x0f});
            open.erase(open.begin() + static_cast<long>(i));
            break;
          }
        }
      }
    }
    reader.pos = track_end;
  }

  std::sort(parsed.notes.begin(), parsed.notes.end(),
            [](const MidiNote& a, const MidiNote& b) {
              return a.onset_tick != b.onset_tick ? a.onset_tick < b.onset_tick
                                                  : a.pitch < b.pitch;
            });
  return parsed;
}

}  // namespace choralegen
