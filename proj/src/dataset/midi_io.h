// Standard MIDI File writing and parsing for monophonic stem tracks.
// Resolution is 220 PPQN so sixteenth steps land on exact 55-tick boundaries.
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "augment/performance_note.h"
#include "core/types.h"

namespace choralegen {

inline constexpr int kMidiPpqn = 220;
inline constexpr int kTicksPerStep = kMidiPpqn / 4;

/// Writes a format-0 SMF with one tempo meta-event, a program change, and
/// the stem's notes at their quantized grid times. Velocity encodes nothing
/// semantic; a fixed mapping from the configured volume is used upstream.
void writeStemMidi(const std::filesystem::path& path,
                   std::span<const PerformanceNote> notes, int bpm,
                   InstrumentId instrument,
                   std::span<const int> velocities = {});

struct MidiNote {
  int pitch = 0;
  int velocity = 0;
  long onset_tick = 0;
  long duration_ticks = 0;
  int track = 0;
  int channel = 0;
};

struct ParsedMidi {
  int ppqn = 0;
  double tempo_us_per_quarter = 500000.0;
  std::vector<MidiNote> notes;

  double tickSeconds() const { return tempo_us_per_quarter / 1e6 / ppqn; }
  double durationSeconds() const;
};

/// Minimal SMF reader: merges note events of all tracks, takes the first
/// tempo event. Supports formats 0 and 1 with running status.
ParsedMidi readMidi(const std::filesystem::path& path);

}  // namespace choralegen
