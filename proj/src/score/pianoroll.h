// Four-voice fixed-size pianoroll and its conversion to note events.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "core/types.h"

namespace choralegen {

/// One cell of the sampling grid.
struct Cell {
  int voice = 0;
  int step = 0;

  auto operator<=>(const Cell&) const = default;
};

/// A 4-voice x 128-step grid of MIDI pitches: 8 measures of 4/4 quantized at
/// sixteenths. Every cell always holds a pitch; there is no rest symbol.
class PianoRoll {
 public:
  static constexpr int kNumVoices = kNumParts;
  static constexpr int kNumSteps = 128;
  static constexpr int kNumCells = kNumVoices * kNumSteps;
  /// Each step is 1/16 of a measure.
  static constexpr double kStepDuration = 1.0 / 16.0;

  PianoRoll() { for (auto& voice : grid_) voice.fill(60); }

  uint8_t at(int voice, int step) const { return grid_[voice][step]; }
  uint8_t at(Cell cell) const { return grid_[cell.voice][cell.step]; }

  void set(int voice, int step, uint8_t pitch);
  void set(Cell cell, uint8_t pitch) { set(cell.voice, cell.step, pitch); }

  bool operator==(const PianoRoll& other) const { return grid_ == other.grid_; }

 private:
  std::array<std::array<uint8_t, kNumSteps>, kNumVoices> grid_;
};

/// A quantized note on the sixteenth grid, produced by merging consecutive
/// equal pitches of one voice.
struct ScoreNote {
  Part part = Part::kSoprano;
  int pitch = 60;
  int onset_step = 0;
  int duration_steps = 1;

  bool operator==(const ScoreNote&) const = default;
};

/// Merges runs of equal pitches per voice into notes. Per voice, the notes
/// tile [0, kNumSteps) exactly and never overlap.
std::vector<ScoreNote> pianorollToNotes(const PianoRoll& roll);

/// Inverse of pianorollToNotes: rasterizes notes back onto the grid. Notes
/// must tile each voice exactly.
PianoRoll notesToPianoroll(std::span<const ScoreNote> notes);

}  // namespace choralegen
