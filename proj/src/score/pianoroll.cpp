#include "score/pianoroll.h"

#include <stdexcept>
#include <string>

namespace choralegen {

void PianoRoll::set(int voice, int step, uint8_t pitch) {
  if (voice < 0 || voice >= kNumVoices || step < 0 || step >= kNumSteps) {
    throw std::out_of_range("pianoroll cell out of range");
  }
  if (pitch > 127) {
    throw std::invalid_argument("pitch out of MIDI range: " +
                                std::to_string(int(pitch)));
  }
  grid_[voice][step] = pitch;
}

std::vector<ScoreNote> pianorollToNotes(const PianoRoll& roll) {
  std::vector<ScoreNote> notes;
  notes.reserve(PianoRoll::kNumVoices * 16);
  for (int voice = 0; voice < PianoRoll::kNumVoices; ++voice) {
    int run_start = 0;
    uint8_t run_pitch = roll.at(voice, 0);
    for (int step = 1; step <= PianoRoll::kNumSteps; ++step) {
      const bool run_ends =
          step == PianoRoll::kNumSteps || roll.at(voice, step) != run_pitch;
      if (run_ends) {
        notes.push_back(ScoreNote{static_cast<Part>(voice), run_pitch,
                                  run_start, step - run_start});
        if (step < PianoRoll::kNumSteps) {
          run_start = step;
          run_pitch = roll.at(voice, step);
        }
      }
    }
  }
  return notes;
}

PianoRoll notesToPianoroll(std::span<const ScoreNote> notes) {
  PianoRoll roll;
  std::array<std::array<bool, PianoRoll::kNumSteps>, PianoRoll::kNumVoices>
      covered{};
  for (const ScoreNote& note : notes) {
    const int voice = static_cast<int>(note.part);
    if (note.onset_step < 0 ||
        note.onset_step + note.duration_steps > PianoRoll::kNumSteps ||
        note.duration_steps <= 0) {
      throw std::invalid_argument("note outside grid");
    }
    for (int step = note.onset_step; step < note.onset_step + note.duration_steps;
         ++step) {
      if (covered[voice][step]) {
        throw std::invalid_argument("overlapping notes in voice");
      }
      covered[voice][step] = true;
      roll.set(voice, step, static_cast<uint8_t>(note.pitch));
    }
  }
  for (int voice = 0; voice < PianoRoll::kNumVoices; ++voice) {
    for (int step = 0; step < PianoRoll::kNumSteps; ++step) {
      if (!covered[voice][step]) {
        throw std::invalid_argument("notes do not tile the grid");
      }
    }
  }
  return roll;
}

}  // namespace choralegen
