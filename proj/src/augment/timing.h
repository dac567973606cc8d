// Realizes quantized notes into seconds at a sampled tempo, with per-note
// microtiming offsets and overlap repair.
#pragma once

#include <span>
#include <vector>

#include "augment/microtiming.h"
#include "augment/performance_note.h"
#include "score/pianoroll.h"

namespace choralegen {

/// Seconds per sixteenth step at the given tempo.
double stepSeconds(int bpm);

/// Shifts each note by an independent truncated-normal offset; the note's
/// duration moves with its onset. If an offset note would overlap its
/// same-part successor, the shared boundary is moved to the midpoint of the
/// conflicting region (trimming whichever side is needed).
///
/// Instruments are filled in later by orchestration; the returned notes carry
/// the part's default instrument until then.
std::vector<PerformanceNote> realizeTiming(std::span<const ScoreNote> notes,
                                           int bpm,
                                           const MicrotimingConfig& microtiming,
                                           Rng& rng);

}  // namespace choralegen
