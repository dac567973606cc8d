// Assembles rendered note segments into one contiguous framewise stream for a
// stem.
#pragma once

#include <vector>

#include "expression/synthesis_params.h"

namespace choralegen {

struct StitchConfig {
  double crossfade_s = 0.010;
};

/// Places ordered, non-overlapping segments on a track-length frame grid.
/// Gaps get amplitude and noise 0 while f0 and the harmonic distribution hold
/// their last value (first value before the first note). Where two segments
/// abut, the amplitude curve is linearly smoothed across the boundary over
/// the crossfade window; an isolated segment is copied through unchanged.
SynthesisParams stitchNoteSegments(const std::vector<NoteSegment>& segments,
                                   long track_frames,
                                   const StitchConfig& config = {});

}  // namespace choralegen
