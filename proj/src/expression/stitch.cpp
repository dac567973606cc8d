#include "expression/stitch.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace choralegen {

SynthesisParams stitchNoteSegments(const std::vector<NoteSegment>& segments,
                                   long track_frames,
                                   const StitchConfig& config) {
  if (segments.empty()) throw std::invalid_argument("no segments to stitch");
  if (track_frames <= 0) throw std::invalid_argument("track_frames must be > 0");

  const SynthesisParams& first = segments.front().params;
  SynthesisParams out;
  out.frame_rate = first.frame_rate;
  out.num_harmonics = first.num_harmonics;
  out.num_noise_bands = first.num_noise_bands;
  out.resize(track_frames);

  long previous_end = 0;
  for (size_t s = 0; s < segments.size(); ++s) {
    const NoteSegment& segment = segments[s];
    const SynthesisParams& p = segment.params;
    if (p.num_harmonics != out.num_harmonics ||
        p.num_noise_bands != out.num_noise_bands ||
        p.frame_rate != out.frame_rate) {
      throw std::invalid_argument("segment layout mismatch");
    }
    if (s > 0 && segment.start_frame < previous_end) {
      throw std::invalid_argument("overlapping segments");
    }
    previous_end = segment.start_frame + static_cast<long>(p.numFrames());
    if (segment.start_frame < 0 || previous_end > track_frames) {
      throw std::invalid_argument("segment outside track span");
    }

    for (size_t i = 0; i < p.numFrames(); ++i) {
      const long frame = segment.start_frame + static_cast<long>(i);
      out.f0_semitones[frame] = p.f0_semitones[i];
      out.amplitude[frame] = p.amplitude[i];
      std::copy(p.harmonicsFrame(i).begin(), p.harmonicsFrame(i).end(),
                out.harmonicsFrame(frame).begin());
      std::copy(p.noiseFrame(i).begin(), p.noiseFrame(i).end(),
                out.noiseFrame(frame).begin());
    }
  }

  // Hold f0 and harmonic distribution through gaps.
  const long first_start = segments.front().start_frame;
  for (long frame = 0; frame < first_start; ++frame) {
    out.f0_semitones[frame] = segments.front().params.f0_semitones[0];
    std::copy(segments.front().params.harmonicsFrame(0).begin(),
              segments.front().params.harmonicsFrame(0).end(),
              out.harmonicsFrame(frame).begin());
  }
  for (size_t s = 0; s < segments.size(); ++s) {
    const long end =
        segments[s].start_frame + static_cast<long>(segments[s].params.numFrames());
    const long next_start = s + 1 < segments.size()
                                ? segments[s + 1].start_frame
                                : track_frames;
    const SynthesisParams& p = segments[s].params;
    const size_t last = p.numFrames() - 1;
    for (long frame = end; frame < next_start; ++frame) {
      out.f0_semitones[frame] = p.f0_semitones[last];
      std::copy(p.harmonicsFrame(last).begin(), p.harmonicsFrame(last).end(),
                out.harmonicsFrame(frame).begin());
    }
  }

  // Smooth the amplitude across abutting boundaries.
  const long half = std::lround(0.5 * config.crossfade_s * out.frame_rate);
  if (half > 0) {
    for (size_t s = 0; s + 1 < segments.size(); ++s) {
      const long end =
          segments[s].start_frame + static_cast<long>(segments[s].params.numFrames());
      if (segments[s + 1].start_frame != end) continue;  // gap, not abutting
      const long lo = std::max(segments[s].start_frame, end - half);
      const long hi = std::min(
          segments[s + 1].start_frame +
              static_cast<long>(segments[s + 1].params.numFrames()),
          end + half);
      if (hi - lo < 2) continue;
      const double a = out.amplitude[lo];
      const double b = out.amplitude[hi - 1];
      for (long frame = lo; frame < hi; ++frame) {
        const double frac =
            static_cast<double>(frame - lo) / static_cast<double>(hi - 1 - lo);
        out.amplitude[frame] = a + (b - a) * frac;
      }
    }
  }
  return out;
}

}  // namespace choralegen
