// Framewise synthesis controls: f0, amplitude, harmonic distribution and
// filtered-noise band magnitudes.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace choralegen {

/// Framewise control stream for one stem (or one note segment of a stem).
/// All arrays share one frame count; harmonic and noise rows are stored
/// row-major and accessed per frame.
struct SynthesisParams {
  double frame_rate = 250.0;
  int num_harmonics = 0;
  int num_noise_bands = 0;

  std::vector<double> f0_semitones;  ///< fractional MIDI pitch per frame
  std::vector<double> amplitude;     ///< linear gain >= 0; 0 on silent frames
  std::vector<double> harmonics;     ///< [frames x num_harmonics], rows sum to 1
  std::vector<double> noise;         ///< [frames x num_noise_bands], >= 0

  size_t numFrames() const { return f0_semitones.size(); }

  std::span<double> harmonicsFrame(size_t frame) {
    return {harmonics.data() + frame * num_harmonics,
            static_cast<size_t>(num_harmonics)};
  }
  std::span<const double> harmonicsFrame(size_t frame) const {
    return {harmonics.data() + frame * num_harmonics,
            static_cast<size_t>(num_harmonics)};
  }
  std::span<double> noiseFrame(size_t frame) {
    return {noise.data() + frame * num_noise_bands,
            static_cast<size_t>(num_noise_bands)};
  }
  std::span<const double> noiseFrame(size_t frame) const {
    return {noise.data() + frame * num_noise_bands,
            static_cast<size_t>(num_noise_bands)};
  }

  void resize(size_t frames) {
    f0_semitones.assign(frames, 0.0);
    amplitude.assign(frames, 0.0);
    harmonics.assign(frames * num_harmonics, 0.0);
    noise.assign(frames * num_noise_bands, 0.0);
  }
};

/// A rendered note placed on the stem's frame grid.
struct NoteSegment {
  long start_frame = 0;
  SynthesisParams params;
};

}  // namespace choralegen
