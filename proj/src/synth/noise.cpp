#include "synth/noise.h"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>

#include "core/fft.h"
#include "core/rng.h"

namespace choralegen {

namespace {

size_t nextPow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

/// Piecewise-linear interpolation of the band envelope onto an FFT bin.
double envelopeAt(std::span<const double> bands, double position) {
  const size_t count = bands.size();
  if (position <= 0.0) return bands[0];
  if (position >= static_cast<double>(count - 1)) return bands[count - 1];
  const size_t lo = static_cast<size_t>(position);
  const double frac = position - static_cast<double>(lo);
  return bands[lo] + (bands[lo + 1] - bands[lo]) * frac;
}

}  // namespace

std::vector<double> designNoiseFir(std::span<const double> band_magnitudes,
                                   const SynthConfig& config) {
  config.validate();
  if (band_magnitudes.size() < 2) {
    throw std::invalid_argument("need at least two noise bands");
  }
  for (double m : band_magnitudes) {
    if (m < 0.0 || !std::isfinite(m)) {
      throw std::invalid_argument("noise magnitudes must be finite and >= 0");
    }
  }

  const int taps = config.fir_taps;
  const int delay = (taps - 1) / 2;
  const size_t n = nextPow2(static_cast<size_t>(taps) * 2);

  // Sample the envelope on the FFT grid with linear phase e^{-j w D}.
  std::vector<std::complex<double>> spectrum(n);
  const size_t half = n / 2;
  for (size_t k = 0; k <= half; ++k) {
    const double position = static_cast<double>(k) / static_cast<double>(half) *
                            static_cast<double>(band_magnitudes.size() - 1);
    const double mag = envelopeAt(band_magnitudes, position);
    const double phase =
        -2.0 * std::numbers::pi * static_cast<double>(k) * delay / n;
    spectrum[k] = std::polar(mag, phase);
    if (k > 0 && k < half) spectrum[n - k] = std::conj(spectrum[k]);
  }
  fft(spectrum, true);

  // Truncate to the tap count and window; the window peaks at the delay
  // center so a flat envelope stays an exact unit impulse.
  std::vector<double> taps_out(taps);
  for (int i = 0; i < taps; ++i) {
    const double window =
        0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / (taps - 1)));
    taps_out[i] = spectrum[i].real() * window;
  }
  return taps_out;
}

AudioBuffer synthesizeNoise(const SynthesisParams& params,
                            const SynthConfig& config) {
  config.validate();
  const size_t frames = params.numFrames();
  if (frames == 0) throw std::invalid_argument("no frames");
  const double hop_exact = config.sample_rate / params.frame_rate;
  const int hop = static_cast<int>(std::lround(hop_exact));
  if (std::abs(hop_exact - hop) > 1e-9 || hop < 1) {
    throw std::invalid_argument(
        "sample_rate must be an integer multiple of frame_rate");
  }

  const size_t total = frames * hop;
  AudioBuffer out;
  out.sample_rate = config.sample_rate;
  out.samples.assign(total, 0.0);

  const int block = 2 * hop;  // 50% overlap
  const int delay = (config.fir_taps - 1) / 2;

  // Periodic Hann at 50% overlap sums to one exactly.
  std::vector<double> window(block);
  for (int i = 0; i < block; ++i) {
    window[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / block));
  }

  // Filters are cached per distinct envelope; sustained notes reuse one
  // design across all their frames.
  std::map<std::vector<double>, std::vector<double>> filter_cache;

  const GaussianStream noise_stream(config.noise_key);
  // Blocks start half a hop before the frame; shift stream indices so they
  // stay nonnegative.
  const uint64_t stream_offset = static_cast<uint64_t>(hop);

  std::vector<double> windowed(block);
  for (size_t frame = 0; frame < frames; ++frame) {
    const auto bands = params.noiseFrame(frame);
    bool silent = true;
    for (double m : bands) {
      if (m < 0.0 || !std::isfinite(m)) {
        throw std::invalid_argument("noise magnitudes must be finite and >= 0");
      }
      if (m > 0.0) silent = false;
    }
    if (silent) continue;

    std::vector<double> key(bands.begin(), bands.end());
    auto it = filter_cache.find(key);
    if (it == filter_cache.end()) {
      it = filter_cache.emplace(std::move(key), designNoiseFir(bands, config)).first;
    }
    const std::vector<double>& fir = it->second;

    const long block_start = static_cast<long>(frame) * hop - hop / 2;
    for (int i = 0; i < block; ++i) {
      const long m = block_start + i;
      windowed[i] = window[i] *
                    noise_stream.at(static_cast<uint64_t>(m + stream_offset));
    }

    // Direct convolution, delay-compensated so the filter is zero-phase.
    const long write_start = block_start - delay;
    const long lo = std::max<long>(0, -write_start);
    const long hi = std::min<long>(block + config.fir_taps - 1,
                                   static_cast<long>(total) - write_start);
    for (long i = lo; i < hi; ++i) {
      const int j_min = static_cast<int>(std::max<long>(0, i - block + 1));
      const int j_max = static_cast<int>(std::min<long>(config.fir_taps - 1, i));
      double acc = 0.0;
      for (int j = j_min; j <= j_max; ++j) {
        acc += fir[j] * windowed[i - j];
      }
      out.samples[write_start + i] += acc;
    }
  }
  return out;
}

}  // namespace choralegen
