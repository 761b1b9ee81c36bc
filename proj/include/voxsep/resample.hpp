#pragma once

#include <cmath>
#include <vector>

#include "voxsep/audio.hpp"
#include "voxsep/common.hpp"

// Band-limited arbitrary-ratio resampling: polyphase windowed sinc with a
// Kaiser window, 64 taps per phase at the output rate. When downsampling the
// kernel is stretched by the ratio so the cutoff tracks the narrower Nyquist.

namespace voxsep {

namespace detail {

inline double bessel_i0(double x) {
  // power-series I0, converges fast for the beta range used here
  double sum = 1.0, term = 1.0;
  double half = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half / k) * (half / k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

inline double kaiser(double t, double beta) {
  // t in [-1, 1]
  double u = 1.0 - t * t;
  if (u < 0.0) return 0.0;
  return bessel_i0(beta * std::sqrt(u)) / bessel_i0(beta);
}

}  // namespace detail

// ratio = output samples per input sample. Output length = round(len * ratio).
inline std::vector<double> resample_ratio(const std::vector<double>& x, double ratio) {
  if (!(ratio > 0.0)) throw InvalidArgument("resample: ratio must be positive");
  if (x.empty()) return {};
  if (ratio == 1.0) return x;

  constexpr int kHalfTaps = 32;  // 64 taps per phase
  constexpr double kBeta = 8.6;
  constexpr double kRolloff = 0.9175;

  const double scale = std::min(1.0, ratio);       // anti-alias cutoff vs input rate
  const double half_width = kHalfTaps / scale;     // kernel half-extent in input samples
  const size_t out_len = size_t(std::llround(double(x.size()) * ratio));

  std::vector<double> y(out_len, 0.0);
  const auto n = ptrdiff_t(x.size());
  for (size_t i = 0; i < out_len; ++i) {
    double t = double(i) / ratio;  // position in input samples
    auto k0 = ptrdiff_t(std::ceil(t - half_width));
    auto k1 = ptrdiff_t(std::floor(t + half_width));
    double acc = 0.0;
    for (ptrdiff_t k = k0; k <= k1; ++k) {
      if (k < 0 || k >= n) continue;
      double d = (t - double(k)) * scale;
      double s = (d == 0.0) ? kRolloff : std::sin(kPi * kRolloff * d) / (kPi * d);
      acc += x[size_t(k)] * s * detail::kaiser(d / kHalfTaps, kBeta);
    }
    y[i] = acc * scale;
  }
  return y;
}

// Rate-changing resample. Output length = round(len * target / source).
inline AudioClip resample(const AudioClip& clip, int target_rate) {
  if (target_rate <= 0) throw InvalidArgument("resample: target rate must be positive");
  if (clip.sample_rate <= 0) throw InvalidArgument("resample: source rate must be positive");
  if (target_rate == clip.sample_rate) return clip;
  AudioClip out;
  out.sample_rate = target_rate;
  out.samples = resample_ratio(clip.samples, double(target_rate) / double(clip.sample_rate));
  return out;
}

}  // namespace voxsep
