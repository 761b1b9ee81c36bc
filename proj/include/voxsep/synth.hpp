#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "voxsep/audio.hpp"
#include "voxsep/common.hpp"

// Deterministic synthetic four-stem tracks: the desk-scale stand-in for a
// real stem corpus. Each stem peaks at or below 0.5 so the mixture keeps
// headroom.

namespace voxsep {

struct SynthParams {
  int sample_rate = 8192;
  double voice_f0_min = 180.0;
  double voice_f0_max = 300.0;
  double peak = 0.4;
};

namespace detail {

inline void normalize_peak(std::vector<double>& x, double peak) {
  double m = peak_abs(x);
  if (m > 0.0) {
    double g = peak / m;
    for (double& v : x) v *= g;
  }
}

inline std::vector<double> synth_voice(std::mt19937_64& rng, size_t n, int rate,
                                       const SynthParams& p) {
  std::uniform_real_distribution<double> uf(p.voice_f0_min, p.voice_f0_max);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double f0 = uf(rng);
  double vib_rate = 4.5 + 2.0 * u01(rng);
  double vib_depth = 0.02 + 0.015 * u01(rng);
  double env_rate = 0.4 + 0.5 * u01(rng);
  int harmonics = 6;
  std::vector<double> h_amp(harmonics);
  for (int h = 0; h < harmonics; ++h) h_amp[h] = (0.7 + 0.6 * u01(rng)) / double(h + 1);

  std::vector<double> x(n, 0.0);
  double phase = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double t = double(i) / rate;
    double f = f0 * (1.0 + vib_depth * std::sin(2.0 * kPi * vib_rate * t));
    phase += 2.0 * kPi * f / rate;
    double env = 0.55 + 0.45 * std::sin(2.0 * kPi * env_rate * t - kPi / 2.0);
    double s = 0.0;
    for (int h = 0; h < harmonics; ++h) s += h_amp[h] * std::sin(double(h + 1) * phase);
    x[i] = env * s;
  }
  normalize_peak(x, p.peak);
  return x;
}

inline std::vector<double> synth_drums(std::mt19937_64& rng, size_t n, int rate,
                                       const SynthParams& p) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double period_s = 0.4 + 0.2 * u01(rng);
  double burst_s = 0.06;
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<double> x(n, 0.0);
  auto period = size_t(period_s * rate);
  auto burst = size_t(burst_s * rate);
  double lp = 0.0;
  for (size_t start = 0; start < n; start += period) {
    lp = 0.0;
    for (size_t j = 0; j < burst && start + j < n; ++j) {
      double decay = std::exp(-8.0 * double(j) / double(burst));
      double w = gauss(rng);
      lp += 0.35 * (w - lp);  // one-pole lowpass shapes the noise burst
      x[start + j] = lp * decay;
    }
  }
  normalize_peak(x, p.peak);
  return x;
}

inline std::vector<double> synth_bass(std::mt19937_64& rng, size_t n, int rate,
                                      const SynthParams& p) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double notes[4] = {55.0, 61.74, 73.42, 82.41};
  double note_s = 0.5;
  std::vector<double> x(n, 0.0);
  auto note_len = size_t(note_s * rate);
  double phase = 0.0;
  int pattern[8];
  for (int& q : pattern) q = int(u01(rng) * 4.0) % 4;
  for (size_t i = 0; i < n; ++i) {
    size_t step = (i / note_len) % 8;
    double f = notes[pattern[step]];
    phase += 2.0 * kPi * f / rate;
    double pos = double(i % note_len) / double(note_len);
    double env = std::exp(-2.0 * pos);
    x[i] = env * std::sin(phase);
  }
  normalize_peak(x, p.peak);
  return x;
}

inline std::vector<double> synth_accompaniment(std::mt19937_64& rng, size_t n, int rate,
                                               const SynthParams& p) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double root = 220.0 * std::pow(2.0, (int(u01(rng) * 5.0) - 2) / 12.0);
  const double chord[3] = {1.0, 1.25, 1.5};
  std::vector<double> x(n, 0.0);
  double tremolo = 0.3 + 0.4 * u01(rng);
  for (size_t i = 0; i < n; ++i) {
    double t = double(i) / rate;
    double env = 0.8 + 0.2 * std::sin(2.0 * kPi * tremolo * t);
    double s = 0.0;
    for (double c : chord) s += std::sin(2.0 * kPi * root * c * t);
    x[i] = env * s;
  }
  normalize_peak(x, p.peak);
  return x;
}

}  // namespace detail

// Deterministic per seed; same seed twice gives bit-identical tracks.
inline StemTrack synth_track(uint64_t seed, double duration_s,
                             const SynthParams& p = SynthParams{}) {
  if (!(duration_s > 0.0)) throw InvalidArgument("synth_track: duration must be positive");
  auto n = size_t(std::llround(duration_s * p.sample_rate));
  StemTrack t;
  t.id = "synth" + std::to_string(seed);
  t.sample_rate = p.sample_rate;

  uint64_t s = seed;
  uint64_t seeds[4];
  for (uint64_t& v : seeds) v = splitmix64(s);

  std::mt19937_64 rv(seeds[0]), rd(seeds[1]), rb(seeds[2]), ra(seeds[3]);
  t.stem(StemRole::voice) = AudioClip(detail::synth_voice(rv, n, p.sample_rate, p), p.sample_rate);
  t.stem(StemRole::drums) = AudioClip(detail::synth_drums(rd, n, p.sample_rate, p), p.sample_rate);
  t.stem(StemRole::bass) = AudioClip(detail::synth_bass(rb, n, p.sample_rate, p), p.sample_rate);
  t.stem(StemRole::accompaniment) =
      AudioClip(detail::synth_accompaniment(ra, n, p.sample_rate, p), p.sample_rate);
  return t;
}

}  // namespace voxsep
