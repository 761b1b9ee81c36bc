#pragma once

// Shared test oracles. Everything here is deliberately independent of the
// library's FFT/analysis path: frequencies are measured by direct DFT
// evaluation, envelopes by harmonic parabolic fits.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "voxsep/audio.hpp"

namespace oracle {

constexpr double kPi = 3.14159265358979323846;

inline voxsep::AudioClip sine(double freq, double seconds, int rate, double amp = 0.5,
                              double phase = 0.0) {
  size_t n = size_t(std::llround(seconds * rate));
  std::vector<double> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = amp * std::sin(2.0 * kPi * freq * i / rate + phase);
  return voxsep::AudioClip(std::move(x), rate);
}

inline voxsep::AudioClip sawtooth(double freq, double seconds, int rate, double amp = 0.4) {
  size_t n = size_t(std::llround(seconds * rate));
  std::vector<double> x(n);
  for (size_t i = 0; i < n; ++i) {
    double t = freq * double(i) / rate;
    x[i] = amp * (2.0 * (t - std::floor(t + 0.5)));
  }
  return voxsep::AudioClip(std::move(x), rate);
}

inline voxsep::AudioClip white_noise(uint64_t seed, double seconds, int rate, double amp = 0.3) {
  size_t n = size_t(std::llround(seconds * rate));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = amp * g(rng);
  return voxsep::AudioClip(std::move(x), rate);
}

// Hann-weighted DFT magnitude at an arbitrary (non-bin) frequency.
inline double dft_mag_at(const std::vector<double>& x, int rate, double freq) {
  const size_t n = x.size();
  std::complex<double> acc{0.0, 0.0};
  double wsum = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double w = 0.5 * (1.0 - std::cos(2.0 * kPi * double(i) / double(n)));
    double ang = -2.0 * kPi * freq * double(i) / rate;
    acc += w * x[i] * std::complex<double>(std::cos(ang), std::sin(ang));
    wsum += w;
  }
  return 2.0 * std::abs(acc) / wsum;
}

// Dominant frequency in [fmin, fmax]: coarse grid scan, then golden-section
// refinement of the windowed-DFT magnitude. No FFT involved.
inline double dominant_freq_hz(const std::vector<double>& x, int rate, double fmin, double fmax) {
  const double grid_step = std::max(0.25, double(rate) / double(x.size()) / 4.0);
  double best_f = fmin, best_m = -1.0;
  for (double f = fmin; f <= fmax; f += grid_step) {
    double m = dft_mag_at(x, rate, f);
    if (m > best_m) {
      best_m = m;
      best_f = f;
    }
  }
  double a = best_f - grid_step, b = best_f + grid_step;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = dft_mag_at(x, rate, c), fd = dft_mag_at(x, rate, d);
  for (int it = 0; it < 60 && (b - a) > 1e-4; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = dft_mag_at(x, rate, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = dft_mag_at(x, rate, d);
    }
  }
  return 0.5 * (a + b);
}

inline double rms_diff(const std::vector<double>& a, const std::vector<double>& b) {
  size_t n = std::min(a.size(), b.size());
  if (n == 0) return 0.0;
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc / double(n));
}

}  // namespace oracle
