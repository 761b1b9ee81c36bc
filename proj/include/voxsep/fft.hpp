#pragma once

#include <complex>
#include <unordered_map>
#include <vector>

#include "voxsep/common.hpp"

namespace voxsep {

namespace detail {

// Twiddle table cache is thread_local: no locking, and concurrent use on
// distinct threads stays deterministic.
inline const std::vector<std::complex<double>>& twiddles(size_t n) {
  thread_local std::unordered_map<size_t, std::vector<std::complex<double>>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::complex<double>> w(n / 2);
  for (size_t k = 0; k < n / 2; ++k) {
    double ang = -2.0 * kPi * double(k) / double(n);
    w[k] = {std::cos(ang), std::sin(ang)};
  }
  return cache.emplace(n, std::move(w)).first->second;
}

}  // namespace detail

inline bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place iterative radix-2 FFT. inverse=true applies conjugate transform
// and 1/N scaling.
inline void fft_pow2(std::complex<double>* a, size_t n, bool inverse) {
  if (!is_pow2(n)) throw InvalidArgument("fft_pow2: size must be a power of two");
  // bit-reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto& w = detail::twiddles(n);
  for (size_t len = 2; len <= n; len <<= 1) {
    size_t step = n / len;
    for (size_t i = 0; i < n; i += len) {
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> tw = w[k * step];
        if (inverse) tw = std::conj(tw);
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * tw;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    double s = 1.0 / double(n);
    for (size_t i = 0; i < n; ++i) a[i] *= s;
  }
}

inline void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  fft_pow2(a.data(), a.size(), inverse);
}

// Real input of length n (zero-padded to fft_size), one-sided output of
// fft_size/2 + 1 bins.
inline std::vector<std::complex<double>> rfft(const double* x, size_t n, size_t fft_size) {
  if (n > fft_size) throw InvalidArgument("rfft: input longer than fft size");
  std::vector<std::complex<double>> a(fft_size);
  for (size_t i = 0; i < n; ++i) a[i] = x[i];
  fft_pow2(a, false);
  a.resize(fft_size / 2 + 1);
  return a;
}

// One-sided bins back to a real signal of length fft_size.
inline std::vector<double> irfft(const std::complex<double>* bins, size_t fft_size) {
  std::vector<std::complex<double>> a(fft_size);
  size_t half = fft_size / 2;
  a[0] = bins[0];
  a[half] = bins[half];
  for (size_t k = 1; k < half; ++k) {
    a[k] = bins[k];
    a[fft_size - k] = std::conj(bins[k]);
  }
  fft_pow2(a, true);
  std::vector<double> out(fft_size);
  for (size_t i = 0; i < fft_size; ++i) out[i] = a[i].real();
  return out;
}

}  // namespace voxsep
