#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace voxsep {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// config errors 2, data errors 3, numeric failures 4.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};
class FormatError : public Error {
public:
  using Error::Error;
};
class MissingStem : public Error {
public:
  explicit MissingStem(const std::string& role)
      : Error("missing stem: " + role), role_(role) {}
  const std::string& role() const { return role_; }

private:
  std::string role_;
};
class ShapeError : public Error {
public:
  using Error::Error;
};
class ConfigError : public Error {
public:
  using Error::Error;
};
class StatError : public Error {
public:
  using Error::Error;
};
class StateError : public Error {
public:
  using Error::Error;
};
class UndefinedMetric : public Error {
public:
  using Error::Error;
};
class EmptyEvaluation : public Error {
public:
  using Error::Error;
};
class EnvelopeUndefined : public Error {
public:
  using Error::Error;
};
class IoError : public Error {
public:
  using Error::Error;
};

constexpr double kPi = 3.14159265358979323846;

// Principal phase value in (-pi, pi].
inline double princarg(double phi) {
  phi = std::fmod(phi + kPi, 2.0 * kPi);
  if (phi <= 0.0) phi += 2.0 * kPi;
  return phi - kPi;
}

inline double amplitude_to_db(double a) {
  return 20.0 * std::log10(std::max(a, 1e-300));
}

inline double power_to_db(double p) {
  return 10.0 * std::log10(std::max(p, 1e-300));
}

inline double cents_to_ratio(double cents) {
  return std::pow(2.0, cents / 1200.0);
}

template <typename T>
double rms(const std::vector<T>& x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (T v : x) acc += double(v) * double(v);
  return std::sqrt(acc / double(x.size()));
}

template <typename T>
double peak_abs(const std::vector<T>& x) {
  double m = 0.0;
  for (T v : x) m = std::max(m, std::abs(double(v)));
  return m;
}

// Order-statistic median; mean of the two central values for even n.
inline double median(std::vector<double> v) {
  if (v.empty()) throw InvalidArgument("median of empty set");
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Median absolute deviation from the median.
inline double median_abs_deviation(const std::vector<double>& v) {
  double m = median(v);
  std::vector<double> d(v.size());
  for (size_t i = 0; i < v.size(); ++i) d[i] = std::abs(v[i] - m);
  return median(d);
}

// FNV-1a 64-bit, used for content checksums in manifests.
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

// SplitMix64, used to derive independent deterministic seeds.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
  uint64_t s = a;
  (void)splitmix64(s);
  s ^= b + 0x9e3779b97f4a7c15ull + (s << 6) + (s >> 2);
  return splitmix64(s);
}

}  // namespace voxsep
