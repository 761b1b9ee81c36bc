#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "voxsep/common.hpp"

namespace voxsep {

// Mono sample buffer plus its sample rate; the waveform currency of the
// whole toolkit. Samples are dimensionless amplitudes, nominally in [-1, 1]
// but never clipped (float headroom is deliberate).
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 0;

  AudioClip() = default;
  AudioClip(std::vector<double> s, int rate) : samples(std::move(s)), sample_rate(rate) {}

  size_t size() const { return samples.size(); }
  double duration_seconds() const {
    return double(samples.size()) / double(sample_rate);
  }
  bool is_finite() const {
    for (double v : samples)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

enum class StemRole { voice = 0, drums = 1, bass = 2, accompaniment = 3 };

constexpr std::array<StemRole, 4> kAllStems = {
    StemRole::voice, StemRole::drums, StemRole::bass, StemRole::accompaniment};

inline const char* stem_name(StemRole r) {
  switch (r) {
    case StemRole::voice: return "voice";
    case StemRole::drums: return "drums";
    case StemRole::bass: return "bass";
    case StemRole::accompaniment: return "accompaniment";
  }
  return "?";
}

// On-disk file name per role (track directory layout).
inline const char* stem_filename(StemRole r) {
  switch (r) {
    case StemRole::voice: return "vocals.wav";
    case StemRole::drums: return "drums.wav";
    case StemRole::bass: return "bass.wav";
    case StemRole::accompaniment: return "other.wav";
  }
  return "?";
}

// A four-stem aligned track. All stems share length and sample rate.
struct StemTrack {
  std::string id;
  std::array<AudioClip, 4> stems;
  int sample_rate = 0;

  AudioClip& stem(StemRole r) { return stems[size_t(r)]; }
  const AudioClip& stem(StemRole r) const { return stems[size_t(r)]; }

  size_t length() const { return stems[0].samples.size(); }

  void validate() const {
    if (sample_rate <= 0) throw FormatError("track " + id + ": sample rate must be positive");
    size_t len = stems[0].samples.size();
    for (StemRole r : kAllStems) {
      const AudioClip& c = stem(r);
      if (c.sample_rate != sample_rate)
        throw FormatError("track " + id + ": sample-rate mismatch in stem " + stem_name(r));
      if (c.samples.size() != len)
        throw FormatError("track " + id + ": stem length mismatch in " + stem_name(r));
    }
  }
};

// Exact sum of stems; no normalization or clipping (mixture - voice must
// equal the accompaniment sum bit-for-bit in double arithmetic).
inline AudioClip mix(const StemTrack& track) {
  track.validate();
  AudioClip out;
  out.sample_rate = track.sample_rate;
  out.samples.assign(track.length(), 0.0);
  for (StemRole r : kAllStems) {
    const auto& s = track.stem(r).samples;
    for (size_t i = 0; i < s.size(); ++i) out.samples[i] += s[i];
  }
  return out;
}

}  // namespace voxsep
