#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <vector>

#include "voxsep/audio.hpp"
#include "voxsep/common.hpp"
#include "voxsep/fft.hpp"

namespace voxsep {

// Complex STFT plane, row-major [frame][bin], num_bins = window/2 + 1.
struct Spectrogram {
  size_t num_frames = 0;
  size_t num_bins = 0;
  size_t window = 0;
  size_t hop = 0;
  int sample_rate = 0;
  std::vector<std::complex<double>> bins;

  std::complex<double>& at(size_t t, size_t k) { return bins[t * num_bins + k]; }
  const std::complex<double>& at(size_t t, size_t k) const { return bins[t * num_bins + k]; }
  double magnitude(size_t t, size_t k) const { return std::abs(at(t, k)); }
  // principal value in (-pi, pi]
  double phase(size_t t, size_t k) const {
    double p = std::arg(at(t, k));
    if (p <= -kPi) p += 2.0 * kPi;
    return p;
  }
};

// Dense real matrix [frames x bins], row-major. Holds magnitude planes.
struct MagMatrix {
  size_t frames = 0;
  size_t bins = 0;
  std::vector<double> v;

  MagMatrix() = default;
  MagMatrix(size_t f, size_t b) : frames(f), bins(b), v(f * b, 0.0) {}
  double& at(size_t t, size_t k) { return v[t * bins + k]; }
  double at(size_t t, size_t k) const { return v[t * bins + k]; }
};

// Periodic Hann, w[n] = 0.5 (1 - cos(2 pi n / N)).
inline std::vector<double> hann_window(size_t n) {
  std::vector<double> w(n);
  for (size_t i = 0; i < n; ++i) w[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * double(i) / double(n)));
  return w;
}

namespace detail {

// Squared-window overlap coverage over one hop period; gaps mean the
// window/hop pair cannot be inverted by weighted overlap-add.
inline bool cola_invertible(const std::vector<double>& w, size_t hop) {
  if (hop == 0 || hop > w.size()) return false;
  double mx = 0.0, mn = 1e300;
  for (size_t n = 0; n < hop; ++n) {
    double acc = 0.0;
    for (size_t k = n; k < w.size(); k += hop) acc += w[k] * w[k];
    mx = std::max(mx, acc);
    mn = std::min(mn, acc);
  }
  return mn > 1e-8 * mx;
}

}  // namespace detail

// Hann-windowed, center-padded analysis.
// num_frames = 1 + floor((len + window - window) / hop) on the padded signal.
inline Spectrogram stft(const AudioClip& clip, size_t window, size_t hop) {
  if (clip.samples.empty()) throw InvalidArgument("stft: empty clip");
  if (hop == 0 || window < hop) throw InvalidArgument("stft: need window >= hop > 0");
  if (!is_pow2(window)) throw InvalidArgument("stft: window must be a power of two");

  const size_t pad = window / 2;
  std::vector<double> x(clip.samples.size() + 2 * pad, 0.0);
  std::copy(clip.samples.begin(), clip.samples.end(), x.begin() + ptrdiff_t(pad));

  const std::vector<double> w = hann_window(window);
  Spectrogram s;
  s.window = window;
  s.hop = hop;
  s.sample_rate = clip.sample_rate;
  s.num_bins = window / 2 + 1;
  s.num_frames = 1 + (x.size() - window) / hop;
  s.bins.resize(s.num_frames * s.num_bins);

  std::vector<double> frame(window);
  for (size_t t = 0; t < s.num_frames; ++t) {
    const double* src = x.data() + t * hop;
    for (size_t n = 0; n < window; ++n) frame[n] = src[n] * w[n];
    auto spec = rfft(frame.data(), window, window);
    std::copy(spec.begin(), spec.end(), s.bins.begin() + ptrdiff_t(t * s.num_bins));
  }
  return s;
}

// Weighted overlap-add synthesis with window-square normalization, then the
// center padding is stripped.
inline AudioClip istft(const Spectrogram& s) {
  if (s.num_frames == 0) throw InvalidArgument("istft: empty spectrogram");
  const std::vector<double> w = hann_window(s.window);
  if (!detail::cola_invertible(w, s.hop))
    throw ConfigError("istft: window/hop pair leaves coverage gaps");

  const size_t padded_len = (s.num_frames - 1) * s.hop + s.window;
  std::vector<double> acc(padded_len, 0.0), wsum(padded_len, 0.0);
  std::vector<std::complex<double>> row(s.num_bins);
  for (size_t t = 0; t < s.num_frames; ++t) {
    std::copy(s.bins.begin() + ptrdiff_t(t * s.num_bins),
              s.bins.begin() + ptrdiff_t((t + 1) * s.num_bins), row.begin());
    std::vector<double> frame = irfft(row.data(), s.window);
    double* dst = acc.data() + t * s.hop;
    double* wd = wsum.data() + t * s.hop;
    for (size_t n = 0; n < s.window; ++n) {
      dst[n] += frame[n] * w[n];
      wd[n] += w[n] * w[n];
    }
  }
  for (size_t n = 0; n < padded_len; ++n)
    if (wsum[n] > 1e-12) acc[n] /= wsum[n];

  const size_t pad = s.window / 2;
  AudioClip out;
  out.sample_rate = s.sample_rate;
  if (padded_len > 2 * pad)
    out.samples.assign(acc.begin() + ptrdiff_t(pad), acc.end() - ptrdiff_t(pad));
  return out;
}

inline MagMatrix magnitude_plane(const Spectrogram& s) {
  MagMatrix m(s.num_frames, s.num_bins);
  for (size_t t = 0; t < s.num_frames; ++t)
    for (size_t k = 0; k < s.num_bins; ++k) m.at(t, k) = s.magnitude(t, k);
  return m;
}

// mag * e^{i phase(mixture)} -> time domain. mag must match the mixture's
// full frame/bin dims (Nyquist bin restored).
inline AudioClip reconstruct_with_mixture_phase(const MagMatrix& mag, const Spectrogram& mixture) {
  if (mag.frames != mixture.num_frames || mag.bins != mixture.num_bins)
    throw ShapeError("reconstruct: magnitude dims do not match mixture spectrogram");
  Spectrogram s = mixture;
  for (size_t t = 0; t < s.num_frames; ++t)
    for (size_t k = 0; k < s.num_bins; ++k) {
      std::complex<double> z = mixture.at(t, k);
      double a = std::abs(z);
      s.at(t, k) = (a > 0.0) ? z * (mag.at(t, k) / a)
                             : std::complex<double>(mag.at(t, k), 0.0);
    }
  return istft(s);
}

// ---- fixed-size patch extraction -----------------------------------------

constexpr size_t kPatchFrames = 128;

// Model-facing views keep bins 0..window/2-1: the Nyquist bin is dropped so
// the bin axis halves cleanly across stride-2 layers, and is restored as
// zeros before reconstruction.
inline size_t model_bins(const Spectrogram& s) { return s.num_bins - 1; }

struct PatchSet {
  std::vector<MagMatrix> patches;       // each [patch_frames x model_bins]
  std::vector<size_t> frame_offsets;    // frame_offsets[i] = patch_frames * i
  size_t tail_frames = 0;               // frames not covered by a full patch
};

inline PatchSet extract_patches(const Spectrogram& s, size_t patch_frames = kPatchFrames) {
  if (s.num_frames == 0) throw InvalidArgument("extract_patches: empty spectrogram");
  const size_t nb = model_bins(s);
  PatchSet ps;
  const size_t full = s.num_frames / patch_frames;
  ps.tail_frames = s.num_frames % patch_frames;
  for (size_t i = 0; i < full; ++i) {
    MagMatrix m(patch_frames, nb);
    for (size_t t = 0; t < patch_frames; ++t)
      for (size_t k = 0; k < nb; ++k) m.at(t, k) = s.magnitude(i * patch_frames + t, k);
    ps.patches.push_back(std::move(m));
    ps.frame_offsets.push_back(i * patch_frames);
  }
  return ps;
}

// Temporal concatenation of consecutive patch outputs, trimmed to
// original_frames.
inline MagMatrix concat_patches(const std::vector<MagMatrix>& patches, size_t original_frames) {
  if (patches.empty()) throw InvalidArgument("concat_patches: no patches");
  const size_t nb = patches[0].bins;
  size_t total = 0;
  for (const auto& p : patches) {
    if (p.bins != nb) throw ShapeError("concat_patches: inconsistent bin counts");
    total += p.frames;
  }
  if (total < original_frames) throw ShapeError("concat_patches: fewer frames than requested");
  MagMatrix out(original_frames, nb);
  size_t t_out = 0;
  for (const auto& p : patches) {
    for (size_t t = 0; t < p.frames && t_out < original_frames; ++t, ++t_out)
      for (size_t k = 0; k < nb; ++k) out.at(t_out, k) = p.at(t, k);
  }
  return out;
}

// Restore the dropped Nyquist bin as zeros: [frames x nb] -> [frames x nb+1].
inline MagMatrix restore_nyquist(const MagMatrix& m) {
  MagMatrix out(m.frames, m.bins + 1);
  for (size_t t = 0; t < m.frames; ++t)
    for (size_t k = 0; k < m.bins; ++k) out.at(t, k) = m.at(t, k);
  return out;
}

// ---- debug dump ------------------------------------------------------------
// Little-endian layout: magic "VXSG", u32 frames, bins, window, hop, rate,
// then row-major float-32 interleaved (re, im) pairs.

inline void dump_spectrogram(const std::filesystem::path& path, const Spectrogram& s) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  auto put_u32 = [&f](uint32_t v) {
    unsigned char b[4] = {(unsigned char)(v & 0xff), (unsigned char)(v >> 8 & 0xff),
                          (unsigned char)(v >> 16 & 0xff), (unsigned char)(v >> 24 & 0xff)};
    f.write(reinterpret_cast<char*>(b), 4);
  };
  f.write("VXSG", 4);
  put_u32(uint32_t(s.num_frames));
  put_u32(uint32_t(s.num_bins));
  put_u32(uint32_t(s.window));
  put_u32(uint32_t(s.hop));
  put_u32(uint32_t(s.sample_rate));
  for (const auto& z : s.bins) {
    float re = float(z.real()), im = float(z.imag());
    uint32_t u;
    static_assert(sizeof(float) == 4);
    std::memcpy(&u, &re, 4);
    put_u32(u);
    std::memcpy(&u, &im, 4);
    put_u32(u);
  }
}

inline Spectrogram load_spectrogram(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path.string());
  char magic[4];
  f.read(magic, 4);
  if (!f || std::memcmp(magic, "VXSG", 4) != 0) throw FormatError("bad spectrogram file");
  auto get_u32 = [&f]() {
    unsigned char b[4];
    f.read(reinterpret_cast<char*>(b), 4);
    return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 | uint32_t(b[3]) << 24;
  };
  Spectrogram s;
  s.num_frames = get_u32();
  s.num_bins = get_u32();
  s.window = get_u32();
  s.hop = get_u32();
  s.sample_rate = int(get_u32());
  s.bins.resize(s.num_frames * s.num_bins);
  for (auto& z : s.bins) {
    uint32_t ur = get_u32(), ui = get_u32();
    float re, im;
    std::memcpy(&re, &ur, 4);
    std::memcpy(&im, &ui, 4);
    z = {double(re), double(im)};
  }
  if (!f) throw FormatError("truncated spectrogram file");
  return s;
}

}  // namespace voxsep
