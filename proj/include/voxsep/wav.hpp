#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "voxsep/audio.hpp"
#include "voxsep/common.hpp"

// Minimal RIFF/WAVE reader and writer. Mono only, PCM-16 or IEEE float-32;
// everything else is rejected. Written files carry no timestamps, so equal
// content means equal bytes.

namespace voxsep {

enum class WavFormat { pcm16, float32 };

namespace detail {

inline void put_u32(std::string& s, uint32_t v) {
  char b[4] = {char(v & 0xff), char((v >> 8) & 0xff), char((v >> 16) & 0xff), char((v >> 24) & 0xff)};
  s.append(b, 4);
}
inline void put_u16(std::string& s, uint16_t v) {
  char b[2] = {char(v & 0xff), char((v >> 8) & 0xff)};
  s.append(b, 2);
}
inline uint32_t get_u32(const unsigned char* p) {
  return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 | uint32_t(p[3]) << 24;
}
inline uint16_t get_u16(const unsigned char* p) {
  return uint16_t(p[0]) | uint16_t(p[1]) << 8;
}

}  // namespace detail

inline void write_wav(const std::filesystem::path& path, const AudioClip& clip,
                      WavFormat fmt = WavFormat::float32) {
  if (clip.sample_rate <= 0) throw InvalidArgument("write_wav: sample rate must be positive");
  using detail::put_u16;
  using detail::put_u32;

  const uint16_t channels = 1;
  const uint16_t bits = (fmt == WavFormat::pcm16) ? 16 : 32;
  const uint16_t block_align = channels * bits / 8;
  const uint32_t byte_rate = uint32_t(clip.sample_rate) * block_align;
  const uint32_t data_size = uint32_t(clip.samples.size()) * block_align;

  std::string out;
  out.reserve(64 + data_size);
  out += "RIFF";
  const bool is_float = fmt == WavFormat::float32;
  const uint32_t fact_size = is_float ? 12u : 0u;
  put_u32(out, 4 + 24 + fact_size + 8 + data_size);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, is_float ? 3 : 1);
  put_u16(out, channels);
  put_u32(out, uint32_t(clip.sample_rate));
  put_u32(out, byte_rate);
  put_u16(out, block_align);
  put_u16(out, bits);
  if (is_float) {
    out += "fact";
    put_u32(out, 4);
    put_u32(out, uint32_t(clip.samples.size()));
  }
  out += "data";
  put_u32(out, data_size);

  if (fmt == WavFormat::pcm16) {
    for (double v : clip.samples) {
      double c = std::clamp(v, -1.0, 1.0);
      auto q = int16_t(std::lrint(c * 32767.0));
      put_u16(out, uint16_t(q));
    }
  } else {
    for (double v : clip.samples) {
      float f = float(v);
      uint32_t u;
      std::memcpy(&u, &f, 4);
      put_u32(out, u);
    }
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  f.write(out.data(), std::streamsize(out.size()));
  if (!f) throw IoError("short write: " + path.string());
}

inline AudioClip read_wav(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path.string());
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(f)),
                                 std::istreambuf_iterator<char>());
  if (buf.size() < 44 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    throw FormatError("not a RIFF/WAVE file: " + path.string());

  using detail::get_u16;
  using detail::get_u32;

  uint16_t audio_format = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  size_t data_off = 0, data_len = 0;
  bool have_fmt = false;

  size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const unsigned char* hdr = buf.data() + pos;
    uint32_t chunk_size = get_u32(hdr + 4);
    size_t body = pos + 8;
    if (std::memcmp(hdr, "fmt ", 4) == 0 && chunk_size >= 16 && body + 16 <= buf.size()) {
      audio_format = get_u16(buf.data() + body);
      channels = get_u16(buf.data() + body + 2);
      sample_rate = get_u32(buf.data() + body + 4);
      bits = get_u16(buf.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data_off = body;
      data_len = std::min<size_t>(chunk_size, buf.size() - body);
    }
    pos = body + chunk_size + (chunk_size & 1);
  }

  if (!have_fmt || data_off == 0) throw FormatError("missing fmt/data chunk: " + path.string());
  if (channels != 1) throw FormatError("only mono supported: " + path.string());
  if (sample_rate == 0) throw FormatError("zero sample rate: " + path.string());

  AudioClip clip;
  clip.sample_rate = int(sample_rate);
  const unsigned char* d = buf.data() + data_off;

  if (audio_format == 1 && bits == 16) {
    size_t n = data_len / 2;
    clip.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      auto q = int16_t(get_u16(d + 2 * i));
      clip.samples[i] = double(q) / 32767.0;
    }
  } else if (audio_format == 3 && bits == 32) {
    size_t n = data_len / 4;
    clip.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      uint32_t u = get_u32(d + 4 * i);
      float fv;
      std::memcpy(&fv, &u, 4);
      clip.samples[i] = double(fv);
    }
  } else {
    throw FormatError("unsupported encoding (want PCM-16 or float-32): " + path.string());
  }
  return clip;
}

}  // namespace voxsep
