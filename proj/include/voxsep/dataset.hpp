#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "voxsep/audio.hpp"
#include "voxsep/common.hpp"
#include "voxsep/wav.hpp"

namespace voxsep {

// Track directory layout: <track_id>/vocals.wav, drums.wav, bass.wav,
// other.wav. Stems shorter than the longest are zero-padded, never trimmed.
inline StemTrack load_track(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  StemTrack t;
  t.id = dir.filename().string();
  size_t max_len = 0;
  for (StemRole r : kAllStems) {
    fs::path f = dir / stem_filename(r);
    if (!fs::exists(f)) throw MissingStem(stem_name(r));
    AudioClip c = read_wav(f);
    if (t.sample_rate == 0) t.sample_rate = c.sample_rate;
    if (c.sample_rate != t.sample_rate)
      throw FormatError("track " + t.id + ": sample-rate mismatch in " + stem_filename(r));
    max_len = std::max(max_len, c.samples.size());
    t.stem(r) = std::move(c);
  }
  for (StemRole r : kAllStems) t.stem(r).samples.resize(max_len, 0.0);
  t.validate();
  return t;
}

inline void save_track(const std::filesystem::path& dir, const StemTrack& t,
                       WavFormat fmt = WavFormat::float32) {
  std::filesystem::create_directories(dir);
  for (StemRole r : kAllStems) write_wav(dir / stem_filename(r), t.stem(r), fmt);
}

inline std::vector<std::string> list_track_dirs(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw IoError("not a directory: " + root.string());
  std::vector<std::string> ids;
  for (const auto& e : fs::directory_iterator(root))
    if (e.is_directory() && fs::exists(e.path() / stem_filename(StemRole::voice)))
      ids.push_back(e.path().filename().string());
  std::sort(ids.begin(), ids.end());
  return ids;
}

struct DatasetSplit {
  std::vector<std::string> train;
  std::vector<std::string> valid;
  std::vector<std::string> test;
};

// Deterministic shuffle-then-cut partition. |valid| = round(f * n).
inline DatasetSplit split_dataset(std::vector<std::string> track_ids, double valid_fraction,
                                  uint64_t seed) {
  if (track_ids.empty()) throw InvalidArgument("split_dataset: empty track list");
  if (!(valid_fraction >= 0.0 && valid_fraction < 1.0))
    throw InvalidArgument("split_dataset: fraction must be in [0, 1)");
  std::sort(track_ids.begin(), track_ids.end());
  std::mt19937_64 rng(seed);
  std::shuffle(track_ids.begin(), track_ids.end(), rng);
  auto n_valid = size_t(std::llround(valid_fraction * double(track_ids.size())));
  DatasetSplit s;
  s.valid.assign(track_ids.begin(), track_ids.begin() + n_valid);
  s.train.assign(track_ids.begin() + n_valid, track_ids.end());
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.valid.begin(), s.valid.end());
  return s;
}

// Split manifest: one id per line under [train] / [valid] / [test] headers.
inline void write_split_manifest(const std::filesystem::path& path, const DatasetSplit& s) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  auto dump = [&f](const char* name, const std::vector<std::string>& ids) {
    f << "[" << name << "]\n";
    for (const auto& id : ids) f << id << "\n";
  };
  dump("train", s.train);
  dump("valid", s.valid);
  dump("test", s.test);
}

inline DatasetSplit read_split_manifest(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read " + path.string());
  DatasetSplit s;
  std::vector<std::string>* cur = nullptr;
  std::string line;
  while (std::getline(f, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (line == "[train]")
      cur = &s.train;
    else if (line == "[valid]")
      cur = &s.valid;
    else if (line == "[test]")
      cur = &s.test;
    else if (cur)
      cur->push_back(line);
    else
      throw FormatError("split manifest: id before section header");
  }
  return s;
}

}  // namespace voxsep
