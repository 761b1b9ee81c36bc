#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "voxsep/resample.hpp"

using namespace voxsep;

TEST_CASE("resample to the same rate is the identity") {
  auto tone = oracle::sine(200.0, 0.25, 8192);
  AudioClip out = resample(tone, 8192);
  REQUIRE(out.samples == tone.samples);
}

TEST_CASE("one second of 44100 becomes 8192 samples at 8192") {
  AudioClip clip(std::vector<double>(44100, 0.0), 44100);
  AudioClip out = resample(clip, 8192);
  REQUIRE(out.sample_rate == 8192);
  REQUIRE(out.samples.size() == 8192);
}

TEST_CASE("100 Hz tone survives 44100 -> 8192 within 0.1 Hz and 0.5 dB") {
  auto tone = oracle::sine(100.0, 1.0, 44100, 0.5);
  AudioClip out = resample(tone, 8192);
  double f = oracle::dominant_freq_hz(out.samples, out.sample_rate, 50.0, 200.0);
  REQUIRE_THAT(f, Catch::Matchers::WithinAbs(100.0, 0.1));
  double amp_in = oracle::dft_mag_at(tone.samples, 44100, 100.0);
  double amp_out = oracle::dft_mag_at(out.samples, 8192, f);
  double db = 20.0 * std::log10(amp_out / amp_in);
  REQUIRE(std::abs(db) < 0.5);
}

TEST_CASE("tone near the passband edge keeps its frequency") {
  auto tone = oracle::sine(3000.0, 1.0, 44100, 0.5);
  AudioClip out = resample(tone, 8192);
  double f = oracle::dominant_freq_hz(out.samples, out.sample_rate, 2900.0, 3100.0);
  REQUIRE_THAT(f, Catch::Matchers::WithinAbs(3000.0, 0.1));
}

TEST_CASE("round-trip through a higher rate is below -40 dB error") {
  // band-limited signal: sum of tones well under the 8192 Nyquist, faded at
  // the edges so kernel truncation does not dominate
  const int rate = 8192;
  const double freqs[] = {180.0, 445.0, 997.0, 1570.0, 1990.0};
  size_t n = 8192;
  std::vector<double> x(n, 0.0);
  for (double f : freqs)
    for (size_t i = 0; i < n; ++i)
      x[i] += 0.2 * std::sin(2.0 * oracle::kPi * f * i / rate + f);
  for (size_t i = 0; i < n; ++i) {
    double w = 0.5 * (1.0 - std::cos(2.0 * oracle::kPi * i / double(n - 1)));
    x[i] *= w;
  }
  AudioClip clip(x, rate);

  for (int r2 : {44100, 12000}) {
    AudioClip up = resample(clip, r2);
    AudioClip back = resample(up, rate);
    REQUIRE(back.samples.size() == clip.samples.size());
    double err = oracle::rms_diff(back.samples, clip.samples);
    double sig = voxsep::rms(clip.samples);
    REQUIRE(20.0 * std::log10(err / sig) < -40.0);
  }
}

TEST_CASE("invalid target rate is rejected") {
  AudioClip clip(std::vector<double>(100, 0.0), 8192);
  REQUIRE_THROWS_AS(resample(clip, 0), InvalidArgument);
  REQUIRE_THROWS_AS(resample(clip, -5), InvalidArgument);
}

TEST_CASE("resample_ratio length formula") {
  std::vector<double> x(1000, 0.0);
  REQUIRE(resample_ratio(x, 0.5).size() == 500);
  REQUIRE(resample_ratio(x, 2.0).size() == 2000);
  REQUIRE(resample_ratio(x, 8192.0 / 44100.0).size() == 186);
}
