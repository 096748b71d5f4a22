#pragma once

// Shared helpers for the test binaries: scratch directories and seeded
// generators for random trigonometric polynomials.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "skorokhod/fourier.hpp"

namespace testsupport {

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    auto base = std::filesystem::temp_directory_path();
    std::random_device rd;
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto candidate = base / ("skorokhod_test_" + std::to_string(rd()));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("could not create scratch directory");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Zero-mean trig polynomial with coefficients uniform in [-1, 1].
inline skorokhod::FourierSeries random_series(std::mt19937_64& rng, std::size_t degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  skorokhod::FourierSeries s;
  s.a.resize(degree);
  s.b.resize(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    s.a[k] = u(rng);
    s.b[k] = u(rng);
  }
  return s;
}

}  // namespace testsupport
