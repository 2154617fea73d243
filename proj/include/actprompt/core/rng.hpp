#pragma once

#include <cstdint>
#include <random>

#include "actprompt/core/tensor.hpp"

namespace actprompt {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Deterministic RNG with explicit stream derivation so independent model
// parts (backbone, text tower, couplers, sampler) stay reproducible no
// matter how many draws each consumes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(splitmix64(seed ^ splitmix64(stream_id)));
  }

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  // uniform integer in [0, n)
  int uniform_int(int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(engine_);
  }
  double normal(double sigma) {
    return std::normal_distribution<double>(0.0, sigma)(engine_);
  }
  // normal(0, sigma) resampled until |x| <= 2*sigma
  double truncated_normal(double sigma) {
    for (;;) {
      const double x = normal(sigma);
      if (x >= -2.0 * sigma && x <= 2.0 * sigma) return x;
    }
  }

  void fill_truncated_normal(Tensor& t, double sigma) {
    for (int r = 0; r < t.rows(); ++r) {
      for (int c = 0; c < t.cols(); ++c) t(r, c) = truncated_normal(sigma);
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_int(static_cast<int>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace actprompt
