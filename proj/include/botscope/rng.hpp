#pragma once

// botscope-rng v1: xoshiro256** seeded through splitmix64, with hand-written
// transforms so a seed yields the same stream on every standard library.
// (The std:: distributions are implementation-defined.) Any change to the
// algorithms below must bump the version string.

#include <cmath>
#include <set>
#include <cstdint>
#include <numbers>
#include <vector>

namespace botscope {

class Rng {
 public:
  static constexpr const char* kVersion = "botscope-rng v1 (xoshiro256**/splitmix64)";

  explicit Rng(std::uint64_t seed) {
    for (auto& s : state_) s = splitmix64(seed);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1).
  double uniform_open() {
    double u;
    do u = uniform();
    while (u == 0.0);
    return u;
  }

  /// Uniform integer in [0, n); n > 0. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Box-Muller; the second variate of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform_open(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  /// Lognormal parameterized by its own mean and standard deviation.
  double lognormal_mean_sd(double mean, double sd) {
    if (sd <= 0) return mean;
    double s2 = std::log1p((sd * sd) / (mean * mean));
    double mu = std::log(mean) - s2 / 2;
    return std::exp(normal(mu, std::sqrt(s2)));
  }

  /// Gamma(shape, 1) by Marsaglia-Tsang; shape < 1 via the U^(1/shape) boost.
  double gamma(double shape) {
    if (shape < 1.0) return gamma(shape + 1.0) * std::pow(uniform_open(), 1.0 / shape);
    const double d = shape - 1.0 / 3.0, c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0);
      v = v * v * v;
      double u = uniform_open();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  std::vector<double> dirichlet(const std::vector<double>& alpha) {
    std::vector<double> g(alpha.size());
    double sum = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) sum += g[i] = gamma(alpha[i]);
    for (auto& x : g) x /= sum;
    return g;
  }

  /// Index drawn proportionally to the cumulative weights (last = total).
  std::size_t pick_cumulative(const std::vector<double>& cumulative) {
    double u = uniform() * cumulative.back();
    std::size_t lo = 0, hi = cumulative.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (u < cumulative[mid]) hi = mid;
      else lo = mid + 1;
    }
    return lo;
  }

  /// k distinct values from [0, n), ascending (Floyd's algorithm).
  std::vector<std::uint64_t> sample_distinct(std::uint64_t n, std::uint64_t k) {
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = n - k; j < n; ++j) {
      std::uint64_t t = below(j + 1);
      if (!chosen.insert(t).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_[4];
  double spare_ = 0;
  bool has_spare_ = false;
};

}  // namespace botscope
