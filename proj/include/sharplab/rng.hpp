#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

namespace sharplab {

/// Seed plus generator-family tag carried in campaign descriptors so reports
/// stay reproducible across rebuilds.
struct RngConfig {
  std::uint64_t seed = 0;
  std::string family = "splitmix64";
};

namespace detail {
inline std::uint64_t splitmix64_step(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// splitmix64 stream with counter-based child derivation: fork(k) depends only
/// on the constructing seed, never on how many values were drawn, so serial
/// and parallel trial execution see identical streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed0_(seed), state_(seed) {}

  std::uint64_t next_u64() { return detail::splitmix64_step(state_); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1ull;
    return lo + static_cast<int>(next_u64() % span);
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  std::complex<double> normal_complex() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  Rng fork(std::uint64_t stream) const {
    std::uint64_t s = seed0_ ^ (0xD1B54A32D192ED03ull * (stream + 1ull));
    detail::splitmix64_step(s);
    return Rng(s);
  }

  std::uint64_t seed() const { return seed0_; }

 private:
  std::uint64_t seed0_;
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sharplab
