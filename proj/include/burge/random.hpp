#pragma once

#include <cstdint>
#include <limits>

#include "burge/array.hpp"

namespace burge {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// SplitMix64 stream whose starting state is a hash of (seed, stream). Sample
// i of a Monte Carlo run uses stream i, so results do not depend on how
// samples are spread over threads.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix64(mix64(seed + 0x632be59bd9b4e019ULL) ^ (stream * 0x9e3779b97f4a7c15ULL + 1))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform on the open interval (0, 1).
  double uniform() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

  // Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>((*this)() % span);
  }

  double normal();

 private:
  std::uint64_t state_;
};

// Gamma(shape, rate) by Marsaglia-Tsang; shape < 1 via the U^{1/shape} boost.
double sample_gamma(double shape, double rate, CounterRng& rng);
// 1/G with G ~ Gamma(shape alpha, rate beta): density proportional to y^{-alpha-1} e^{-beta/y}.
double sample_inv_gamma(double alpha, double beta, CounterRng& rng);

// Numerator and denominator uniform on {1..20}.
Rational random_rational(CounterRng& rng);
ShapedArray<Rational> random_rational_array(const Shape& shape, CounterRng& rng);
ShapedArray<Tropical> random_integer_tropical_array(const Shape& shape, CounterRng& rng, int lo = -10, int hi = 10);
// log-uniform on [e^-1, e]
ShapedArray<double> random_loguniform_array(const Shape& shape, CounterRng& rng);

}  // namespace burge
