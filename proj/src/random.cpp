#include "burge/random.hpp"

#include <cmath>

namespace burge {

double CounterRng::normal() {
  // Marsaglia polar method; the second variate is discarded so that the
  // stream position depends only on the number of calls.
  for (;;) {
    double u = 2.0 * uniform() - 1.0;
    double v = 2.0 * uniform() - 1.0;
    double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double sample_gamma(double shape, double rate, CounterRng& rng) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw Error(Errc::nonpositive_parameter, "gamma parameters must be positive");
  if (shape < 1.0) {
    double g = sample_gamma(shape + 1.0, 1.0, rng);
    return g * std::pow(rng.uniform(), 1.0 / shape) / rate;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
  }
}

double sample_inv_gamma(double alpha, double beta, CounterRng& rng) {
  return 1.0 / sample_gamma(alpha, beta, rng);
}

Rational random_rational(CounterRng& rng) {
  Rational q(static_cast<long>(rng.uniform_int(1, 20)), static_cast<unsigned long>(rng.uniform_int(1, 20)));
  q.canonicalize();
  return q;
}

ShapedArray<Rational> random_rational_array(const Shape& shape, CounterRng& rng) {
  ShapedArray<Rational> w(shape, Rational(1));
  for (const Box& b : shape.boxes()) w.at(b) = random_rational(rng);
  return w;
}

ShapedArray<Tropical> random_integer_tropical_array(const Shape& shape, CounterRng& rng, int lo, int hi) {
  ShapedArray<Tropical> w(shape, Tropical(0.0));
  for (const Box& b : shape.boxes()) w.at(b) = Tropical(static_cast<double>(rng.uniform_int(lo, hi)));
  return w;
}

ShapedArray<double> random_loguniform_array(const Shape& shape, CounterRng& rng) {
  ShapedArray<double> w(shape, 1.0);
  for (const Box& b : shape.boxes()) w.at(b) = std::exp(2.0 * rng.uniform() - 1.0);
  return w;
}

}  // namespace burge
