#include "burge/polymer.hpp"

#include <algorithm>
#include <cmath>

#include "burge/parallel.hpp"
#include "burge/paths.hpp"

namespace burge {

void EnvSpec::validate() const {
  if (n < 1) throw Error(Errc::inconsistent_n, "n must be positive");
  if (static_cast<int>(alpha.size()) != n)
    throw Error(Errc::inconsistent_n, "alpha has " + std::to_string(alpha.size()) + " entries, n = " + std::to_string(n));
  for (double a : alpha)
    if (!(a > 0)) throw Error(Errc::nonpositive_parameter, "alpha entries must be positive");
  if (!(beta > 0)) throw Error(Errc::nonpositive_parameter, "beta must be positive");
}

MCResult mc_mean(const std::vector<double>& values) {
  if (values.empty()) throw Error(Errc::empty_sample, "no samples");
  MCResult res;
  res.samples = values.size();
  const double n = static_cast<double>(values.size());
  res.estimate = compensated_sum(values.begin(), values.end()) / n;
  if (values.size() > 1) {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - res.estimate) * (values[i] - res.estimate);
    const double var = compensated_sum(sq.begin(), sq.end()) / (n - 1);
    res.std_error = std::sqrt(var / n);
  }
  return res;
}

ShapedArray<double> sample_symmetric_env(const EnvSpec& spec, CounterRng& rng) {
  spec.validate();
  const int n = spec.n;
  ShapedArray<double> w(Shape::rectangle(n, n), 1.0);
  for (int i = 1; i <= n; ++i) {
    w.at(i, i) = sample_inv_gamma(spec.alpha[i - 1], spec.beta, rng);
    for (int j = i + 1; j <= n; ++j) {
      const double x = sample_inv_gamma(spec.alpha[i - 1] + spec.alpha[j - 1], 1.0, rng);
      w.at(i, j) = x;
      w.at(j, i) = x;
    }
  }
  return w;
}

ShapedArray<double> sample_replica_env(const EnvSpec& spec, CounterRng& rng) {
  const ShapedArray<double> reversed = reverse_cols(sample_symmetric_env(spec, rng));
  const int n = spec.n;
  ShapedArray<double> w(Shape::staircase(n), 1.0);
  for (const Box& b : w.shape().boxes()) {
    const double x = reversed.at(b);
    w.at(b) = b.row + b.col == n + 1 ? std::sqrt(x) : x;
  }
  return w;
}

static int staircase_size(const ShapedArray<double>& weights) {
  const int n = weights.rows();
  if (weights.shape() != Shape::staircase(n))
    throw Error(Errc::inconsistent_n, "weights must live on {i + j <= n + 1}");
  return n;
}

ShapedArray<double> unfold_persymmetric(const ShapedArray<double>& weights) {
  const int n = staircase_size(weights);
  ShapedArray<double> p(Shape::rectangle(n, n), 1.0);
  for (const Box& b : p.shape().boxes()) {
    const int s = b.row + b.col;
    if (s < n + 1) p.at(b) = weights.at(b);
    else if (s == n + 1) p.at(b) = weights.at(b) * weights.at(b);
    else p.at(b) = weights.at(n - b.col + 1, n - b.row + 1);
  }
  return p;
}

double replica_Z(const ShapedArray<double>& weights, ReplicaRoute via) {
  const int n = staircase_size(weights);
  for (double x : weights.data())
    if (!(x > 0)) throw Error(Errc::nonpositive_entry, "weights must be positive");
  if (via == ReplicaRoute::oracle) {
    double total = 0.0;
    for (int a = 1; a <= n; ++a) {
      const double z = path_sum_between(weights, Box{1, 1}, Box{a, n + 1 - a});
      total += z * z;
    }
    return total;
  }
  // Dual paths of the row-reversed persymmetric matrix are the
  // point-to-point paths of the persymmetric one.
  const ShapedArray<double> sym = reverse_rows(unfold_persymmetric(weights));
  return gburge(sym).at(n, n);
}

std::vector<MCResult> laplace_mc(const EnvSpec& spec, const std::vector<double>& r_values, std::size_t samples,
                                 std::uint64_t seed, int threads) {
  spec.validate();
  for (double r : r_values)
    if (!(r >= 0)) throw Error(Errc::nonpositive_parameter, "r must be nonnegative");
  if (samples == 0) throw Error(Errc::empty_sample, "samples must be positive");
  std::vector<double> z(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    CounterRng rng(seed, i);
    z[i] = replica_Z(sample_replica_env(spec, rng), ReplicaRoute::persymmetric_burge);
  });
  std::vector<MCResult> out;
  std::vector<double> v(samples);
  for (double r : r_values) {
    for (std::size_t i = 0; i < samples; ++i) v[i] = std::exp(-r * z[i]);
    MCResult res = mc_mean(v);
    res.r = r;
    res.seed = seed;
    out.push_back(res);
  }
  return out;
}

double kolmogorov_q(double lambda) {
  if (lambda <= 0) return 1.0;
  if (lambda < 1.18) {
    // P(K <= lambda) = sqrt(2 pi)/lambda sum_j exp(-(2j-1)^2 pi^2 / (8 lambda^2))
    const double y = std::exp(-M_PI * M_PI / (8.0 * lambda * lambda));
    double s = 0.0;
    for (int j = 1; j <= 6; ++j) s += std::pow(y, (2 * j - 1) * (2 * j - 1));
    return std::clamp(1.0 - std::sqrt(2.0 * M_PI) / lambda * s, 0.0, 1.0);
  }
  double s = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    s += (j % 2 ? 2.0 : -2.0) * term;
    if (term < 1e-300) break;
  }
  return std::clamp(s, 0.0, 1.0);
}

KSResult ks_two_sample(std::vector<double> xs, std::vector<double> ys) {
  if (xs.empty() || ys.empty()) throw Error(Errc::empty_sample, "both samples must be nonempty");
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const double n1 = static_cast<double>(xs.size()), n2 = static_cast<double>(ys.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < xs.size() && j < ys.size()) {
    const double v = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] == v) ++i;
    while (j < ys.size() && ys[j] == v) ++j;
    d = std::max(d, std::abs(i / n1 - j / n2));
  }
  KSResult res;
  res.D = d;
  res.n1 = xs.size();
  res.n2 = ys.size();
  const double en = std::sqrt(n1 * n2 / (n1 + n2));
  res.p = kolmogorov_q((en + 0.12 + 0.11 / en) * d);
  return res;
}

KSReport compare_Z_Zstar(int n, const std::vector<double>& alpha, double beta, std::size_t samples,
                         std::uint64_t seed, int threads) {
  const EnvSpec spec{n, alpha, beta};
  spec.validate();
  if (samples == 0) throw Error(Errc::empty_sample, "samples must be positive");
  std::vector<double> z(samples), zstar(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    CounterRng a(seed, 2 * i), b(seed, 2 * i + 1);
    z[i] = grsk(sample_symmetric_env(spec, a)).at(n, n);
    zstar[i] = gburge(sample_symmetric_env(spec, b)).at(n, n);
  });
  KSReport rep;
  rep.test = "Z vs Z*";
  rep.ks = ks_two_sample(std::move(z), std::move(zstar));
  rep.samples = samples;
  rep.seed = seed;
  return rep;
}

KSReport check_Z_Zstar(int n, const std::vector<double>& alpha, std::size_t samples, std::uint64_t seed, int threads) {
  return compare_Z_Zstar(n, alpha, 0.5, samples, seed, threads);
}

KSReport check_lukacs(double a, double b, std::size_t samples, std::uint64_t seed, int threads) {
  if (!(a > 0) || !(b > 0)) throw Error(Errc::nonpositive_parameter, "a and b must be positive");
  if (samples == 0) throw Error(Errc::empty_sample, "samples must be positive");
  std::vector<double> lhs(samples), rhs(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    CounterRng r1(seed, 2 * i), r2(seed, 2 * i + 1);
    {
      const double x = sample_inv_gamma(a, 1.0, r1), y = sample_inv_gamma(b, 1.0, r1);
      const double z = sample_inv_gamma(a + b, 1.0, r1);
      lhs[i] = (x + y) * z * z;
    }
    const double x = sample_inv_gamma(a, 1.0, r2), y = sample_inv_gamma(b, 1.0, r2);
    const double z = sample_inv_gamma(a + b, 1.0, r2);
    rhs[i] = x * y * z;
  });
  KSReport rep;
  rep.test = "(X+Y)Z^2 vs XYZ";
  rep.ks = ks_two_sample(std::move(lhs), std::move(rhs));
  rep.samples = samples;
  rep.seed = seed;
  return rep;
}

double log_normalization_c(const std::vector<double>& alpha, double beta) {
  if (!(beta > 0)) throw Error(Errc::nonpositive_parameter, "beta must be positive");
  double sum_alpha = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] > 0)) throw Error(Errc::nonpositive_parameter, "alpha entries must be positive");
    sum_alpha += alpha[i];
    acc += std::lgamma(alpha[i]);
    for (std::size_t j = i + 1; j < alpha.size(); ++j) acc += std::lgamma(alpha[i] + alpha[j]);
  }
  return acc - sum_alpha * std::log(beta);
}

double normalization_c(const std::vector<double>& alpha, double beta) {
  return std::exp(log_normalization_c(alpha, beta));
}

}  // namespace burge
