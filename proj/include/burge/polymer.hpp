#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burge/correspondences.hpp"
#include "burge/random.hpp"

namespace burge {

struct EnvSpec {
  int n = 1;
  std::vector<double> alpha;
  double beta = 1.0;
  void validate() const;
};

struct MCResult {
  std::optional<double> r;
  double estimate = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

// Mean and standard error of per-sample values, summed in index order.
MCResult mc_mean(const std::vector<double>& values);

// W_{i,i} ~ invGamma(alpha_i, beta), W_{i,j} = W_{j,i} ~ invGamma(alpha_i + alpha_j, 1) for i < j.
ShapedArray<double> sample_symmetric_env(const EnvSpec& spec, CounterRng& rng);

// Weights on {i + j <= n + 1}: the symmetric environment with columns
// reversed, square roots taken on the antidiagonal.
ShapedArray<double> sample_replica_env(const EnvSpec& spec, CounterRng& rng);

// Diagonal (T_{1,1}, ..., T_{n,n}) of gburge(env). The product of the last k
// entries T_{n-k+1,n-k+1} ... T_{n,n} is the dual k-path partition function.
template <class T>
std::vector<T> burge_partition_vector(const ShapedArray<T>& env) {
  require_rectangular(env.shape());
  if (env.rows() != env.shape().cols()) throw Error(Errc::inconsistent_n, "environment must be square");
  const ShapedArray<T> t = gburge(env);
  std::vector<T> out;
  for (int i = 1; i <= env.rows(); ++i) out.push_back(t.at(i, i));
  return out;
}

enum class ReplicaRoute { oracle, persymmetric_burge };

// Sum over a + b = n + 1 of the squared point-to-point partition function
// from (1,1) to (a,b), for weights on the staircase {i + j <= n + 1}.
double replica_Z(const ShapedArray<double>& weights, ReplicaRoute via);

// Persymmetric n x n matrix obtained by squaring the antidiagonal and
// reflecting across it.
ShapedArray<double> unfold_persymmetric(const ShapedArray<double>& weights);

// E[exp(-r Z)] for the replica partition function Z.
std::vector<MCResult> laplace_mc(const EnvSpec& spec, const std::vector<double>& r_values, std::size_t samples,
                                 std::uint64_t seed, int threads = 1);

struct KSResult {
  double D = 0.0;
  double p = 1.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

KSResult ks_two_sample(std::vector<double> xs, std::vector<double> ys);

// Asymptotic Kolmogorov distribution tail P(K > lambda).
double kolmogorov_q(double lambda);

struct KSReport {
  std::string test;
  KSResult ks;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double threshold = 0.01;
  bool passed() const { return ks.p > threshold; }
};

// Point-to-point Z_{n,n} (grsk corner) against dual Z*_{n,n} (gburge corner)
// on symmetric environments; the two sides use independent samples.
KSReport compare_Z_Zstar(int n, const std::vector<double>& alpha, double beta, std::size_t samples,
                         std::uint64_t seed, int threads = 1);
KSReport check_Z_Zstar(int n, const std::vector<double>& alpha, std::size_t samples, std::uint64_t seed,
                       int threads = 1);

// (X + Y) Z^2 against X Y Z for X, Y, Z ~ invGamma(a, 1), invGamma(b, 1), invGamma(a + b, 1).
KSReport check_lukacs(double a, double b, std::size_t samples, std::uint64_t seed, int threads = 1);

// c = beta^{-sum alpha} prod Gamma(alpha_i) prod_{i<j} Gamma(alpha_i + alpha_j)
double log_normalization_c(const std::vector<double>& alpha, double beta);
double normalization_c(const std::vector<double>& alpha, double beta);

}  // namespace burge
