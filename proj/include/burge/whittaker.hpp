#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "burge/quadrature.hpp"

namespace burge {

// Positive entries z_{i,j}, 1 <= j <= i <= n; row n is the argument x.
class TriangularPattern {
 public:
  explicit TriangularPattern(std::vector<std::vector<double>> rows);
  // Free rows 1..n-1 all set to `fill`, bottom row x.
  static TriangularPattern with_bottom(const std::vector<double>& x, double fill = 1.0);

  int n() const { return static_cast<int>(rows_.size()); }
  double operator()(int i, int j) const { return rows_[i - 1][j - 1]; }
  double& operator()(int i, int j) { return rows_[i - 1][j - 1]; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<double>> rows_;
};

// sum over i < n, j <= i of z_{i+1,j+1}/z_{i,j} + z_{i,j}/z_{i+1,j}
double energy(const TriangularPattern& z);

// type_i = (prod of row i) / (prod of row i-1)
std::vector<double> type_vector(const TriangularPattern& z);

enum class PsiMethod { quadrature, monte_carlo };

struct PsiOptions {
  PsiMethod method = PsiMethod::quadrature;
  QuadOptions quad{};
  std::size_t mc_samples = 200000;
  std::uint64_t seed = 1;
};

// Integral over the free rows of prod type_i^{alpha_i} exp(-energy) prod dz/z,
// bottom row fixed to x. Real parameters only, n <= 3.
double psi(const std::vector<double>& alpha, const std::vector<double>& x, const PsiOptions& opts = {});

// (1/c) exp(-beta/x_n) psi(-alpha, x) / prod x_i, a density in dx.
double whittaker_density(const std::vector<double>& alpha, double beta, const std::vector<double>& x,
                         const PsiOptions& opts = {});

// Integrals of the unnormalized density exp(-beta/x_n) psi(-alpha, x) prod dx/x
// with an extra factor g(x) over the region x_i <= upper_i. n <= 2.
struct DensityIntegral {
  std::vector<double> alpha;
  double beta = 1.0;
  std::optional<std::vector<double>> upper;  // per-coordinate upper bounds
  std::optional<std::vector<double>> laplace_r;  // factor exp(-sum r_i x_i)
  QuadOptions quad{};
};
double integrate_density_times(const DensityIntegral& spec);

struct CorollaryReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double relerr = 0.0;
};

// lhs: integral of exp(-beta/x_n) psi(-alpha, x) prod dx/x by quadrature;
// rhs: beta^{-sum alpha} prod Gamma(alpha_i) prod_{i<j} Gamma(alpha_i + alpha_j).
CorollaryReport corollary_check(const std::vector<double>& alpha, double beta, const QuadOptions& quad = {});

// Total mass of whittaker_density, expected 1. n <= 2.
double density_mass(const std::vector<double>& alpha, double beta, const QuadOptions& quad = {});

// P(x_1 <= a_1, ..., x_n <= a_n) under whittaker_density. n <= 2.
double density_cdf(const std::vector<double>& alpha, double beta, const std::vector<double>& a,
                   const QuadOptions& quad = {});

// E[exp(-r x_k)] under whittaker_density, k one-based. n <= 2.
double density_laplace(const std::vector<double>& alpha, double beta, int k, double r, const QuadOptions& quad = {});

}  // namespace burge
