#include "burge/whittaker.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numeric>

#include "burge/errors.hpp"
#include "burge/polymer.hpp"
#include "burge/random.hpp"

namespace burge {

TriangularPattern::TriangularPattern(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(Errc::unsupported_n, "pattern needs at least one row");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != i + 1)
      throw Error(Errc::inconsistent_n, "row " + std::to_string(i + 1) + " has " + std::to_string(rows_[i].size()) + " entries");
    for (double v : rows_[i])
      if (!(v > 0)) throw Error(Errc::nonpositive_entry, "pattern entries must be positive");
  }
}

TriangularPattern TriangularPattern::with_bottom(const std::vector<double>& x, double fill) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 1; i < x.size(); ++i) rows.emplace_back(i, fill);
  rows.push_back(x);
  return TriangularPattern(std::move(rows));
}

double energy(const TriangularPattern& z) {
  double e = 0.0;
  for (int i = 1; i < z.n(); ++i)
    for (int j = 1; j <= i; ++j) e += z(i + 1, j + 1) / z(i, j) + z(i, j) / z(i + 1, j);
  return e;
}

std::vector<double> type_vector(const TriangularPattern& z) {
  std::vector<double> out;
  double prev = 1.0;
  for (const auto& row : z.rows()) {
    const double p = std::accumulate(row.begin(), row.end(), 1.0, std::multiplies<>());
    out.push_back(p / prev);
    prev = p;
  }
  return out;
}

namespace {

void require_params(const std::vector<double>& alpha, const std::vector<double>& x) {
  if (alpha.empty() || alpha.size() > 3) throw Error(Errc::unsupported_n, "evaluation supports n = 1, 2, 3");
  if (alpha.size() != x.size()) throw Error(Errc::inconsistent_n, "alpha and x differ in length");
  for (double v : x)
    if (!(v > 0)) throw Error(Errc::nonpositive_entry, "x entries must be positive");
}

// Log of the integrand in log coordinates; rows of l hold log z.
double log_integrand(const std::vector<double>& alpha, const std::vector<std::vector<double>>& l) {
  double acc = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const double s = std::accumulate(l[i].begin(), l[i].end(), 0.0);
    acc += alpha[i] * (s - prev);
    prev = s;
  }
  for (std::size_t i = 0; i + 1 < l.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) acc -= std::exp(l[i + 1][j + 1] - l[i][j]) + std::exp(l[i][j] - l[i + 1][j]);
  return acc;
}

// n = 2 specialization: bottom row (u1, u2) in logs, free entry v.
inline double log_integrand2(double a1, double a2, double u1, double u2, double v) {
  return a1 * v + a2 * (u1 + u2 - v) - std::exp(u2 - v) - std::exp(v - u1);
}

double psi_quadrature(const std::vector<double>& alpha, const std::vector<double>& x, const QuadOptions& q) {
  const int n = static_cast<int>(x.size());
  std::vector<double> u(n);
  for (int i = 0; i < n; ++i) u[i] = std::log(x[i]);
  if (n == 1) return std::exp(alpha[0] * u[0]);
  if (n == 2) {
    const double a1 = alpha[0], a2 = alpha[1];
    return integrate_line([&](double v) { return std::exp(log_integrand2(a1, a2, u[0], u[1], v)); }, q,
                          0.5 * (u[0] + u[1]));
  }
  std::vector<std::vector<double>> l{{0.0}, {0.0, 0.0}, u};
  return integrate_line(
      [&](double l21) {
        l[1][0] = l21;
        return integrate_line(
            [&](double l22) {
              l[1][1] = l22;
              return integrate_line(
                  [&](double l11) {
                    l[0][0] = l11;
                    return std::exp(log_integrand(alpha, l));
                  },
                  q, 0.5 * (l21 + l22));
            },
            q, 0.5 * (u[1] + u[2]));
      },
      q, 0.5 * (u[0] + u[1]));
}

// Gaussian importance sampling around the mode of the (concave) log integrand.
double psi_monte_carlo(const std::vector<double>& alpha, const std::vector<double>& x, const PsiOptions& opts) {
  const int n = static_cast<int>(x.size());
  if (n == 1) return std::pow(x[0], alpha[0]);
  if (opts.mc_samples == 0) throw Error(Errc::empty_sample, "mc_samples must be positive");
  const int d = n * (n - 1) / 2;
  std::vector<std::vector<double>> l;
  for (int i = 1; i < n; ++i) l.emplace_back(i, 0.0);
  l.emplace_back();
  for (double v : x) l.back().push_back(std::log(v));
  auto set = [&](const Eigen::VectorXd& p) {
    int k = 0;
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j <= i; ++j) l[i][j] = p[k++];
  };
  auto f = [&](const Eigen::VectorXd& p) {
    set(p);
    return log_integrand(alpha, l);
  };

  const double mean_log = std::accumulate(l.back().begin(), l.back().end(), 0.0) / n;
  Eigen::VectorXd p = Eigen::VectorXd::Constant(d, mean_log);
  const double h = 1e-4;
  Eigen::MatrixXd hess(d, d);
  for (int iter = 0; iter < 100; ++iter) {
    Eigen::VectorXd g(d);
    for (int a = 0; a < d; ++a) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
      e[a] = h;
      g[a] = (f(p + e) - f(p - e)) / (2 * h);
      for (int b = 0; b < d; ++b) {
        Eigen::VectorXd e2 = Eigen::VectorXd::Zero(d);
        e2[b] = h;
        hess(a, b) = (f(p + e + e2) - f(p + e - e2) - f(p - e + e2) + f(p - e - e2)) / (4 * h * h);
      }
    }
    Eigen::VectorXd step = hess.ldlt().solve(-g);
    double t = 1.0;
    const double f0 = f(p);
    while (t > 1e-8 && !(f(p + t * step) >= f0)) t *= 0.5;
    p += t * step;
    if (g.norm() < 1e-10 || (t * step).norm() < 1e-12) break;
  }

  const double scale = 1.2;
  Eigen::MatrixXd cov = (-hess).inverse() * scale * scale;
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) throw Error(Errc::nonconvergent_quadrature, "mode Hessian is not negative definite");
  const Eigen::MatrixXd lower = llt.matrixL();
  const double log_det = 2.0 * lower.diagonal().array().log().sum();
  const double fmax = f(p);
  std::vector<double> w(opts.mc_samples);
  for (std::size_t s = 0; s < opts.mc_samples; ++s) {
    CounterRng rng(opts.seed, s);
    Eigen::VectorXd zeta(d);
    for (int a = 0; a < d; ++a) zeta[a] = rng.normal();
    const Eigen::VectorXd q = p + lower * zeta;
    const double log_q = -0.5 * zeta.squaredNorm() - 0.5 * d * std::log(2 * M_PI) - 0.5 * log_det;
    w[s] = std::exp(f(q) - fmax - log_q);
  }
  return mc_mean(w).estimate * std::exp(fmax);
}

std::vector<double> negate(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

void require_density_params(const std::vector<double>& alpha, double beta) {
  if (alpha.empty()) throw Error(Errc::unsupported_n, "alpha must be nonempty");
  for (double a : alpha)
    if (!(a > 0)) throw Error(Errc::nonpositive_parameter, "alpha entries must be positive");
  if (!(beta > 0)) throw Error(Errc::nonpositive_parameter, "beta must be positive");
}

}  // namespace

double psi(const std::vector<double>& alpha, const std::vector<double>& x, const PsiOptions& opts) {
  require_params(alpha, x);
  return opts.method == PsiMethod::quadrature ? psi_quadrature(alpha, x, opts.quad) : psi_monte_carlo(alpha, x, opts);
}

double whittaker_density(const std::vector<double>& alpha, double beta, const std::vector<double>& x,
                         const PsiOptions& opts) {
  require_density_params(alpha, beta);
  require_params(alpha, x);
  const double prod = std::accumulate(x.begin(), x.end(), 1.0, std::multiplies<>());
  return std::exp(-beta / x.back() - log_normalization_c(alpha, beta)) * psi(negate(alpha), x, opts) / prod;
}

double integrate_density_times(const DensityIntegral& spec) {
  require_density_params(spec.alpha, spec.beta);
  const int n = static_cast<int>(spec.alpha.size());
  if (n > 2) throw Error(Errc::unsupported_n, "density integrals support n = 1, 2");
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> hi(n, inf), r(n, 0.0);
  if (spec.upper) {
    if (static_cast<int>(spec.upper->size()) != n) throw Error(Errc::inconsistent_n, "upper bounds differ in length");
    for (int i = 0; i < n; ++i) {
      if (!((*spec.upper)[i] > 0)) return 0.0;
      hi[i] = std::log((*spec.upper)[i]);
    }
  }
  if (spec.laplace_r) {
    if (static_cast<int>(spec.laplace_r->size()) != n) throw Error(Errc::inconsistent_n, "r differs in length");
    r = *spec.laplace_r;
  }
  const double beta = spec.beta;
  const QuadOptions& q = spec.quad;
  if (n == 1) {
    const double a = spec.alpha[0];
    return integrate_line([&](double u) { return std::exp(-beta * std::exp(-u) - a * u - r[0] * std::exp(u)); }, q,
                          std::log(beta / a), -inf, hi[0]);
  }
  const double a1 = -spec.alpha[0], a2 = -spec.alpha[1];
  return integrate_line(
      [&](double u2) {
        const double outer = -beta * std::exp(-u2) - r[1] * std::exp(u2);
        return integrate_line(
            [&](double u1) {
              const double mid = outer - r[0] * std::exp(u1);
              return integrate_line(
                  [&](double v) { return std::exp(mid + log_integrand2(a1, a2, u1, u2, v)); }, q,
                  0.5 * (u1 + u2));
            },
            q, u2, -inf, hi[0]);
      },
      q, 0.0, -inf, hi[1]);
}

CorollaryReport corollary_check(const std::vector<double>& alpha, double beta, const QuadOptions& quad) {
  require_density_params(alpha, beta);
  if (alpha.size() > 2) throw Error(Errc::unsupported_n, "corollary check supports n = 1, 2");
  CorollaryReport rep;
  DensityIntegral spec{alpha, beta, std::nullopt, std::nullopt, quad};
  if (alpha.size() == 1) {
    spec.quad.rel_tol = std::min(quad.rel_tol, 1e-13);
    spec.quad.tail_tol = std::min(quad.tail_tol, 1e-14);
  }
  rep.lhs = integrate_density_times(spec);
  rep.rhs = normalization_c(alpha, beta);
  rep.relerr = std::abs(rep.lhs - rep.rhs) / std::abs(rep.rhs);
  return rep;
}

double density_mass(const std::vector<double>& alpha, double beta, const QuadOptions& quad) {
  return integrate_density_times({alpha, beta, std::nullopt, std::nullopt, quad}) / normalization_c(alpha, beta);
}

double density_cdf(const std::vector<double>& alpha, double beta, const std::vector<double>& a,
                   const QuadOptions& quad) {
  return integrate_density_times({alpha, beta, a, std::nullopt, quad}) / normalization_c(alpha, beta);
}

double density_laplace(const std::vector<double>& alpha, double beta, int k, double r, const QuadOptions& quad) {
  if (k < 1 || k > static_cast<int>(alpha.size())) throw Error(Errc::inconsistent_n, "coordinate index out of range");
  std::vector<double> rv(alpha.size(), 0.0);
  rv[k - 1] = r;
  return integrate_density_times({alpha, beta, std::nullopt, rv, quad}) / normalization_c(alpha, beta);
}

}  // namespace burge
