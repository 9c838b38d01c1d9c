#include "burge/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <type_traits>

#include "burge/jacobian.hpp"
#include "burge/parallel.hpp"
#include "burge/paths.hpp"
#include "burge/polymer.hpp"
#include "burge/random.hpp"

namespace burge {

json to_json(const IdentityReport& r) {
  json j{{"identity", r.identity}, {"statement", r.statement}, {"trials", r.trials}, {"failures", r.failures},
         {"passed", r.passed()}};
  if (r.first_counterexample) j["first_counterexample"] = *r.first_counterexample;
  return j;
}

std::vector<Box> prop33_admissible(const Shape& shape) {
  std::vector<Box> out;
  for (const Box& b : shape.boxes())
    if (b.row >= 2 && shape.contains(b.row, b.col + 1) && shape.contains(b.row - 1, b.col)) out.push_back(b);
  return out;
}

template <class T>
std::pair<ShapedArray<T>, ShapedArray<T>> prop33_sides(const ShapedArray<T>& w, int p, int q) {
  ShapedArray<T> lhs = w;
  detail::tau_inplace(lhs, p, q);
  detail::rho_inplace(lhs, p, q + 1);
  detail::sigma_inplace(lhs, p, q);
  ShapedArray<T> rhs = w;
  detail::e_inplace(rhs, Box{p, q}, Box{p, q + 1});
  detail::sigma_inplace(rhs, p - 1, q);
  detail::rho_inplace(rhs, p, q);
  detail::tau_inplace(rhs, p, q + 1);
  return {std::move(lhs), std::move(rhs)};
}

namespace {

// Local maps on row m+1 that ignore row m: A = w_{m+1,j-1}, with w_{m+1,0} = 1.
template <class T>
T shifted_up_left(const ShapedArray<T>& w, int row, int j) {
  return j == 1 ? one<T>() : w.at(row, j - 1);
}

template <class T>
void a_shifted(ShapedArray<T>& w, int row, int j) {
  const T H = detail::down_right(w, row, j);
  detail::a_kernel(w, row, j, shifted_up_left(w, row, j), H);
}

template <class T>
void d_shifted(ShapedArray<T>& w, int row, int j, Box target) {
  const T H = detail::down_right(w, row, j);
  detail::d_kernel(w, Box{row, j}, target, shifted_up_left(w, row, j), H);
}

template <class T>
void inv_d_shifted(ShapedArray<T>& w, int row, int j, Box target) {
  const T H = detail::down_right(w, row, j);
  detail::inv_d_kernel(w, Box{row, j}, target, shifted_up_left(w, row, j), H);
}

}  // namespace

template <class T>
ShapedArray<T> appendix_composition(ShapedArray<T> w, int m, int q) {
  if (m < 1 || q < 3) throw Error(Errc::invalid_shape, "requires m >= 1 and q >= 3");
  const Box K{m + q, q + 1};
  if (!w.shape().contains(K))
    throw Error(Errc::missing_neighbor_box, to_string(K) + " not in " + to_string(w.shape()));
  using namespace detail;
  auto A = [&] {
    a_shifted(w, m + 1, 1);
    a_inplace(w, m + 2, 2);
    a_shifted(w, m + 1, 2);
    a_inplace(w, m + 1, 2);
    a_inplace(w, m, 1);
    a_inplace(w, m + 2, 2);
    a_inplace(w, m + 1, 1);
  };
  // Rightmost factor first.
  a_inplace(w, m + 1, 1);
  a_inplace(w, m + 2, 2);
  a_inplace(w, m, 1);
  a_inplace(w, m + 1, 2);
  d_inplace(w, Box{m + 1, 1}, K);
  inv_d_shifted(w, m + 1, 1, K);
  a_shifted(w, m + 1, 2);
  a_inplace(w, m + 2, 2);
  a_shifted(w, m + 1, 1);
  d_shifted(w, m + 1, 2, K);
  d_inplace(w, Box{m + 2, 3}, K);
  A();
  inv_d_inplace(w, Box{m + 2, 3}, K);
  inv_d_inplace(w, Box{m + 1, 2}, K);
  inv_d_inplace(w, Box{m, 1}, K);
  return w;
}

template std::pair<ShapedArray<Rational>, ShapedArray<Rational>> prop33_sides(const ShapedArray<Rational>&, int, int);
template std::pair<ShapedArray<double>, ShapedArray<double>> prop33_sides(const ShapedArray<double>&, int, int);
template std::pair<ShapedArray<Tropical>, ShapedArray<Tropical>> prop33_sides(const ShapedArray<Tropical>&, int, int);
template ShapedArray<Rational> appendix_composition(ShapedArray<Rational>, int, int);
template ShapedArray<double> appendix_composition(ShapedArray<double>, int, int);
template ShapedArray<Tropical> appendix_composition(ShapedArray<Tropical>, int, int);

namespace {

using Outcome = std::optional<json>;

template <class T>
ShapedArray<T> random_input(const Shape& s, CounterRng& rng) {
  if constexpr (std::is_same_v<T, Rational>) return random_rational_array(s, rng);
  else if constexpr (std::is_same_v<T, double>) return random_loguniform_array(s, rng);
  else return random_integer_tropical_array(s, rng);
}

bool close(const Rational& a, const Rational& b, double) { return a == b; }
bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); }
bool close(Tropical a, Tropical b, double tol) { return a.v == b.v || std::abs(a.v - b.v) <= tol; }

template <class T>
bool same(const ShapedArray<T>& a, const ShapedArray<T>& b, double tol) {
  if (a.shape() != b.shape()) return false;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    if (!close(a.data()[i], b.data()[i], tol)) return false;
  return true;
}

template <class T>
json counterexample(const ShapedArray<T>& input, const ShapedArray<T>& lhs, const ShapedArray<T>& rhs,
                    const std::string& note = {}) {
  json j{{"input", to_json(input)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
  if (!note.empty()) j["note"] = note;
  return j;
}

template <class T>
Outcome compare(const ShapedArray<T>& input, const ShapedArray<T>& lhs, const ShapedArray<T>& rhs, double tol,
                const std::string& note = {}) {
  if (same(lhs, rhs, tol)) return std::nullopt;
  return counterexample(input, lhs, rhs, note);
}

template <class T>
ShapedArray<T> symmetric_input(const Shape& s, CounterRng& rng) {
  return symmetrize(restrict_upper(random_input<T>(s, rng)));
}

std::vector<Shape> rectangles(int max_side) {
  std::vector<Shape> out;
  for (int m = 1; m <= max_side; ++m)
    for (int n = 1; n <= max_side; ++n) out.push_back(Shape::rectangle(m, n));
  return out;
}

std::vector<Shape> self_conjugate_in_box(int n) {
  std::vector<Shape> out;
  for (const Shape& s : partitions_in_box(n, n))
    if (is_self_conjugate(s)) out.push_back(s);
  return out;
}

void require_size(int max_size, int min) {
  if (max_size < min)
    throw Error(Errc::size_limit_exceeded, "max-size must be at least " + std::to_string(min));
}

const Shape& pick(const std::vector<Shape>& shapes, int trial) {
  return shapes[static_cast<std::size_t>(trial) % shapes.size()];
}

double default_tol(Domain d) { return d == Domain::geom_float ? 1e-12 : 0.0; }

IdentityReport run_trials(const std::string& name, const std::string& statement, const VerifyOptions& opts,
                          const std::function<Outcome(int, CounterRng&)>& trial) {
  if (opts.trials < 0) throw Error(Errc::size_limit_exceeded, "trials must be nonnegative");
  std::vector<Outcome> out(static_cast<std::size_t>(opts.trials));
  parallel_for(out.size(), opts.threads, [&](std::size_t t) {
    CounterRng rng(opts.seed, t);
    try {
      out[t] = trial(static_cast<int>(t), rng);
    } catch (const Error& e) {
      out[t] = json{{"trial", t}, {"note", e.what()}};
    }
  });
  IdentityReport rep;
  rep.identity = name;
  rep.statement = statement;
  rep.trials = opts.trials;
  for (auto& o : out) {
    if (!o) continue;
    if (!rep.first_counterexample) rep.first_counterexample = std::move(*o);
    ++rep.failures;
  }
  return rep;
}

// Runs `check` with the scalar type chosen by opts.domain.
template <class Check>
IdentityReport run_in_domain(const std::string& name, const std::string& statement, const VerifyOptions& opts,
                             Check check) {
  const double tol = opts.tol.value_or(default_tol(opts.domain));
  switch (opts.domain) {
    case Domain::geom_rational:
      return run_trials(name, statement, opts,
                        [&](int t, CounterRng& rng) { return check(std::type_identity<Rational>{}, t, rng, tol); });
    case Domain::geom_float:
      return run_trials(name, statement, opts,
                        [&](int t, CounterRng& rng) { return check(std::type_identity<double>{}, t, rng, tol); });
    case Domain::tropical:
      return run_trials(name, statement, opts,
                        [&](int t, CounterRng& rng) { return check(std::type_identity<Tropical>{}, t, rng, tol); });
  }
  throw Error(Errc::domain_mismatch, "unknown domain");
}

void require_rational(const VerifyOptions& opts, const std::string& name) {
  if (opts.domain == Domain::tropical) throw Error(Errc::tropical_domain_unsupported, name + " compares exact path sums");
  if (opts.domain != Domain::geom_rational) throw Error(Errc::domain_mismatch, name + " runs in geom-rational only");
}

IdentityReport thm32(const VerifyOptions& o) {
  const auto shapes = rectangles(o.max_size);
  return run_in_domain("thm3.2", "grsk(R C w) = T S T S grsk(w) on rectangles; R, C reverse rows, columns; S = gschutz; T = transpose",
                       o, [&](auto tag, int t, CounterRng& rng, double tol) -> Outcome {
                         using T = typename decltype(tag)::type;
                         const auto w = random_input<T>(pick(shapes, t), rng);
                         return compare(w, grsk(reverse_rows(reverse_cols(w))), gschutz_upper(gschutz(grsk(w))), tol);
                       });
}

IdentityReport thm34c(const VerifyOptions& o) {
  const auto shapes = rectangles(o.max_size);
  return run_in_domain("thm3.4-C", "gburge(C w) = gschutz(grsk(w)) on rectangles; C reverses columns", o,
                       [&](auto tag, int t, CounterRng& rng, double tol) -> Outcome {
                         using T = typename decltype(tag)::type;
                         const auto w = random_input<T>(pick(shapes, t), rng);
                         return compare(w, gburge(reverse_cols(w)), gschutz(grsk(w)), tol);
                       });
}

IdentityReport thm34r(const VerifyOptions& o) {
  const auto shapes = rectangles(o.max_size);
  return run_in_domain("thm3.4-R", "gburge(R w) = T gschutz(T grsk(w)) on rectangles; R reverses rows; T = transpose", o,
                       [&](auto tag, int t, CounterRng& rng, double tol) -> Outcome {
                         using T = typename decltype(tag)::type;
                         const auto w = random_input<T>(pick(shapes, t), rng);
                         return compare(w, gburge(reverse_rows(w)), gschutz_upper(grsk(w)), tol);
                       });
}

IdentityReport prop33(const VerifyOptions& o) {
  require_size(o.max_size, 2);
  std::vector<Shape> shapes;
  for (const Shape& s : partitions_in_box(o.max_size, o.max_size))
    if (!prop33_admissible(s).empty()) shapes.push_back(s);
  return run_in_domain(
      "prop3.3",
      "sigma_{p,q} rho_{p,q+1} tau_{p,q} = tau_{p,q+1} rho_{p,q} sigma_{p-1,q} e^{p,q+1}_{p,q} for every (p,q) with "
      "(p,q), (p,q+1), (p-1,q) in the shape",
      o, [&](auto tag, int t, CounterRng& rng, double tol) -> Outcome {
        using T = typename decltype(tag)::type;
        const Shape& s = pick(shapes, t);
        const auto w = random_input<T>(s, rng);
        for (const Box& b : prop33_admissible(s)) {
          const auto [lhs, rhs] = prop33_sides(w, b.row, b.col);
          if (auto bad = compare(w, lhs, rhs, tol, "(p,q) = " + to_string(b))) return bad;
        }
        return std::nullopt;
      });
}

IdentityReport appendix(const VerifyOptions& o) {
  require_size(o.max_size, 4);
  struct Case {
    int n, m, q;
  };
  std::vector<Case> cases;
  for (int n = 4; n <= o.max_size; ++n)
    for (int q = 3; q + 1 <= n; ++q)
      for (int m = 1; m + q <= n; ++m) cases.push_back({n, m, q});
  return run_in_domain(
      "appendix-C-identity",
      "inv d^K_{m,1} inv d^K_{m+1,2} inv d^K_{m+2,3} A d^K_{m+2,3} d~^K_{m+1,2} a~_{m+1,1} a_{m+2,2} a~_{m+1,2} B "
      "a_{m+1,2} a_{m,1} a_{m+2,2} a_{m+1,1} = id with K = (m+q,q+1), q >= 3, B = inv d~^K_{m+1,1} d^K_{m+1,1}, "
      "A = a_{m+1,1} a_{m+2,2} a_{m,1} a_{m+1,2} a~_{m+1,2} a_{m+2,2} a~_{m+1,1}; tilde maps on row m+1 ignore row m",
      o, [&](auto tag, int t, CounterRng& rng, double tol) -> Outcome {
        using T = typename decltype(tag)::type;
        const Case& c = cases[static_cast<std::size_t>(t) % cases.size()];
        const auto w = random_input<T>(Shape::rectangle(c.n, c.n), rng);
        std::ostringstream note;
        note << "n = " << c.n << ", m = " << c.m << ", q = " << c.q;
        return compare(w, appendix_composition(w, c.m, c.q), w, tol, note.str());
      });
}

IdentityReport order_independence(const VerifyOptions& o) {
  const auto shapes = partitions_up_to(o.max_size);
  return run_in_domain(
      "order-independence",
      "grsk and gburge give the same output for every growth sequence (all sequences when |shape| <= 8, 20 random "
      "ones otherwise)",
      o, [&](auto tag, int t, CounterRng& rng, double tol) -> Outcome {
        using T = typename decltype(tag)::type;
        const Shape& s = pick(shapes, t);
        const auto w = random_input<T>(s, rng);
        const auto k = grsk(w), b = gburge(w);
        std::vector<GrowthSequence> orders;
        if (s.size() <= 8) orders = all_growth_sequences(s);
        else
          for (int r = 0; r < 20; ++r) orders.push_back(random_growth_sequence(s, rng));
        for (const auto& g : orders) {
          if (auto bad = compare(w, grsk(w, g), k, tol, "grsk order " + growth_to_json(g).dump())) return bad;
          if (auto bad = compare(w, gburge(w, g), b, tol, "gburge order " + growth_to_json(g).dump())) return bad;
        }
        return std::nullopt;
      });
}

IdentityReport recursion(const VerifyOptions& o) {
  const auto shapes = partitions_in_box(o.max_size, o.max_size);
  return run_in_domain(
      "recursion",
      "grsk = rho_c o grsk(shape minus c) and gburge = tau_c o gburge(shape minus c) with corners c removed in random "
      "order",
      o, [&](auto tag, int t, CounterRng& rng, double tol) -> Outcome {
        using T = typename decltype(tag)::type;
        const auto w = random_input<T>(pick(shapes, t), rng);
        auto choose = [&rng](const std::vector<Box>& corners) {
          return corners[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(corners.size()) - 1))];
        };
        if (auto bad = compare(w, grsk_recursive(w, choose), grsk(w), tol, "grsk")) return bad;
        return compare(w, gburge_recursive(w, choose), gburge(w), tol, "gburge");
      });
}

IdentityReport transpose_equivariance(const VerifyOptions& o) {
  const auto shapes = partitions_in_box(o.max_size, o.max_size);
  return run_in_domain("transpose-equivariance", "grsk(w^T) = grsk(w)^T and gburge(w^T) = gburge(w)^T", o,
                       [&](auto tag, int t, CounterRng& rng, double tol) -> Outcome {
                         using T = typename decltype(tag)::type;
                         const auto w = random_input<T>(pick(shapes, t), rng);
                         if (auto bad = compare(w, grsk(transpose(w)), transpose(grsk(w)), tol, "grsk")) return bad;
                         return compare(w, gburge(transpose(w)), transpose(gburge(w)), tol, "gburge");
                       });
}

IdentityReport prop51(const VerifyOptions& o) {
  const auto shapes = self_conjugate_in_box(o.max_size);
  return run_in_domain(
      "prop5.1",
      "for symmetric w: gburge(w) is symmetric, gburge(w^T) = gburge(w)^T, and gburge restricted to the upper part "
      "equals gburge_up (geometric domains)",
      o, [&](auto tag, int t, CounterRng& rng, double tol) -> Outcome {
        using T = typename decltype(tag)::type;
        const auto w = symmetric_input<T>(pick(shapes, t), rng);
        const auto b = gburge(w);
        if (auto bad = compare(w, b, transpose(b), tol, "gburge(w) symmetric")) return bad;
        if (auto bad = compare(w, gburge(transpose(w)), transpose(b), tol, "transpose")) return bad;
        if constexpr (!std::is_same_v<T, Tropical>)
          return compare(w, symmetrize(gburge_up(restrict_upper(w))), b, tol, "gburge_up");
        return std::nullopt;
      });
}

json prop4_json(const Prop4Report& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"k", e.k}, {"lhs", format_rational(e.lhs)}, {"rhs", format_rational(e.rhs)}});
  return {{"box", {r.box.row, r.box.col}}, {"entries", entries}};
}

IdentityReport prop41(const VerifyOptions& o) {
  require_rational(o, "prop4.1");
  const auto shapes = rectangles(o.max_size);
  return run_trials("prop4.1",
                    "on m x n, t_{m,n} t_{m-1,n-1} ... t_{m-k+1,n-k+1} of grsk equals the sum over k-tuples of "
                    "non-intersecting paths ending at (m,n), (m-1,n-1), ... of the product of their weights, every k",
                    o, [&](int t, CounterRng& rng) -> Outcome {
                      const auto w = random_rational_array(pick(shapes, t), rng);
                      const auto r = check_prop4(w, Prop4Kind::grsk_41);
                      if (r.passed()) return std::nullopt;
                      return json{{"input", to_json(w)}, {"lhs", prop4_json(r)}, {"rhs", nullptr}};
                    });
}

IdentityReport prop42(const VerifyOptions& o) {
  require_rational(o, "prop4.2");
  auto shapes = rectangles(o.max_size);
  shapes.push_back(Shape({3, 3, 2}));
  shapes.push_back(Shape({4, 2, 1}));
  return run_trials("prop4.2",
                    "for every border box (m,n), the product of the last k diagonal entries of gburge ending at "
                    "(m,n) equals the dual k-path sum, every k",
                    o, [&](int t, CounterRng& rng) -> Outcome {
                      const Shape& s = pick(shapes, t);
                      const auto w = random_rational_array(s, rng);
                      for (const Box& b : s.boxes()) {
                        if (!is_border_box(s, b)) continue;
                        const auto r = check_prop4(w, Prop4Kind::gburge_42, b);
                        if (!r.passed()) return json{{"input", to_json(w)}, {"lhs", prop4_json(r)}, {"rhs", nullptr}};
                      }
                      return std::nullopt;
                    });
}

IdentityReport prop43(const VerifyOptions& o) {
  require_rational(o, "prop4.3");
  const auto shapes = partitions_up_to(o.max_size);
  return run_trials(
      "prop4.3",
      "for t = gburge(w): 1/t_{1,1} = sum_i 1/w_{i,i} and sum (t_{i-1,j} + t_{i,j-1})/t_{i,j} = sum 1/w_{i,j}", o,
      [&](int, CounterRng& rng) -> Outcome {
        const Shape& s = shapes[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(shapes.size()) - 1))];
        const auto w = random_rational_array(s, rng);
        const auto r = check_prop43(w);
        if (r.passed()) return std::nullopt;
        return json{{"input", to_json(w)},
                    {"lhs", {format_rational(r.inv_t11), format_rational(r.ratio_sum)}},
                    {"rhs", {format_rational(r.diag_inv_sum), format_rational(r.inv_sum)}}};
      });
}

IdentityReport jacobian_check(const VerifyOptions& o, bool symmetric) {
  if (o.domain == Domain::tropical) throw Error(Errc::tropical_domain_unsupported, "tropical maps are not smooth");
  const double tol = o.tol.value_or(1e-6);
  const double h = 1e-5;
  const double agree = 10 * h * h + 1e-10;
  const auto shapes = symmetric ? self_conjugate_in_box(o.max_size) : partitions_up_to(o.max_size);
  const std::string name = symmetric ? "jacobian-symmetric" : "jacobian";
  const std::string statement =
      symmetric ? "|det d log gburge_up / d log w| = 1 on the upper boxes of symmetric arrays"
                : "|det d log t / d log w| = 1 for t = grsk(w) and t = gburge(w)";
  return run_trials(name,
                    statement + "; forward-dual and central-difference Jacobians agree within 10 h^2 + 1e-10, h = 1e-5",
                    o, [&](int t, CounterRng& rng) -> Outcome {
                      const Shape& s = pick(shapes, t);
                      auto w = random_loguniform_array(s, rng);
                      if (symmetric) w = symmetrize(restrict_upper(w));
                      const std::vector<JacobianMap> maps =
                          symmetric ? std::vector{JacobianMap::gburge_up} : std::vector{JacobianMap::grsk, JacobianMap::gburge};
                      for (JacobianMap m : maps) {
                        const auto jd = loglog_jacobian(m, w, DiffMode::forward_dual);
                        const auto jf = loglog_jacobian(m, w, DiffMode::central_difference, h);
                        const double det = abs_det(jd);
                        const double diff = jd.size() ? (jd - jf).cwiseAbs().maxCoeff() : 0.0;
                        const std::string which = m == JacobianMap::grsk ? "grsk" : m == JacobianMap::gburge ? "gburge" : "gburge_up";
                        if (std::abs(det - 1) > tol || diff > agree)
                          return json{{"input", to_json(w)},
                                      {"lhs", {{"abs_det", det}, {"max_dual_fd_gap", diff}}},
                                      {"rhs", {{"abs_det", 1.0}, {"max_dual_fd_gap", agree}}},
                                      {"note", which}};
                      }
                      return std::nullopt;
                    });
}

IdentityReport tropical_limit(const VerifyOptions& o) {
  const double C = o.tol.value_or(10.0);
  const auto shapes = partitions_up_to(o.max_size);
  const std::vector<double> eps{1e-1, 1e-2, 1e-3};
  return run_trials(
      "tropical-limit",
      "max |eps log F(exp(x/eps)) - F^trop(x)| <= C eps and nonincreasing over eps in {1e-1, 1e-2, 1e-3}, for F in "
      "{grsk, gburge, gschutz (rectangles)} on integer arrays",
      o, [&](int, CounterRng& rng) -> Outcome {
        const Shape& s = shapes[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(shapes.size()) - 1))];
        const auto x = random_integer_tropical_array(s, rng);
        std::vector<std::pair<std::string, std::function<ShapedArray<Tropical>(const ShapedArray<Tropical>&)>>> trop{
            {"grsk", [](const auto& a) { return grsk(a); }}, {"gburge", [](const auto& a) { return gburge(a); }}};
        std::vector<std::function<ShapedArray<LogReal>(const ShapedArray<LogReal>&)>> geom{
            [](const auto& a) { return grsk(a); }, [](const auto& a) { return gburge(a); }};
        if (is_rectangular(s)) {
          trop.push_back({"gschutz", [](const auto& a) { return gschutz(a); }});
          geom.push_back([](const auto& a) { return gschutz(a); });
        }
        for (std::size_t f = 0; f < trop.size(); ++f) {
          const auto tr = trop[f].second(x);
          std::vector<double> errs;
          for (double e : eps) {
            const auto g = geom[f](x.map([e](Tropical v) { return LogReal(v.v / e); }));
            double err = 0.0;
            for (std::size_t i = 0; i < tr.data().size(); ++i)
              err = std::max(err, std::abs(e * g.data()[i].log - tr.data()[i].v));
            errs.push_back(err);
          }
          bool ok = true;
          for (std::size_t i = 0; i < eps.size(); ++i) {
            if (errs[i] > C * eps[i]) ok = false;
            if (i > 0 && errs[i] > errs[i - 1] + 1e-12) ok = false;
          }
          if (!ok) {
            json bounds = json::array();
            for (double e : eps) bounds.push_back(C * e);
            return json{{"input", to_json(x)}, {"lhs", errs}, {"rhs", bounds}, {"note", trop[f].first}};
          }
        }
        return std::nullopt;
      });
}

ShapedArray<Rational> random_persymmetric(int n, CounterRng& rng) {
  ShapedArray<Rational> p(Shape::rectangle(n, n), Rational(1));
  for (const Box& b : p.shape().boxes()) {
    if (b.row + b.col < n + 1) p.at(b) = random_rational(rng);
    else if (b.row + b.col == n + 1) {
      const Rational r = random_rational(rng);
      p.at(b) = r * r;
    }
  }
  for (const Box& b : p.shape().boxes())
    if (b.row + b.col > n + 1) p.at(b) = p.at(n - b.col + 1, n - b.row + 1);
  return p;
}

IdentityReport replica(const VerifyOptions& o) {
  require_rational(o, "replica-decomposition");
  require_size(o.max_size, 1);
  const double tol = o.tol.value_or(1e-10);
  return run_trials(
      "replica-decomposition",
      "for persymmetric W with square antidiagonal: Z_{n,n}(W) = sum_{a+b=n+1} W_{a,b} Y_{a,b} Y''_{a,b} = sum_{a+b=n+1} "
      "(Z'_{a,b})^2; path enumeration and the gburge route agree on float staircase weights",
      o, [&](int t, CounterRng& rng) -> Outcome {
        const int n = 1 + t % o.max_size;
        const auto p = random_persymmetric(n, rng);
        const auto r = check_replica_decomposition(p);
        if (!r.passed())
          return json{{"input", to_json(p)},
                      {"lhs", format_rational(r.z_nn)},
                      {"rhs", format_rational(r.split_sum)},
                      {"note", r.halves_equal ? "sums differ" : "half-path sums differ"}};
        const auto w = random_loguniform_array(Shape::staircase(n), rng);
        const double a = replica_Z(w, ReplicaRoute::oracle), b = replica_Z(w, ReplicaRoute::persymmetric_burge);
        if (!close(a, b, tol))
          return json{{"input", to_json(w)}, {"lhs", a}, {"rhs", b}, {"note", "oracle vs gburge route"}};
        return std::nullopt;
      });
}

using Runner = IdentityReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r{
      {"thm3.2", thm32},
      {"thm3.4-C", thm34c},
      {"thm3.4-R", thm34r},
      {"prop3.3", prop33},
      {"appendix-C-identity", appendix},
      {"order-independence", order_independence},
      {"recursion", recursion},
      {"transpose-equivariance", transpose_equivariance},
      {"prop5.1", prop51},
      {"prop4.1", prop41},
      {"prop4.2", prop42},
      {"prop4.3", prop43},
      {"jacobian", [](const VerifyOptions& o) { return jacobian_check(o, false); }},
      {"jacobian-symmetric", [](const VerifyOptions& o) { return jacobian_check(o, true); }},
      {"tropical-limit", tropical_limit},
      {"replica-decomposition", replica},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, _] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

IdentityReport verify_identity(const std::string& name, const VerifyOptions& opts) {
  if (opts.max_size < 1) throw Error(Errc::size_limit_exceeded, "max-size must be positive");
  for (const auto& [n, run] : registry())
    if (n == name) return run(opts);
  throw Error(Errc::unknown_identity_name, name);
}

}  // namespace burge
