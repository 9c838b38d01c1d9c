#include "burge/paths.hpp"

#include <functional>
#include <set>

namespace burge {

std::string to_string(const LatticePath& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    if (i) out += ",";
    out += to_string(p.points[i]);
  }
  return out + "]";
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r + 0.5L);
}

std::uint64_t path_count(Box from, Box to) {
  const int dr = std::abs(to.row - from.row);
  const int dc = to.col - from.col;
  return binomial(dr + dc, dr);
}

std::vector<std::uint64_t> path_masks(Box from, Box to, int n) {
  std::vector<std::uint64_t> out;
  const int step = to.row >= from.row ? 1 : -1;
  std::function<void(Box, std::uint64_t)> rec = [&](Box at, std::uint64_t mask) {
    mask |= std::uint64_t{1} << ((at.row - 1) * n + (at.col - 1));
    if (at == to) {
      out.push_back(mask);
      return;
    }
    if (at.row != to.row) rec(Box{at.row + step, at.col}, mask);
    if (at.col != to.col) rec(Box{at.row, at.col + 1}, mask);
  };
  rec(from, 0);
  return out;
}

}  // namespace

std::vector<LatticePath> enum_paths_between(Box from, Box to) {
  if (to.col < from.col) throw Error(Errc::invalid_shape, "path must not move left");
  if (path_count(from, to) > kEnumerationLimit)
    throw Error(Errc::size_limit_exceeded, "more than 1e7 paths");
  std::vector<LatticePath> out;
  const int step = to.row >= from.row ? 1 : -1;
  LatticePath current;
  std::function<void(Box)> rec = [&](Box at) {
    current.points.push_back(at);
    if (at == to) {
      out.push_back(current);
    } else {
      if (at.row != to.row) rec(Box{at.row + step, at.col});
      if (at.col != to.col) rec(Box{at.row, at.col + 1});
    }
    current.points.pop_back();
  };
  rec(from);
  return out;
}

std::vector<LatticePath> enum_paths(int m, int n, bool dual) {
  if (m < 1 || n < 1) throw Error(Errc::invalid_shape, "grid must be at least 1x1");
  return dual ? enum_paths_between(Box{m, 1}, Box{1, n}) : enum_paths_between(Box{1, 1}, Box{m, n});
}

static void check_tuple_args(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1 || k > std::min(m, n))
    throw Error(Errc::invalid_shape, "need 1 <= k <= min(m, n)");
}

static Box tuple_start(int m, int r, bool dual) { return dual ? Box{m, r} : Box{1, r}; }
static Box tuple_end(int m, int n, int k, int r, bool dual) {
  return dual ? Box{1, n - k + r} : Box{m, n - k + r};
}

std::vector<std::uint64_t> nonintersecting_masks(int m, int n, int k, bool dual) {
  check_tuple_args(m, n, k);
  if (m * n > 64) throw Error(Errc::size_limit_exceeded, "grid larger than 64 cells");
  std::vector<std::vector<std::uint64_t>> candidates;
  for (int r = 1; r <= k; ++r) {
    Box from = tuple_start(m, r, dual), to = tuple_end(m, n, k, r, dual);
    if (path_count(from, to) > kEnumerationLimit)
      throw Error(Errc::size_limit_exceeded, "more than 1e7 paths");
    candidates.push_back(path_masks(from, to, n));
  }
  std::vector<std::uint64_t> out;
  std::function<void(int, std::uint64_t)> rec = [&](int r, std::uint64_t used) {
    if (r == k) {
      if (out.size() >= kEnumerationLimit) throw Error(Errc::size_limit_exceeded, "more than 1e7 path tuples");
      out.push_back(used);
      return;
    }
    for (std::uint64_t p : candidates[r])
      if ((p & used) == 0) rec(r + 1, used | p);
  };
  rec(0, 0);
  return out;
}

std::vector<std::vector<LatticePath>> enum_nonintersecting(int m, int n, int k, bool dual) {
  check_tuple_args(m, n, k);
  std::vector<std::vector<LatticePath>> candidates;
  for (int r = 1; r <= k; ++r)
    candidates.push_back(enum_paths_between(tuple_start(m, r, dual), tuple_end(m, n, k, r, dual)));
  std::vector<std::vector<LatticePath>> out;
  std::vector<LatticePath> current;
  std::set<Box> used;
  std::function<void(int)> rec = [&](int r) {
    if (r == k) {
      if (out.size() >= kEnumerationLimit) throw Error(Errc::size_limit_exceeded, "more than 1e7 path tuples");
      out.push_back(current);
      return;
    }
    for (const LatticePath& p : candidates[r]) {
      bool clash = false;
      for (const Box& b : p.points) clash = clash || used.count(b);
      if (clash) continue;
      for (const Box& b : p.points) used.insert(b);
      current.push_back(p);
      rec(r + 1);
      current.pop_back();
      for (const Box& b : p.points) used.erase(b);
    }
  };
  rec(0);
  return out;
}

bool Prop4Report::passed() const {
  for (const auto& e : entries)
    if (e.lhs != e.rhs) return false;
  return !entries.empty();
}

Prop4Report check_prop4(const ShapedArray<Rational>& w, Prop4Kind kind, std::optional<Box> box) {
  Prop4Report rep;
  rep.kind = kind;
  ShapedArray<Rational> t;
  if (kind == Prop4Kind::grsk_41) {
    require_rectangular(w.shape());
    rep.box = Box{w.rows(), w.shape().cols()};
    if (box && *box != rep.box) throw Error(Errc::non_rectangular_shape, "grsk check uses the corner box");
    t = grsk(w);
  } else {
    rep.box = box ? *box : Box{w.rows(), w.shape().row_length(w.rows())};
    if (!is_border_box(w.shape(), rep.box))
      throw Error(Errc::box_not_in_shape, to_string(rep.box) + " is not a border box");
    t = gburge(w);
  }
  const int m = rep.box.row, n = rep.box.col;
  Rational lhs = 1;
  for (int k = 1; k <= std::min(m, n); ++k) {
    lhs *= t.at(m - k + 1, n - k + 1);
    Rational rhs = path_sum(w, PathFamily{m, n, k, kind == Prop4Kind::gburge_42});
    rep.entries.push_back(Prop4Entry{k, lhs, rhs});
  }
  return rep;
}

Prop43Report check_prop43(const ShapedArray<Rational>& w) {
  Prop43Report rep;
  const ShapedArray<Rational> t = gburge(w);
  rep.inv_t11 = 1 / t.at(1, 1);
  for (const Box& b : w.shape().boxes()) {
    const Rational inv = 1 / w.at(b);
    rep.inv_sum += inv;
    if (b.row == b.col) rep.diag_inv_sum += inv;
    rep.ratio_sum += (t.get_with_boundary(b.row - 1, b.col) + t.get_with_boundary(b.row, b.col - 1)) / t.at(b);
  }
  return rep;
}

bool is_persymmetric(const ShapedArray<Rational>& w) {
  if (!is_rectangular(w.shape()) || w.rows() != w.shape().cols()) return false;
  const int n = w.rows();
  for (const Box& b : w.shape().boxes())
    if (w.at(b) != w.at(n - b.col + 1, n - b.row + 1)) return false;
  return true;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(num), rd = sqrt(den);
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

ReplicaReport check_replica_decomposition(const ShapedArray<Rational>& w) {
  if (!is_persymmetric(w)) throw Error(Errc::not_persymmetric, "weights must satisfy W_{i,j} = W_{n-j+1,n-i+1}");
  const int n = w.rows();
  ReplicaReport rep;
  rep.z_nn = path_sum_between(w, Box{1, 1}, Box{n, n});
  rep.halves_equal = true;
  Rational squares = 0;
  bool all_square = true;
  for (int a = 1; a <= n; ++a) {
    const int b = n + 1 - a;
    const Rational wab = w.at(a, b);
    const Rational y_first = path_sum_between(w, Box{1, 1}, Box{a, b}) / wab;
    const Rational y_second = path_sum_between(w, Box{a, b}, Box{n, n}) / wab;
    rep.split_sum += wab * y_first * y_second;
    rep.halves_equal = rep.halves_equal && y_first == y_second;
    if (auto root = rational_sqrt(wab)) {
      const Rational z_half = y_first * *root;  // Z'_{a,b} with sqrt weight at the end point
      squares += z_half * z_half;
    } else {
      all_square = false;
    }
  }
  if (all_square) rep.square_sum = squares;
  return rep;
}

}  // namespace burge
