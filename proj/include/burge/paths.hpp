#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burge/correspondences.hpp"

namespace burge {

// Monotone lattice path; each step changes the column by +1 or the row by
// one unit in the direction of the end point.
struct LatticePath {
  std::vector<Box> points;
};

std::string to_string(const LatticePath& p);

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

// All monotone paths between two boxes (from.col <= to.col).
std::vector<LatticePath> enum_paths_between(Box from, Box to);

// Standard: (1,1) -> (m,n). Dual: (m,1) -> (1,n).
std::vector<LatticePath> enum_paths(int m, int n, bool dual);

// k-tuples of pairwise vertex-disjoint paths. Standard: path r runs
// (1,r) -> (m, n-k+r). Dual: (m,r) -> (1, n-k+r).
std::vector<std::vector<LatticePath>> enum_nonintersecting(int m, int n, int k, bool dual);

// Point sets of the same tuples as bit masks over the m x n grid (m*n <= 64),
// cell (i,j) at bit (i-1)*n + (j-1).
std::vector<std::uint64_t> nonintersecting_masks(int m, int n, int k, bool dual);

struct PathFamily {
  int m = 1;
  int n = 1;
  int k = 1;
  bool dual = false;
};

// Sum over the family of the product of weights on the union of the paths,
// in the semiring of T (tropical: last-passage value).
template <class T>
T path_sum(const ShapedArray<T>& w, const PathFamily& f) {
  for (int i = 1; i <= f.m; ++i)
    if (w.shape().row_length(i) < f.n)
      throw Error(Errc::box_not_in_shape, "weights do not cover the " + std::to_string(f.m) + "x" +
                                              std::to_string(f.n) + " grid");
  T total = boundary_zero<T>();
  for (std::uint64_t mask : nonintersecting_masks(f.m, f.n, f.k, f.dual)) {
    T prod = one<T>();
    for (int bit = 0; bit < f.m * f.n; ++bit)
      if (mask >> bit & 1U) prod = otimes(prod, w.at(bit / f.n + 1, bit % f.n + 1));
    total = oplus(total, prod);
  }
  return total;
}

template <class T>
T path_sum_between(const ShapedArray<T>& w, Box from, Box to) {
  T total = boundary_zero<T>();
  for (const LatticePath& p : enum_paths_between(from, to)) {
    T prod = one<T>();
    for (const Box& b : p.points) prod = otimes(prod, w.at(b));
    total = oplus(total, prod);
  }
  return total;
}

enum class Prop4Kind { grsk_41, gburge_42 };

struct Prop4Entry {
  int k = 0;
  Rational lhs;  // product of the last k diagonal outputs
  Rational rhs;  // k-path sum
};

struct Prop4Report {
  Prop4Kind kind = Prop4Kind::grsk_41;
  Box box;
  std::vector<Prop4Entry> entries;
  bool passed() const;
};

// grsk_41 uses the corner (m,n) of a rectangle; gburge_42 any border box,
// by default the last box of the last row.
Prop4Report check_prop4(const ShapedArray<Rational>& w, Prop4Kind kind, std::optional<Box> box = std::nullopt);

struct Prop43Report {
  Rational inv_t11;           // 1/t_{1,1}
  Rational diag_inv_sum;      // sum of 1/w_{i,i}
  Rational ratio_sum;         // sum of (t_{i-1,j} + t_{i,j-1}) / t_{i,j}
  Rational inv_sum;           // sum of 1/w_{i,j}
  bool passed() const { return inv_t11 == diag_inv_sum && ratio_sum == inv_sum; }
};

Prop43Report check_prop43(const ShapedArray<Rational>& w);

bool is_persymmetric(const ShapedArray<Rational>& w);

struct ReplicaReport {
  Rational z_nn;          // point-to-point partition function of W
  Rational split_sum;     // sum over a+b=n+1 of W_{a,b} Y_{a,b} Y''_{a,b}
  bool halves_equal = false;  // Y_{a,b} == Y''_{a,b} for every a+b=n+1
  std::optional<Rational> square_sum;  // sum of (Z'_{a,b})^2 when the antidiagonal is a square
  bool passed() const { return z_nn == split_sum && halves_equal && (!square_sum || *square_sum == z_nn); }
};

// Y_{a,b}: paths (1,1)->(a,b) without the end point's weight; Y''_{a,b}:
// paths (a,b)->(n,n) without the start point's weight. With W'_{a,b} = sqrt(W_{a,b})
// we get Z'_{a,b} Z''_{a,b} = W_{a,b} Y_{a,b} Y''_{a,b}, a rational quantity.
ReplicaReport check_replica_decomposition(const ShapedArray<Rational>& w);

// Exact square root of a rational, if it exists.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace burge
