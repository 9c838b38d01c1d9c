#include <doctest.h>

#include "burge/local_maps.hpp"
#include "burge/random.hpp"

using namespace burge;

using RA = ShapedArray<Rational>;
using TA = ShapedArray<Tropical>;
static Rational q(const char* s) { return parse_rational(s); }
static RA mat(std::vector<std::vector<Rational>> rows) { return RA(rows); }
static TA tmat(std::vector<std::vector<double>> rows) {
  std::vector<std::vector<Tropical>> t;
  for (auto& r : rows) {
    t.emplace_back();
    for (double x : r) t.back().push_back(Tropical(x));
  }
  return TA(t);
}

TEST_CASE("a map") {
  CHECK(apply_a(mat({{1, 2}, {3, 4}}), 1, 1) == mat({{q("6/5"), 2}, {3, 4}}));
  CHECK(apply_a(tmat({{0, 1}, {2, 3}}), 1, 1) == tmat({{1, 1}, {2, 3}}));
  try {
    apply_a(mat({{1, 2}, {3, 4}}), 1, 2);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_neighbor_box);
  }
}

TEST_CASE("b map") {
  CHECK(apply_b(mat({{q("1/2"), 1}, {1, 2}}), 2, 1).at(2, 1) == 1);
  CHECK(apply_b(mat({{q("6/5"), 2}, {3, 20}}), 2, 1).at(2, 1) == 8);
  CHECK_THROWS_AS(apply_b(mat({{1, 2}, {3, 4}}), 1, 2), Error);
}

TEST_CASE("c map") {
  CHECK(apply_c(mat({{3}}), 1, 1).at(1, 1) == 3);
  CHECK(apply_c(mat({{1, 2}, {3, 4}}), 2, 2).at(2, 2) == 20);
  CHECK(apply_c(tmat({{0, 1}, {2, 3}}), 2, 2).at(2, 2) == Tropical(5));
  CHECK_THROWS_AS(apply_c(mat({{1}}), 2, 1), Error);
}

TEST_CASE("d map") {
  // H = hsum(4, 1) = 4/5, A = 1: w11 -> hsum(2, 3) = 6/5; w22 -> (3/4 + 1/2) 4/5 = 1.
  RA d = apply_d(mat({{2, 1}, {4, 3}}), {1, 1}, {2, 2});
  CHECK(d == mat({{q("6/5"), 1}, {4, 1}}));
  CHECK(apply_d(RA(Shape::rectangle(2, 2)), {1, 1}, {2, 2}) == mat({{q("1/2"), 1}, {1, 1}}));
  CHECK(apply_d(tmat({{0, 0}, {0, 0}}), {1, 1}, {2, 2}) == tmat({{0, 0}, {0, 0}}));
  try {
    apply_d(mat({{2, 1}, {4, 3}}), {1, 1}, {1, 1});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::coincident_indices);
  }
}

TEST_CASE("e map") {
  CHECK(apply_e(mat({{1, 2}, {3, 4}}), {2, 1}, {2, 2}) == mat({{1, 2}, {4, 3}}));
  CHECK(apply_e(apply_e(mat({{1, 2}, {3, 4}}), {1, 1}, {2, 2}), {1, 1}, {2, 2}) == mat({{1, 2}, {3, 4}}));
  CHECK_THROWS_AS(apply_e(mat({{1, 2}, {3, 4}}), {1, 1}, {1, 1}), Error);
  CHECK_THROWS_AS(apply_e(mat({{1, 2}, {3, 4}}), {1, 1}, {3, 1}), Error);
}

TEST_CASE("involutions and inverse round trips on random arrays") {
  CounterRng rng(17, 0);
  const Shape s({4, 4, 3, 1});
  for (int t = 0; t < 100; ++t) {
    RA w = random_rational_array(s, rng);
    for (const Box& b : s.boxes()) {
      if (s.contains(b.row + 1, b.col) && s.contains(b.row, b.col + 1))
        REQUIRE(apply_a(apply_a(w, b.row, b.col), b.row, b.col) == w);
      if (s.contains(b.row, b.col + 1)) REQUIRE(apply_b(apply_b(w, b.row, b.col), b.row, b.col) == w);
      REQUIRE(inv_c(apply_c(w, b.row, b.col), b.row, b.col) == w);
      REQUIRE(apply_c(inv_c(w, b.row, b.col), b.row, b.col) == w);
    }
    // d along diagonals, as used by the Burge maps
    for (const Box& ij : s.boxes()) {
      if (!s.contains(ij.row + 1, ij.col) || !s.contains(ij.row, ij.col + 1)) continue;
      for (int h = 1; s.contains(ij.row + h, ij.col + h); ++h) {
        Box kl{ij.row + h, ij.col + h};
        REQUIRE(inv_d(apply_d(w, ij, kl), ij, kl) == w);
        REQUIRE(apply_d(inv_d(w, ij, kl), ij, kl) == w);
      }
    }
  }
  CHECK(inv_d(mat({{q("1/2"), 1}, {1, 1}}), {1, 1}, {2, 2}) == RA(Shape::rectangle(2, 2)));
}

TEST_CASE("inverse of d rejects adjacent targets") {
  try {
    inv_d(RA(Shape::rectangle(3, 3)), {1, 1}, {2, 1});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::neighbor_target);
  }
}

TEST_CASE("symmetric c and d") {
  UpperArray<Rational> up(Shape::rectangle(2, 2), Rational(1));
  CHECK(apply_c_up(up, 1).at(1, 1) == 1);
  auto d = apply_d_up(up, 1, 2);
  CHECK(d.at(1, 1) == q("1/2"));
  CHECK(d.at(2, 2) == 1);
  CHECK(apply_c_up(d, 2).at(2, 2) == 2);
  CHECK_THROWS_AS(apply_c_up(UpperArray<Tropical>(Shape::rectangle(2, 2)), 1), Error);

  // agreement with the full maps on symmetrized input
  CounterRng rng(23, 0);
  const Shape s = Shape::rectangle(4, 4);
  for (int t = 0; t < 30; ++t) {
    UpperArray<Rational> u(s);
    for (const Box& b : u.boxes()) u.at(b) = random_rational(rng);
    RA full = symmetrize(u);
    for (int i = 1; i <= 4; ++i) {
      RA c_full = apply_c(full, i, i);
      RA c_sym = symmetrize(apply_c_up(u, i));
      REQUIRE(restrict_upper(c_full) == restrict_upper(c_sym));
      for (int k = i + 1; k <= 4; ++k) {
        RA d_full = apply_d(full, {i, i}, {k, k});
        REQUIRE(restrict_upper(d_full) == apply_d_up(u, i, k));
      }
    }
  }
}
