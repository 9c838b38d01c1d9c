#pragma once

#include "burge/array.hpp"

namespace burge {

namespace detail {

template <class Arr>
void require_in(const Arr& w, int i, int j, Errc code) {
  if (!w.shape().contains(i, j)) throw Error(code, to_string(Box{i, j}) + " not in " + to_string(w.shape()));
}

// A = w_{i-1,j} (+) w_{i,j-1}
template <class Arr>
typename Arr::value_type up_left(const Arr& w, int i, int j) {
  return oplus(w.get_with_boundary(i - 1, j), w.get_with_boundary(i, j - 1));
}

// H = hsum(w_{i+1,j}, w_{i,j+1})
template <class Arr>
typename Arr::value_type down_right(const Arr& w, int i, int j) {
  require_in(w, i + 1, j, Errc::missing_neighbor_box);
  require_in(w, i, j + 1, Errc::missing_neighbor_box);
  return hsum(w.at(i + 1, j), w.at(i, j + 1));
}

// The a, b, c, d kernels with the neighbour terms supplied by the caller, so
// that variants with modified A or H reuse the same algebra.
template <class Arr, class T = typename Arr::value_type>
void a_kernel(Arr& w, int i, int j, const T& A, const T& H) {
  T& x = w.at(i, j);
  x = odiv(otimes(A, H), x);
}

template <class Arr, class T = typename Arr::value_type>
void c_kernel(Arr& w, int i, int j, const T& A) {
  T& x = w.at(i, j);
  x = otimes(x, A);
}

template <class Arr, class T = typename Arr::value_type>
void inv_c_kernel(Arr& w, int i, int j, const T& A) {
  T& x = w.at(i, j);
  x = odiv(x, A);
}

template <class Arr, class T = typename Arr::value_type>
void d_kernel(Arr& w, Box ij, Box kl, const T& A, const T& H) {
  const T wij = w.at(ij);
  const T wkl = w.at(kl);
  const T wklA = otimes(wkl, A);
  w.at(ij) = hsum(wij, wklA);
  w.at(kl) = otimes(oplus(odiv(odiv(wklA, wij), wij), odiv(one<T>(), wij)), H);
}

template <class Arr, class T = typename Arr::value_type>
void inv_d_kernel(Arr& w, Box ij, Box kl, const T& A, const T& H) {
  const T pij = w.at(ij);
  const T pkl = w.at(kl);
  const T wij = oplus(pij, odiv(H, pkl));
  w.at(ij) = wij;
  w.at(kl) = odiv(otimes(otimes(pij, pkl), wij), otimes(A, H));
}

inline void require_distinct(Box a, Box b) {
  if (a == b) throw Error(Errc::coincident_indices, to_string(a));
}

// In-place forms used by the correspondences.
template <class Arr>
void a_inplace(Arr& w, int i, int j) {
  require_in(w, i, j, Errc::box_not_in_shape);
  auto H = down_right(w, i, j);
  a_kernel(w, i, j, up_left(w, i, j), H);
}

template <class Arr>
void b_inplace(Arr& w, int i, int j) {
  require_in(w, i, j, Errc::box_not_in_shape);
  require_in(w, i, j + 1, Errc::missing_neighbor_box);
  a_kernel(w, i, j, up_left(w, i, j), w.at(i, j + 1));
}

template <class Arr>
void c_inplace(Arr& w, int i, int j) {
  require_in(w, i, j, Errc::box_not_in_shape);
  c_kernel(w, i, j, up_left(w, i, j));
}

template <class Arr>
void inv_c_inplace(Arr& w, int i, int j) {
  require_in(w, i, j, Errc::box_not_in_shape);
  inv_c_kernel(w, i, j, up_left(w, i, j));
}

template <class Arr>
void d_inplace(Arr& w, Box ij, Box kl) {
  require_distinct(ij, kl);
  require_in(w, ij.row, ij.col, Errc::box_not_in_shape);
  require_in(w, kl.row, kl.col, Errc::missing_neighbor_box);
  auto H = down_right(w, ij.row, ij.col);
  d_kernel(w, ij, kl, up_left(w, ij.row, ij.col), H);
}

inline bool is_neighbor(Box a, Box b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

// The image of d only determines A and H when (k,l) is not one of the four
// neighbours of (i,j); every d occurring in a diagonal map satisfies this.
template <class Arr>
void inv_d_inplace(Arr& w, Box ij, Box kl) {
  require_distinct(ij, kl);
  if (is_neighbor(ij, kl))
    throw Error(Errc::neighbor_target, to_string(kl) + " is adjacent to " + to_string(ij));
  require_in(w, ij.row, ij.col, Errc::box_not_in_shape);
  require_in(w, kl.row, kl.col, Errc::missing_neighbor_box);
  auto H = down_right(w, ij.row, ij.col);
  inv_d_kernel(w, ij, kl, up_left(w, ij.row, ij.col), H);
}

template <class Arr>
void e_inplace(Arr& w, Box ij, Box kl) {
  require_distinct(ij, kl);
  std::swap(w.at(ij), w.at(kl));
}

template <class T>
void require_geometric() {
  if constexpr (!semiring<T>::geometric)
    throw Error(Errc::tropical_domain_unsupported, "symmetric maps are geometric only");
}

// Symmetric variants on the upper part. Diagonal boxes use A = 2 w_{i-1,i}
// and H = w_{i,i+1} / 2; off-diagonal boxes use the ordinary maps.
template <class T>
void c_up_inplace(UpperArray<T>& w, int i, int j) {
  require_geometric<T>();
  if (i != j) return c_inplace(w, i, j);
  require_in(w, i, i, Errc::missing_neighbor_box);
  const T x = w.get_with_boundary(i - 1, i);
  c_kernel(w, i, i, oplus(x, x));
}

template <class T>
void inv_c_up_inplace(UpperArray<T>& w, int i, int j) {
  require_geometric<T>();
  if (i != j) return inv_c_inplace(w, i, j);
  require_in(w, i, i, Errc::missing_neighbor_box);
  const T x = w.get_with_boundary(i - 1, i);
  inv_c_kernel(w, i, i, oplus(x, x));
}

template <class T>
void d_up_inplace(UpperArray<T>& w, Box ij, Box kl) {
  require_geometric<T>();
  if (ij.row != ij.col) return d_inplace(w, ij, kl);
  require_distinct(ij, kl);
  const int i = ij.row;
  require_in(w, i, i + 1, Errc::missing_neighbor_box);
  require_in(w, kl.row, kl.col, Errc::missing_neighbor_box);
  const T x = w.get_with_boundary(i - 1, i);
  const T y = w.at(i, i + 1);
  d_kernel(w, ij, kl, oplus(x, x), hsum(y, y));
}

template <class T>
void inv_d_up_inplace(UpperArray<T>& w, Box ij, Box kl) {
  require_geometric<T>();
  if (ij.row != ij.col) return inv_d_inplace(w, ij, kl);
  require_distinct(ij, kl);
  if (is_neighbor(ij, kl))
    throw Error(Errc::neighbor_target, to_string(kl) + " is adjacent to " + to_string(ij));
  const int i = ij.row;
  require_in(w, i, i + 1, Errc::missing_neighbor_box);
  require_in(w, kl.row, kl.col, Errc::missing_neighbor_box);
  const T x = w.get_with_boundary(i - 1, i);
  const T y = w.at(i, i + 1);
  inv_d_kernel(w, ij, kl, oplus(x, x), hsum(y, y));
}

}  // namespace detail

// Value-returning public forms: each takes a copy and returns the image.

template <class T>
ShapedArray<T> apply_a(ShapedArray<T> w, int i, int j) {
  detail::a_inplace(w, i, j);
  return w;
}

template <class T>
ShapedArray<T> apply_b(ShapedArray<T> w, int i, int j) {
  detail::b_inplace(w, i, j);
  return w;
}

template <class T>
ShapedArray<T> apply_c(ShapedArray<T> w, int i, int j) {
  detail::c_inplace(w, i, j);
  return w;
}

template <class T>
ShapedArray<T> apply_d(ShapedArray<T> w, Box ij, Box kl) {
  detail::d_inplace(w, ij, kl);
  return w;
}

template <class T>
ShapedArray<T> apply_e(ShapedArray<T> w, Box ij, Box kl) {
  detail::e_inplace(w, ij, kl);
  return w;
}

template <class T>
ShapedArray<T> inv_c(ShapedArray<T> w, int i, int j) {
  detail::inv_c_inplace(w, i, j);
  return w;
}

template <class T>
ShapedArray<T> inv_d(ShapedArray<T> w, Box ij, Box kl) {
  detail::inv_d_inplace(w, ij, kl);
  return w;
}

template <class T>
UpperArray<T> apply_c_up(UpperArray<T> w, int i) {
  detail::c_up_inplace(w, i, i);
  return w;
}

template <class T>
UpperArray<T> apply_d_up(UpperArray<T> w, int i, int k) {
  detail::d_up_inplace(w, Box{i, i}, Box{k, k});
  return w;
}

}  // namespace burge
