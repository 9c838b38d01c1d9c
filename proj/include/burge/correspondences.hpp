#pragma once

#include <optional>

#include "burge/local_maps.hpp"

namespace burge {

namespace detail {

// rho_{k,l} = a_{k-h+1,l-h+1} o ... o a_{k-1,l-1} o c_{k,l}, h = min(k,l).
template <class Arr>
void rho_inplace(Arr& w, int k, int l) {
  c_inplace(w, k, l);
  for (int s = 1; s < std::min(k, l); ++s) a_inplace(w, k - s, l - s);
}

template <class Arr>
void inv_rho_inplace(Arr& w, int k, int l) {
  for (int s = std::min(k, l) - 1; s >= 1; --s) a_inplace(w, k - s, l - s);
  inv_c_inplace(w, k, l);
}

template <class Arr>
void sigma_inplace(Arr& w, int k, int l) {
  b_inplace(w, k, l);
  for (int s = 1; s < std::min(k, l); ++s) a_inplace(w, k - s, l - s);
}

// tau_{k,l} = c_{k,l} o d^{k,l}_{k-1,l-1} o ... o d^{k,l}_{k-h+1,l-h+1}.
template <class Arr>
void tau_inplace(Arr& w, int k, int l) {
  for (int s = std::min(k, l) - 1; s >= 1; --s) d_inplace(w, Box{k - s, l - s}, Box{k, l});
  c_inplace(w, k, l);
}

template <class Arr>
void inv_tau_inplace(Arr& w, int k, int l) {
  inv_c_inplace(w, k, l);
  for (int s = 1; s < std::min(k, l); ++s) inv_d_inplace(w, Box{k - s, l - s}, Box{k, l});
}

template <class T>
void tau_up_inplace(UpperArray<T>& w, int k, int l) {
  for (int s = std::min(k, l) - 1; s >= 1; --s) d_up_inplace(w, Box{k - s, l - s}, Box{k, l});
  c_up_inplace(w, k, l);
}

template <class T>
void inv_tau_up_inplace(UpperArray<T>& w, int k, int l) {
  inv_c_up_inplace(w, k, l);
  for (int s = 1; s < std::min(k, l); ++s) inv_d_up_inplace(w, Box{k - s, l - s}, Box{k, l});
}

template <class T>
const GrowthSequence& order_or_canonical(const ShapedArray<T>& w, const std::optional<GrowthSequence>& order,
                                         GrowthSequence& storage) {
  if (order) {
    require_growth_sequence(w.shape(), *order);
    return *order;
  }
  storage = canonical_growth_sequence(w.shape());
  return storage;
}

// Schutzenberger involution on m x n: for g = n-1 down to 1, apply
// sigma_{m,1}, ..., sigma_{m,g}.
template <class T>
void schutz_inplace(ShapedArray<T>& w) {
  require_rectangular(w.shape());
  const int m = w.rows();
  const int n = w.shape().cols();
  for (int g = n - 1; g >= 1; --g)
    for (int l = 1; l <= g; ++l) sigma_inplace(w, m, l);
}

template <class T, class Choose>
void grsk_recursive_inplace(ShapedArray<T>& w, const Shape& shape, Choose& choose) {
  if (shape.empty()) return;
  const std::vector<Box> corners = corner_boxes(shape);
  const Box c = choose(corners);
  grsk_recursive_inplace(w, remove_corner(shape, c), choose);
  rho_inplace(w, c.row, c.col);
}

template <class T, class Choose>
void gburge_recursive_inplace(ShapedArray<T>& w, const Shape& shape, Choose& choose) {
  if (shape.empty()) return;
  const std::vector<Box> corners = corner_boxes(shape);
  const Box c = choose(corners);
  gburge_recursive_inplace(w, remove_corner(shape, c), choose);
  tau_inplace(w, c.row, c.col);
}

}  // namespace detail

template <class T>
ShapedArray<T> rho(ShapedArray<T> w, int k, int l) {
  detail::rho_inplace(w, k, l);
  return w;
}

template <class T>
ShapedArray<T> sigma(ShapedArray<T> w, int k, int l) {
  detail::sigma_inplace(w, k, l);
  return w;
}

template <class T>
ShapedArray<T> tau(ShapedArray<T> w, int k, int l) {
  detail::tau_inplace(w, k, l);
  return w;
}

template <class T>
UpperArray<T> tau_up(UpperArray<T> w, int k, int l) {
  detail::tau_up_inplace(w, k, l);
  return w;
}

template <class T>
ShapedArray<T> grsk(ShapedArray<T> w, const std::optional<GrowthSequence>& order = std::nullopt) {
  GrowthSequence storage;
  for (const Box& b : detail::order_or_canonical(w, order, storage).boxes) detail::rho_inplace(w, b.row, b.col);
  return w;
}

template <class T>
ShapedArray<T> gburge(ShapedArray<T> w, const std::optional<GrowthSequence>& order = std::nullopt) {
  GrowthSequence storage;
  for (const Box& b : detail::order_or_canonical(w, order, storage).boxes) detail::tau_inplace(w, b.row, b.col);
  return w;
}

template <class T>
ShapedArray<T> inv_grsk(ShapedArray<T> w, const std::optional<GrowthSequence>& order = std::nullopt) {
  GrowthSequence storage;
  const auto& seq = detail::order_or_canonical(w, order, storage).boxes;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) detail::inv_rho_inplace(w, it->row, it->col);
  return w;
}

template <class T>
ShapedArray<T> inv_gburge(ShapedArray<T> w, const std::optional<GrowthSequence>& order = std::nullopt) {
  GrowthSequence storage;
  const auto& seq = detail::order_or_canonical(w, order, storage).boxes;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) detail::inv_tau_inplace(w, it->row, it->col);
  return w;
}

// Recursive form K = rho_{c} o K^{shape minus c}; `choose` picks the corner
// box removed at each level.
template <class T, class Choose>
ShapedArray<T> grsk_recursive(ShapedArray<T> w, Choose choose) {
  const Shape s = w.shape();
  detail::grsk_recursive_inplace(w, s, choose);
  return w;
}

template <class T, class Choose>
ShapedArray<T> gburge_recursive(ShapedArray<T> w, Choose choose) {
  const Shape s = w.shape();
  detail::gburge_recursive_inplace(w, s, choose);
  return w;
}

template <class T>
ShapedArray<T> gschutz(ShapedArray<T> w) {
  detail::schutz_inplace(w);
  return w;
}

template <class T>
ShapedArray<T> gschutz_upper(const ShapedArray<T>& w) {
  return transpose(gschutz(transpose(w)));
}

// Upper boxes in row-major order; the symmetric closure of every prefix is a
// Young diagram.
inline GrowthSequence upper_growth_sequence(const Shape& shape) {
  return GrowthSequence{upper_part(shape)};
}

template <class T>
UpperArray<T> gburge_up(UpperArray<T> w) {
  for (const Box& b : upper_growth_sequence(w.shape()).boxes) detail::tau_up_inplace(w, b.row, b.col);
  return w;
}

template <class T>
UpperArray<T> inv_gburge_up(UpperArray<T> w) {
  const auto seq = upper_growth_sequence(w.shape()).boxes;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) detail::inv_tau_up_inplace(w, it->row, it->col);
  return w;
}

}  // namespace burge
