#pragma once

#include <utility>
#include <vector>

#include "burge/errors.hpp"
#include "burge/scalar.hpp"
#include "burge/shape.hpp"

namespace burge {

// Values on the boxes of a Young diagram, stored row-major. Boundary values
// (row 0 or column 0) are synthesized on access.
template <class T>
class ShapedArray {
 public:
  using value_type = T;

  ShapedArray() = default;
  explicit ShapedArray(Shape shape, const T& fill = one<T>())
      : shape_(std::move(shape)), data_(shape_.size(), fill) {
    build_offsets();
  }
  ShapedArray(Shape shape, const std::vector<std::vector<T>>& rows) : shape_(std::move(shape)) {
    build_offsets();
    if (static_cast<int>(rows.size()) != shape_.rows())
      throw Error(Errc::invalid_shape, "row count does not match shape");
    data_.reserve(shape_.size());
    for (int i = 0; i < shape_.rows(); ++i) {
      if (static_cast<int>(rows[i].size()) != shape_.parts()[i])
        throw Error(Errc::invalid_shape, "row " + std::to_string(i + 1) + " length does not match shape");
      for (const T& x : rows[i]) {
        if (semiring<T>::geometric && !semiring<T>::is_positive(x))
          throw Error(Errc::nonpositive_entry, "geometric entries must be positive");
        data_.push_back(x);
      }
    }
  }
  // Rectangular convenience constructor.
  explicit ShapedArray(const std::vector<std::vector<T>>& rows)
      : ShapedArray(shape_of_rows(rows), rows) {}

  const Shape& shape() const noexcept { return shape_; }
  int rows() const noexcept { return shape_.rows(); }
  int size() const noexcept { return shape_.size(); }

  const T& at(int i, int j) const { return data_[index(i, j)]; }
  T& at(int i, int j) { return data_[index(i, j)]; }
  const T& at(Box b) const { return at(b.row, b.col); }
  T& at(Box b) { return at(b.row, b.col); }
  const T& operator()(int i, int j) const { return at(i, j); }
  T& operator()(int i, int j) { return at(i, j); }

  T get_with_boundary(int i, int j) const {
    if (i >= 1 && j >= 1) {
      if (!shape_.contains(i, j))
        throw Error(Errc::index_outside_shape_and_boundary, to_string(Box{i, j}));
      return data_[offset_[i - 1] + j - 1];
    }
    if (i < 0 || j < 0)
      throw Error(Errc::index_outside_shape_and_boundary, to_string(Box{i, j}));
    if ((i == 0 && j == 1) || (i == 1 && j == 0)) return boundary_corner<T>();
    return boundary_zero<T>();
  }

  std::vector<T> row(int i) const {
    return {data_.begin() + offset_[i - 1], data_.begin() + offset_[i - 1] + shape_.row_length(i)};
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (int i = 1; i <= rows(); ++i) out.push_back(row(i));
    return out;
  }
  const std::vector<T>& data() const noexcept { return data_; }

  // Elementwise conversion, e.g. rational to double.
  template <class F>
  auto map(F f) const -> ShapedArray<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    ShapedArray<U> out(shape_, U{});
    for (const Box& b : shape_.boxes()) out.at(b) = f(at(b));
    return out;
  }

  friend bool operator==(const ShapedArray& a, const ShapedArray& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  static Shape shape_of_rows(const std::vector<std::vector<T>>& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Shape(parts);
  }
  void build_offsets() {
    offset_.assign(shape_.rows(), 0);
    int acc = 0;
    for (int i = 0; i < shape_.rows(); ++i) {
      offset_[i] = acc;
      acc += shape_.parts()[i];
    }
  }
  std::size_t index(int i, int j) const {
    if (!shape_.contains(i, j))
      throw Error(Errc::box_not_in_shape, to_string(Box{i, j}) + " not in " + to_string(shape_));
    return static_cast<std::size_t>(offset_[i - 1] + j - 1);
  }

  Shape shape_;
  std::vector<int> offset_;
  std::vector<T> data_;
};

// Entries on the boxes i <= j of a self-conjugate shape. Reads below the
// diagonal are mirrored, so formulas written for symmetric arrays apply.
template <class T>
class UpperArray {
 public:
  using value_type = T;

  UpperArray() = default;
  explicit UpperArray(Shape shape, const T& fill = one<T>()) : shape_(std::move(shape)) {
    if (!is_self_conjugate(shape_)) throw Error(Errc::not_self_conjugate, to_string(shape_));
    boxes_ = upper_part(shape_);
    data_.assign(boxes_.size(), fill);
  }

  const Shape& shape() const noexcept { return shape_; }
  const std::vector<Box>& boxes() const noexcept { return boxes_; }
  int size() const noexcept { return static_cast<int>(boxes_.size()); }

  const T& at(int i, int j) const { return data_[index(i, j)]; }
  T& at(int i, int j) { return data_[index(i, j)]; }
  const T& at(Box b) const { return at(b.row, b.col); }
  T& at(Box b) { return at(b.row, b.col); }

  T get_with_boundary(int i, int j) const {
    if (i >= 1 && j >= 1) {
      if (!shape_.contains(i, j))
        throw Error(Errc::index_outside_shape_and_boundary, to_string(Box{i, j}));
      return at(i, j);
    }
    if (i < 0 || j < 0)
      throw Error(Errc::index_outside_shape_and_boundary, to_string(Box{i, j}));
    if ((i == 0 && j == 1) || (i == 1 && j == 0)) return boundary_corner<T>();
    return boundary_zero<T>();
  }

  const std::vector<T>& data() const noexcept { return data_; }
  friend bool operator==(const UpperArray& a, const UpperArray& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (!shape_.contains(i, j))
      throw Error(Errc::box_not_in_shape, to_string(Box{i, j}) + " not in " + to_string(shape_));
    // row-major position within the upper part
    std::size_t pos = 0;
    for (int r = 1; r < i; ++r) pos += shape_.row_length(r) - r + 1;
    return pos + static_cast<std::size_t>(j - i);
  }

  Shape shape_;
  std::vector<Box> boxes_;
  std::vector<T> data_;
};

template <class T>
ShapedArray<T> transpose(const ShapedArray<T>& w) {
  ShapedArray<T> out(conjugate(w.shape()), w.data().empty() ? one<T>() : w.data().front());
  for (const Box& b : w.shape().boxes()) out.at(b.col, b.row) = w.at(b);
  return out;
}

inline void require_rectangular(const Shape& s) {
  if (!is_rectangular(s)) throw Error(Errc::non_rectangular_shape, to_string(s));
}

template <class T>
ShapedArray<T> reverse_rows(const ShapedArray<T>& w) {
  require_rectangular(w.shape());
  ShapedArray<T> out = w;
  const int m = w.rows();
  for (const Box& b : w.shape().boxes()) out.at(b) = w.at(m - b.row + 1, b.col);
  return out;
}

template <class T>
ShapedArray<T> reverse_cols(const ShapedArray<T>& w) {
  require_rectangular(w.shape());
  ShapedArray<T> out = w;
  const int n = w.shape().cols();
  for (const Box& b : w.shape().boxes()) out.at(b) = w.at(b.row, n - b.col + 1);
  return out;
}

// Trapezoidal halves of an m x n matrix t; both contain the diagonal through
// (m, n). lower[i-1][j-1] = u_{i,j} = t_{m-j+1, i-j+1} for 1 <= i <= n, j <= min(i, m);
// upper[i-1][j-1] = v_{i,j} = t_{i-j+1, n-j+1} for 1 <= i <= m, j <= min(i, n).
template <class T>
struct LowerUpperParts {
  int m = 0;
  int n = 0;
  std::vector<std::vector<T>> lower;
  std::vector<std::vector<T>> upper;
};

template <class T>
LowerUpperParts<T> split_parts(const ShapedArray<T>& t) {
  require_rectangular(t.shape());
  LowerUpperParts<T> p;
  p.m = t.rows();
  p.n = t.shape().cols();
  for (int i = 1; i <= p.n; ++i) {
    std::vector<T> row;
    for (int j = 1; j <= std::min(i, p.m); ++j) row.push_back(t.at(p.m - j + 1, i - j + 1));
    p.lower.push_back(std::move(row));
  }
  for (int i = 1; i <= p.m; ++i) {
    std::vector<T> row;
    for (int j = 1; j <= std::min(i, p.n); ++j) row.push_back(t.at(i - j + 1, p.n - j + 1));
    p.upper.push_back(std::move(row));
  }
  return p;
}

template <class T>
ShapedArray<T> glue_parts(const LowerUpperParts<T>& p) {
  ShapedArray<T> t(Shape::rectangle(p.m, p.n), one<T>());
  for (int i = 1; i <= p.n; ++i)
    for (int j = 1; j <= std::min(i, p.m); ++j) t.at(p.m - j + 1, i - j + 1) = p.lower[i - 1][j - 1];
  for (int i = 1; i <= p.m; ++i)
    for (int j = 1; j <= std::min(i, p.n); ++j) t.at(i - j + 1, p.n - j + 1) = p.upper[i - 1][j - 1];
  return t;
}

// Product of the entries with j - i = k.
template <class T>
T diagonal_product(const ShapedArray<T>& w, int k) {
  T acc = one<T>();
  bool any = false;
  for (const Box& b : w.shape().boxes()) {
    if (b.col - b.row == k) {
      acc = otimes(acc, w.at(b));
      any = true;
    }
  }
  if (!any) throw Error(Errc::empty_diagonal, "diagonal " + std::to_string(k));
  return acc;
}

template <class T>
bool is_symmetric(const ShapedArray<T>& w) {
  if (!is_self_conjugate(w.shape())) return false;
  for (const Box& b : w.shape().boxes())
    if (b.row < b.col && !(w.at(b) == w.at(b.col, b.row))) return false;
  return true;
}

template <class T>
ShapedArray<T> symmetrize(const UpperArray<T>& up) {
  ShapedArray<T> out(up.shape(), one<T>());
  for (const Box& b : up.shape().boxes()) out.at(b) = up.at(b);  // at() mirrors
  return out;
}

template <class T>
UpperArray<T> restrict_upper(const ShapedArray<T>& w) {
  UpperArray<T> up(w.shape(), one<T>());
  for (const Box& b : up.boxes()) up.at(b) = w.at(b);
  return up;
}

}  // namespace burge
