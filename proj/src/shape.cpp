#include "burge/shape.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "burge/errors.hpp"

namespace burge {

std::string to_string(const Box& b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw Error(Errc::invalid_shape, "parts must be strictly positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(Errc::invalid_shape, "parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Shape Shape::rectangle(int m, int n) {
  if (m < 0 || n < 0) throw Error(Errc::invalid_shape, "negative rectangle size");
  if (m == 0 || n == 0) return Shape{};
  return Shape(std::vector<int>(m, n));
}

Shape Shape::staircase(int n) {
  std::vector<int> parts;
  for (int k = n; k >= 1; --k) parts.push_back(k);
  return Shape(std::move(parts));
}

std::vector<Box> Shape::boxes() const {
  std::vector<Box> out;
  out.reserve(size_);
  for (int i = 1; i <= rows(); ++i)
    for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back(Box{i, j});
  return out;
}

std::string to_string(const Shape& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.parts()[i]);
  }
  return out + ")";
}

bool contains(const Shape& shape, Box box) { return shape.contains(box); }

static void require_box(const Shape& shape, Box box) {
  if (!shape.contains(box))
    throw Error(Errc::box_not_in_shape, to_string(box) + " not in " + to_string(shape));
}

bool is_border_box(const Shape& shape, Box box) {
  require_box(shape, box);
  return !shape.contains(box.row + 1, box.col + 1);
}

bool is_corner_box(const Shape& shape, Box box) {
  require_box(shape, box);
  return !shape.contains(box.row + 1, box.col) && !shape.contains(box.row, box.col + 1);
}

std::vector<Box> corner_boxes(const Shape& shape) {
  std::vector<Box> out;
  for (int i = 1; i <= shape.rows(); ++i) {
    Box b{i, shape.row_length(i)};
    if (is_corner_box(shape, b)) out.push_back(b);
  }
  return out;
}

Shape remove_corner(const Shape& shape, Box box) {
  if (!is_corner_box(shape, box))
    throw Error(Errc::box_not_in_shape, to_string(box) + " is not a corner box");
  std::vector<int> parts = shape.parts();
  --parts[box.row - 1];
  if (parts.back() == 0) parts.pop_back();
  return Shape(std::move(parts));
}

bool is_rectangular(const Shape& shape) {
  const auto& p = shape.parts();
  return std::all_of(p.begin(), p.end(), [&](int x) { return x == p.front(); });
}

Shape conjugate(const Shape& shape) {
  std::vector<int> parts;
  for (int j = 1; j <= shape.cols(); ++j) {
    int count = 0;
    while (count < shape.rows() && shape.parts()[count] >= j) ++count;
    parts.push_back(count);
  }
  return Shape(std::move(parts));
}

bool is_self_conjugate(const Shape& shape) { return conjugate(shape) == shape; }

std::vector<Box> upper_part(const Shape& shape) {
  if (!is_self_conjugate(shape))
    throw Error(Errc::not_self_conjugate, to_string(shape));
  std::vector<Box> out;
  for (const Box& b : shape.boxes())
    if (b.row <= b.col) out.push_back(b);
  return out;
}

bool is_young_box_set(const std::vector<Box>& boxes) {
  std::set<Box> set(boxes.begin(), boxes.end());
  if (set.size() != boxes.size()) return false;
  for (const Box& b : boxes) {
    if (b.row < 1 || b.col < 1) return false;
    if (b.row > 1 && !set.count(Box{b.row - 1, b.col})) return false;
    if (b.col > 1 && !set.count(Box{b.row, b.col - 1})) return false;
  }
  return true;
}

GrowthSequence canonical_growth_sequence(const Shape& shape) {
  return GrowthSequence{shape.boxes()};
}

bool is_valid_growth_sequence(const Shape& shape, const GrowthSequence& seq) {
  if (static_cast<int>(seq.boxes.size()) != shape.size()) return false;
  // Prefixes are Young diagrams iff each box's up and left neighbours were
  // added earlier.
  std::vector<int> filled(shape.rows() + 1, 0);
  for (const Box& b : seq.boxes) {
    if (!shape.contains(b)) return false;
    if (filled[b.row - 1] != b.col - 1) return false;       // left neighbour present, box new
    if (b.row > 1 && filled[b.row - 2] < b.col) return false;  // box above present
    filled[b.row - 1] = b.col;
  }
  return true;
}

void require_growth_sequence(const Shape& shape, const GrowthSequence& seq) {
  if (!is_valid_growth_sequence(shape, seq))
    throw Error(Errc::invalid_growth_sequence, "not a growth sequence of " + to_string(shape));
}

std::vector<GrowthSequence> all_growth_sequences(const Shape& shape, std::size_t limit) {
  std::vector<GrowthSequence> out;
  std::vector<int> filled(shape.rows(), 0);
  GrowthSequence current;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(current.boxes.size()) == shape.size()) {
      if (out.size() >= limit)
        throw Error(Errc::size_limit_exceeded, "too many growth sequences");
      out.push_back(current);
      return;
    }
    for (int i = 0; i < shape.rows(); ++i) {
      if (filled[i] < shape.parts()[i] && (i == 0 || filled[i - 1] > filled[i])) {
        ++filled[i];
        current.boxes.push_back(Box{i + 1, filled[i]});
        rec();
        current.boxes.pop_back();
        --filled[i];
      }
    }
  };
  rec();
  return out;
}

std::vector<Shape> partitions_of(int n) {
  std::vector<Shape> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  if (n == 0) return {Shape{}};
  rec(n, n);
  return out;
}

std::vector<Shape> partitions_up_to(int n) {
  std::vector<Shape> out;
  for (int k = 1; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Shape> partitions_in_box(int rows, int cols) {
  std::vector<Shape> out;
  for (const Shape& s : partitions_up_to(rows * cols))
    if (s.rows() <= rows && s.cols() <= cols) out.push_back(s);
  return out;
}

}  // namespace burge
