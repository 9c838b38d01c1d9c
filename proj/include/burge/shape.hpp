#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace burge {

// 1-based (row, column) index of a box.
struct Box {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
};

std::string to_string(const Box& b);

// Young diagram given by its weakly decreasing, strictly positive parts.
// The empty shape is valid.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> parts);

  static Shape rectangle(int m, int n);
  static Shape staircase(int n);  // (n, n-1, ..., 1)

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  int cols() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int row_length(int i) const noexcept {
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  bool contains(Box b) const noexcept {
    return b.row >= 1 && b.col >= 1 && b.col <= row_length(b.row);
  }
  bool contains(int i, int j) const noexcept { return contains(Box{i, j}); }

  std::vector<Box> boxes() const;  // row-major

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::string to_string(const Shape& s);

bool contains(const Shape& shape, Box box);
bool is_border_box(const Shape& shape, Box box);
bool is_corner_box(const Shape& shape, Box box);
std::vector<Box> corner_boxes(const Shape& shape);
Shape remove_corner(const Shape& shape, Box box);

bool is_rectangular(const Shape& shape);
Shape conjugate(const Shape& shape);
bool is_self_conjugate(const Shape& shape);
std::vector<Box> upper_part(const Shape& shape);

// True iff the box set is a Young diagram (order ideal of the positive quadrant).
bool is_young_box_set(const std::vector<Box>& boxes);

struct GrowthSequence {
  std::vector<Box> boxes;
  friend bool operator==(const GrowthSequence&, const GrowthSequence&) = default;
};

GrowthSequence canonical_growth_sequence(const Shape& shape);
bool is_valid_growth_sequence(const Shape& shape, const GrowthSequence& seq);
void require_growth_sequence(const Shape& shape, const GrowthSequence& seq);

// Every growth sequence of the shape (standard Young tableaux); refuses more
// than `limit` sequences.
std::vector<GrowthSequence> all_growth_sequences(const Shape& shape,
                                                 std::size_t limit = 1000000);

// Uniform random choice among addable boxes at each step.
template <class Rng>
GrowthSequence random_growth_sequence(const Shape& shape, Rng& rng);

std::vector<Shape> partitions_of(int n);
std::vector<Shape> partitions_up_to(int n);  // sizes 1..n
std::vector<Shape> partitions_in_box(int rows, int cols);  // nonempty

// ---------------------------------------------------------------------------

template <class Rng>
GrowthSequence random_growth_sequence(const Shape& shape, Rng& rng) {
  std::vector<int> filled(shape.rows(), 0);
  GrowthSequence seq;
  seq.boxes.reserve(shape.size());
  std::vector<int> addable;
  for (int step = 0; step < shape.size(); ++step) {
    addable.clear();
    for (int i = 0; i < shape.rows(); ++i) {
      bool room = filled[i] < shape.parts()[i];
      bool above_ok = i == 0 || filled[i - 1] > filled[i];
      if (room && above_ok) addable.push_back(i);
    }
    int pick = addable[static_cast<std::size_t>(rng() % addable.size())];
    ++filled[pick];
    seq.boxes.push_back(Box{pick + 1, filled[pick]});
  }
  return seq;
}

}  // namespace burge
