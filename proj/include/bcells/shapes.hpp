#pragma once

// Young diagrams, dominos, 2-cores and diagonals. Squares are 1-indexed.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcells {

struct Square {
  int row = 1;
  int col = 1;

  int diagonal() const { return row + col - 1; }

  friend bool operator==(const Square&, const Square&) = default;
  friend auto operator<=>(const Square&, const Square&) = default;
};

struct Domino {
  Square first;   // top or left square
  Square second;  // bottom or right square

  bool vertical() const { return first.col == second.col; }
  bool contains(const Square& s) const { return s == first || s == second; }

  friend bool operator==(const Domino&, const Domino&) = default;
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

inline Domino make_domino(Square a, Square b) {
  if (b < a) std::swap(a, b);
  const bool horizontal = a.row == b.row && b.col == a.col + 1;
  const bool vertical = a.col == b.col && b.row == a.row + 1;
  if (!horizontal && !vertical) throw std::invalid_argument("squares are not adjacent");
  return {a, b};
}

class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] <= 0) throw std::invalid_argument("shape rows must be positive");
      if (i && rows_[i] > rows_[i - 1]) throw std::invalid_argument("shape rows must be weakly decreasing");
    }
  }

  static Shape staircase(int r) {
    std::vector<int> rows;
    for (int k = r; k >= 1; --k) rows.push_back(k);
    return Shape(std::move(rows));
  }

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int row_length(int i) const { return i >= 1 && i <= num_rows() ? rows_[i - 1] : 0; }
  int column_height(int j) const {
    int h = 0;
    while (h < num_rows() && rows_[h] >= j) ++h;
    return h;
  }
  int size() const {
    int s = 0;
    for (int r : rows_) s += r;
    return s;
  }
  bool contains(const Square& s) const { return s.row >= 1 && s.col >= 1 && s.col <= row_length(s.row); }
  bool contains(const Shape& other) const {
    if (other.num_rows() > num_rows()) return false;
    for (int i = 1; i <= other.num_rows(); ++i) {
      if (other.row_length(i) > row_length(i)) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(rows_[i]);
    }
    return out + "]";
  }

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<int> rows_;
};

// Dominos whose deletion leaves a Young diagram (possibly empty).
inline std::vector<Domino> removable_dominos(const Shape& shape) {
  std::vector<Domino> out;
  const int m = shape.num_rows();
  for (int i = 1; i <= m; ++i) {
    const int len = shape.row_length(i);
    // Horizontal at the end of row i: the next row must not reach under it.
    if (len >= 2 && shape.row_length(i + 1) <= len - 2) {
      out.push_back({{i, len - 1}, {i, len}});
    }
    // Vertical at the end of rows i, i+1 in the same column.
    if (i + 1 <= m && shape.row_length(i + 1) == len && shape.row_length(i + 2) < len) {
      out.push_back({{i, len}, {i + 1, len}});
    }
  }
  return out;
}

inline Shape remove_domino(const Shape& shape, const Domino& d) {
  if (!shape.contains(d.second) || shape.row_length(d.second.row) != d.second.col ||
      shape.row_length(d.first.row) != d.first.col + (d.vertical() ? 0 : 1)) {
    throw std::invalid_argument("domino does not sit at the end of its rows");
  }
  std::vector<int> rows = shape.rows();
  --rows[d.first.row - 1];
  --rows[d.second.row - 1];
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Shape(std::move(rows));  // throws if the result is not a diagram
}

/// Staircase core reached by repeatedly deleting removable dominos, and its
/// rank r.
inline std::pair<Shape, int> two_core(const Shape& shape) {
  Shape cur = shape;
  for (;;) {
    auto doms = removable_dominos(cur);
    if (doms.empty()) break;
    cur = remove_domino(cur, doms.front());
  }
  const int r = cur.num_rows();
  if (!(cur == Shape::staircase(r))) throw std::logic_error("2-core is not a staircase: " + cur.to_string());
  return {cur, r};
}

inline int rank_of(const Shape& shape) { return two_core(shape).second; }

// Squares s_ij with i + j = k + 1, top row first.
inline std::vector<Square> diagonal(int k) {
  if (k < 1) throw std::invalid_argument("diagonal index must be positive");
  std::vector<Square> out;
  for (int i = 1; i <= k; ++i) out.push_back({i, k + 1 - i});
  return out;
}

}  // namespace bcells
