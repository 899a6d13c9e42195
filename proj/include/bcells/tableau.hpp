#pragma once

// Standard domino tableaux of rank r stored as row-major label grids: 0 on
// core squares, each positive label on the two squares of one domino.

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcells/shapes.hpp"
#include "bcells/signed_permutation.hpp"

namespace bcells {

// Label reported for squares outside the diagram. Squares in row 0 or
// column 0 read as 0.
inline constexpr int kOutside = std::numeric_limits<int>::max();

class DominoTableau {
 public:
  DominoTableau() = default;

  DominoTableau(int rank, std::vector<std::vector<int>> rows) : rank_(rank), rows_(std::move(rows)) {
    if (rank_ < 0) throw std::invalid_argument("rank must be nonnegative");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].empty()) throw std::invalid_argument("tableau rows must be nonempty");
      if (i && rows_[i].size() > rows_[i - 1].size()) {
        throw std::invalid_argument("tableau row lengths must be weakly decreasing");
      }
      for (int v : rows_[i]) {
        if (v < 0) throw std::invalid_argument("tableau labels must be nonnegative");
      }
    }
    index_squares();
  }

  // The tableau holding only the staircase core of rank r.
  static DominoTableau core_only(int r) {
    std::vector<std::vector<int>> rows;
    for (int k = r; k >= 1; --k) rows.emplace_back(static_cast<std::size_t>(k), 0);
    return DominoTableau(r, std::move(rows));
  }

  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int row_length(int i) const { return i >= 1 && i <= num_rows() ? static_cast<int>(rows_[i - 1].size()) : 0; }

  Shape shape() const {
    std::vector<int> r;
    for (const auto& row : rows_) r.push_back(static_cast<int>(row.size()));
    return Shape(std::move(r));
  }

  bool contains(const Square& s) const { return s.row >= 1 && s.col >= 1 && s.col <= row_length(s.row); }

  int at(int i, int j) const {
    if (i < 1 || j < 1) return 0;
    if (j > row_length(i)) return kOutside;
    return rows_[i - 1][j - 1];
  }
  int at(const Square& s) const { return at(s.row, s.col); }

  // Positive labels in increasing order.
  const std::vector<int>& labels() const { return labels_; }
  int num_dominos() const { return static_cast<int>(labels_.size()); }
  int max_label() const { return labels_.empty() ? 0 : labels_.back(); }
  bool has_label(int k) const { return k >= 1 && k < static_cast<int>(squares_.size()) && !squares_[k].empty(); }

  // D(k, T).
  Domino domino(int k) const {
    if (!has_label(k)) throw std::out_of_range("label " + std::to_string(k) + " not in tableau");
    const auto& sq = squares_[k];
    if (sq.size() != 2) throw std::logic_error("label " + std::to_string(k) + " does not occupy two squares");
    return make_domino(sq[0], sq[1]);
  }
  const std::vector<Square>& squares_of(int k) const { return squares_.at(static_cast<std::size_t>(k)); }

  std::vector<Square> zero_squares() const {
    std::vector<Square> out;
    for (int i = 1; i <= num_rows(); ++i)
      for (int j = 1; j <= row_length(i); ++j)
        if (at(i, j) == 0) out.push_back({i, j});
    return out;
  }

  // Compact fingerprint usable as a map key.
  std::string key() const {
    std::string out = std::to_string(rank_) + ":";
    for (const auto& row : rows_) {
      for (int v : row) {
        out += std::to_string(v);
        out += ',';
      }
      out += '/';
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "r" + std::to_string(rank_) + " [";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) out += ",";
      out += "[";
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j) out += ",";
        out += std::to_string(rows_[i][j]);
      }
      out += "]";
    }
    return out + "]";
  }

  friend bool operator==(const DominoTableau& a, const DominoTableau& b) {
    return a.rank_ == b.rank_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const DominoTableau& a, const DominoTableau& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    return a.rows_ < b.rows_;
  }

 private:
  void index_squares() {
    int maxl = 0;
    for (const auto& row : rows_)
      for (int v : row) maxl = std::max(maxl, v);
    squares_.assign(static_cast<std::size_t>(maxl) + 1, {});
    for (int i = 1; i <= num_rows(); ++i)
      for (int j = 1; j <= row_length(i); ++j) {
        const int v = rows_[i - 1][j - 1];
        if (v > 0) squares_[v].push_back({i, j});
      }
    labels_.clear();
    for (int k = 1; k <= maxl; ++k)
      if (!squares_[k].empty()) labels_.push_back(k);
  }

  int rank_ = 0;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<Square>> squares_;
  std::vector<int> labels_;
};

/// Builds a tableau from labelled squares. Throws std::logic_error when the
/// squares do not form a Young diagram.
inline DominoTableau assemble_tableau(int rank, const std::map<Square, int>& cells) {
  std::vector<std::vector<int>> rows;
  for (const auto& [s, label] : cells) {
    if (s.row < 1 || s.col < 1) throw std::logic_error("square outside the quadrant");
    if (static_cast<int>(rows.size()) < s.row) rows.resize(static_cast<std::size_t>(s.row));
    auto& row = rows[s.row - 1];
    if (static_cast<int>(row.size()) != s.col - 1) {
      throw std::logic_error("squares do not form a diagram near (" + std::to_string(s.row) + "," +
                             std::to_string(s.col) + ")");
    }
    row.push_back(label);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty() || (i && rows[i].size() > rows[i - 1].size())) {
      throw std::logic_error("squares do not form a diagram at row " + std::to_string(i + 1));
    }
  }
  return DominoTableau(rank, std::move(rows));
}

struct TableauPair {
  DominoTableau left;
  DominoTableau right;

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
  friend bool operator<(const TableauPair& a, const TableauPair& b) {
    if (a.left == b.left) return a.right < b.right;
    return a.left < b.left;
  }
};

struct Validation {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

namespace detail {
inline Validation fail(std::string msg) { return {false, std::move(msg)}; }
inline std::string sq(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
}  // namespace detail

/// Checks the tableau invariants and reports the first violation.
/// With `staircase_core` unset, any Young-diagram 0-region is accepted; such
/// tableaux arise from moving through a proper subset of core cycles.
inline Validation validate(const DominoTableau& t, bool staircase_core = true) {
  // 0-region.
  const Shape core = Shape::staircase(t.rank());
  for (int i = 1; i <= t.num_rows(); ++i) {
    for (int j = 1; j <= t.row_length(i); ++j) {
      const bool zero = t.at(i, j) == 0;
      if (staircase_core && zero != core.contains(Square{i, j})) {
        return detail::fail("core mismatch at " + detail::sq(i, j) + ": expected staircase of rank " +
                            std::to_string(t.rank()));
      }
    }
  }
  if (staircase_core && !t.shape().contains(core)) return detail::fail("diagram does not contain the rank core");

  // Each label occupies a domino; labels are exactly 1..n.
  const auto& labels = t.labels();
  for (std::size_t idx = 0; idx < labels.size(); ++idx) {
    const int k = labels[idx];
    if (k != static_cast<int>(idx) + 1) return detail::fail("labels are not 1..n: missing " + std::to_string(idx + 1));
    const auto& sq = t.squares_of(k);
    if (sq.size() != 2) {
      return detail::fail("label " + std::to_string(k) + " occupies " + std::to_string(sq.size()) + " squares, first at " +
                          detail::sq(sq[0].row, sq[0].col));
    }
    const bool adjacent = (sq[0].row == sq[1].row && std::abs(sq[0].col - sq[1].col) == 1) ||
                          (sq[0].col == sq[1].col && std::abs(sq[0].row - sq[1].row) == 1);
    if (!adjacent) {
      return detail::fail("label " + std::to_string(k) + " squares " + detail::sq(sq[0].row, sq[0].col) + " and " +
                          detail::sq(sq[1].row, sq[1].col) + " are not adjacent");
    }
  }

  // Monotone along rows and columns; equal neighbours belong to one domino.
  for (int i = 1; i <= t.num_rows(); ++i) {
    for (int j = 1; j <= t.row_length(i); ++j) {
      const int v = t.at(i, j);
      if (j < t.row_length(i) && v > t.at(i, j + 1)) {
        return detail::fail("row decreases at " + detail::sq(i, j));
      }
      if (t.contains({i + 1, j}) && v > t.at(i + 1, j)) {
        return detail::fail("column decreases at " + detail::sq(i, j));
      }
    }
  }

  // 0-region must itself be a diagram.
  if (!staircase_core) {
    for (int i = 1; i <= t.num_rows(); ++i)
      for (int j = 1; j <= t.row_length(i); ++j)
        if (t.at(i, j) == 0 && (t.at(i - 1, j) != 0 || t.at(i, j - 1) != 0)) {
          return detail::fail("0-region is not a diagram at " + detail::sq(i, j));
        }
  } else if (two_core(t.shape()).second != t.rank()) {
    return detail::fail("diagram is not of rank " + std::to_string(t.rank()));
  }
  return {};
}

// The subtableau holding the core and labels 1..m.
inline DominoTableau restrict_labels(const DominoTableau& t, int m) {
  std::map<Square, int> cells;
  for (int i = 1; i <= t.num_rows(); ++i)
    for (int j = 1; j <= t.row_length(i); ++j)
      if (t.at(i, j) <= m) cells[{i, j}] = t.at(i, j);
  return assemble_tableau(t.rank(), cells);
}

// Some square of the diagonal i + j = r + 3 lies outside the diagram.
inline bool is_split(const DominoTableau& t) {
  for (const Square& s : diagonal(t.rank() + 2)) {
    if (!t.contains(s)) return true;
  }
  return false;
}

inline bool is_split(const TableauPair& p) { return is_split(p.left) && is_split(p.right); }

namespace detail {
inline bool strictly_above(const Domino& a, const Domino& b) {
  return std::max(a.first.row, a.second.row) < std::min(b.first.row, b.second.row);
}
}  // namespace detail

// s_i when D(i) lies strictly above D(i+1); t when D(1) is vertical.
inline DescentSet tau_of_tableau(const DominoTableau& q) {
  DescentSet d;
  const int n = q.num_dominos();
  if (n == 0) return d;
  if (q.domino(1).vertical()) d.simple.insert(0);
  for (int i = 1; i < n; ++i) {
    if (detail::strictly_above(q.domino(i), q.domino(i + 1))) d.simple.insert(i);
  }
  return d;
}

// Adds t_j (2 <= j <= r + 1, j - 1 < ratio) when D(j) is vertical. Defined
// only for rank >= ratio - 1.
inline DescentSet enhanced_tau_of_tableau(const DominoTableau& q, int ratio) {
  if (ratio < 1) throw std::invalid_argument("weight ratio must be a positive integer");
  if (q.rank() < ratio - 1) {
    throw std::domain_error("tableau rank " + std::to_string(q.rank()) + " is too small for weight ratio " +
                            std::to_string(ratio));
  }
  DescentSet d = tau_of_tableau(q);
  const int n = q.num_dominos();
  for (int j = 2; j <= n && j <= q.rank() + 1 && j - 1 < ratio; ++j) {
    if (q.domino(j).vertical()) d.extended.insert(j);
  }
  return d;
}

/// Terminal rendering with box-drawing characters; core squares show a dot
/// and each domino shows its label once.
inline std::string to_box_string(const DominoTableau& t) {
  const int R = t.num_rows();
  const int C = R ? t.row_length(1) : 0;
  if (R == 0) return "(empty)\n";
  auto same_piece = [&](Square a, Square b) {
    if (!t.contains(a) || !t.contains(b)) return false;
    const int la = t.at(a), lb = t.at(b);
    return la > 0 && la == lb;
  };
  // Border segment between two horizontally/vertically adjacent cells.
  auto hseg = [&](int i, int j) {  // below cell (i, j): between (i,j) and (i+1,j)
    const Square a{i, j}, b{i + 1, j};
    if (!t.contains(a) && !t.contains(b)) return false;
    return !same_piece(a, b);
  };
  auto vseg = [&](int i, int j) {  // right of cell (i, j)
    const Square a{i, j}, b{i, j + 1};
    if (!t.contains(a) && !t.contains(b)) return false;
    return !same_piece(a, b);
  };
  static const char* glyph[16] = {" ", "╴", "╶", "─", "╵", "┘", "└", "┴", "╷", "┐", "┌", "┬", "│", "┤", "├", "┼"};
  std::string out;
  for (int y = 0; y <= 2 * R; ++y) {
    std::string line;
    for (int x = 0; x <= 4 * C; ++x) {
      const bool border_row = y % 2 == 0;
      const bool border_col = x % 4 == 0;
      const int i = y / 2;      // border rows: below row i
      const int j = x / 4;      // border cols: right of column j
      if (border_row && border_col) {
        const bool left = j >= 1 && hseg(i, j);
        const bool right = j < C && hseg(i, j + 1);
        const bool up = i >= 1 && vseg(i, j);
        const bool down = i < R && vseg(i + 1, j);
        line += glyph[(left ? 1 : 0) | (right ? 2 : 0) | (up ? 4 : 0) | (down ? 8 : 0)];
      } else if (border_row) {
        line += hseg(i, j + 1) ? "─" : " ";
      } else if (border_col) {
        line += vseg(i + 1, j) ? "│" : " ";
      } else {
        const Square s{i + 1, j + 1};
        const int off = x % 4;
        if (!t.contains(s)) {
          line += " ";
        } else if (t.at(s) == 0) {
          line += off == 2 ? "·" : " ";
        } else {
          const int k = t.at(s);
          const bool first = t.domino(k).first == s;
          const std::string lab = first ? std::to_string(k) : "";
          const std::string cell = lab.size() >= 3 ? lab.substr(0, 3) : (lab.size() == 2 ? " " + lab : " " + lab + " ");
          line += off - 1 < static_cast<int>(cell.size()) ? std::string(1, cell[off - 1]) : " ";
        }
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace bcells
