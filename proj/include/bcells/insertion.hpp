#pragma once

// Rank-r domino insertion w -> (P_r(w), Q_r(w)), its inverse, the bitableau
// model for large rank, and the split rank of an element.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcells/shapes.hpp"
#include "bcells/signed_permutation.hpp"
#include "bcells/tableau.hpp"

namespace bcells {

/// Tableaux after k insertion steps. `pair.left` carries the labels
/// |w(1)|, ..., |w(k)|; `pair.right` carries 1..k.
struct InsertionState {
  int step = 0;
  TableauPair pair;
};

namespace detail {

// Dense occupancy grid over a bounded quadrant.
class Occupancy {
 public:
  explicit Occupancy(int dim) : dim_(dim), cells_(static_cast<std::size_t>(dim) * dim, 0) {}

  bool has(const Square& s) const {
    return s.row >= 1 && s.col >= 1 && s.row <= dim_ && s.col <= dim_ && cells_[index(s)];
  }
  void set(const Square& s, bool value = true) {
    if (s.row < 1 || s.col < 1 || s.row > dim_ || s.col > dim_) throw std::logic_error("square outside work area");
    cells_[index(s)] = value;
  }
  void add(const Domino& d) {
    if (has(d.first) || has(d.second)) throw std::logic_error("domino placed on an occupied square");
    set(d.first);
    set(d.second);
  }
  int row_length(int i) const {
    int j = 0;
    while (has({i, j + 1})) ++j;
    return j;
  }
  int column_height(int j) const {
    int i = 0;
    while (has({i + 1, j})) ++i;
    return i;
  }
  void add_core(int r) {
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r + 1 - i; ++j) set({i, j});
  }

 private:
  std::size_t index(const Square& s) const { return static_cast<std::size_t>(s.row - 1) * dim_ + (s.col - 1); }
  int dim_;
  std::vector<char> cells_;
};

inline int work_dim(int r, int n) { return r + 2 * n + 4; }

using Positions = std::vector<std::optional<Domino>>;  // indexed by label

inline DominoTableau tableau_from_positions(int r, const Positions& pos) {
  std::map<Square, int> cells;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r + 1 - i; ++j) cells[{i, j}] = 0;
  for (std::size_t k = 1; k < pos.size(); ++k) {
    if (!pos[k]) continue;
    cells[pos[k]->first] = static_cast<int>(k);
    cells[pos[k]->second] = static_cast<int>(k);
  }
  return assemble_tableau(r, cells);
}

inline void positions_from_tableau(const DominoTableau& t, Positions& pos) {
  pos.assign(static_cast<std::size_t>(t.max_label()) + 1, std::nullopt);
  for (int k : t.labels()) pos[k] = t.domino(k);
}

// One insertion step of the entry `value` into the positions of P.
// Returns the two squares added to the diagram.
inline Domino insert_step(int r, int n, Positions& pos, int value) {
  const int x = std::abs(value);
  Occupancy u(work_dim(r, n));
  u.add_core(r);
  Occupancy before(work_dim(r, n));
  before.add_core(r);
  for (std::size_t l = 1; l < pos.size(); ++l) {
    if (!pos[l]) continue;
    before.add(*pos[l]);
    if (static_cast<int>(l) < x) u.add(*pos[l]);
  }
  if (static_cast<int>(pos.size()) <= x) pos.resize(static_cast<std::size_t>(x) + 1);
  if (pos[x]) throw std::logic_error("label inserted twice");

  Domino placed;
  if (value > 0) {
    const int len = u.row_length(1);
    placed = {{1, len + 1}, {1, len + 2}};
  } else {
    const int h = u.column_height(1);
    placed = {{h + 1, 1}, {h + 2, 1}};
  }
  Positions next = pos;
  next[x] = placed;
  u.add(placed);

  for (std::size_t l = static_cast<std::size_t>(x) + 1; l < pos.size(); ++l) {
    if (!pos[l]) continue;
    const Domino d = *pos[l];
    const bool c1 = u.has(d.first), c2 = u.has(d.second);
    Domino moved = d;
    if (c1 && c2) {
      // Fully covered: bump to the next row (horizontal) or column (vertical).
      if (d.vertical()) {
        const int col = d.first.col + 1;
        const int h = u.column_height(col);
        moved = {{h + 1, col}, {h + 2, col}};
      } else {
        const int row = d.first.row + 1;
        const int len = u.row_length(row);
        moved = {{row, len + 1}, {row, len + 2}};
      }
    } else if (c1) {
      // Covered in its top/left square: rotate about the free square.
      const Square f = d.second;
      moved = d.vertical() ? Domino{f, {f.row, f.col + 1}} : Domino{f, {f.row + 1, f.col}};
    } else if (c2) {
      throw std::logic_error("insertion reached an impossible overlap");
    }
    next[l] = moved;
    u.add(moved);
  }

  std::vector<Square> added;
  for (std::size_t l = 1; l < next.size(); ++l) {
    if (!next[l]) continue;
    for (const Square& s : {next[l]->first, next[l]->second})
      if (!before.has(s)) added.push_back(s);
  }
  if (added.size() != 2) throw std::logic_error("insertion step did not add exactly one domino");
  pos = std::move(next);
  return make_domino(added[0], added[1]);
}

}  // namespace detail

/// Insertion states for k = 0..n (state 0 is the bare core).
inline std::vector<InsertionState> insertion_states(const SignedPermutation& w, int r) {
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  const int n = w.size();
  std::vector<InsertionState> states;
  states.push_back({0, {DominoTableau::core_only(r), DominoTableau::core_only(r)}});
  detail::Positions p(static_cast<std::size_t>(n) + 1), q(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    q[k] = detail::insert_step(r, n, p, w(k));
    states.push_back({k, {detail::tableau_from_positions(r, p), detail::tableau_from_positions(r, q)}});
  }
  return states;
}

inline TableauPair insert(const SignedPermutation& w, int r) {
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  const int n = w.size();
  detail::Positions p(static_cast<std::size_t>(n) + 1), q(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) q[k] = detail::insert_step(r, n, p, w(k));
  return {detail::tableau_from_positions(r, p), detail::tableau_from_positions(r, q)};
}

/// Inverse of `insert`: recovers w from a same-shape pair of standard domino
/// tableaux of equal rank.
inline SignedPermutation uninsert(const TableauPair& pair) {
  const DominoTableau& P = pair.left;
  const DominoTableau& Q = pair.right;
  if (P.rank() != Q.rank()) throw std::invalid_argument("uninsert: tableaux have different ranks");
  if (!(P.shape() == Q.shape())) throw std::invalid_argument("uninsert: tableaux have different shapes");
  if (auto v = validate(P); !v) throw std::invalid_argument("uninsert: left tableau invalid: " + v.message);
  if (auto v = validate(Q); !v) throw std::invalid_argument("uninsert: right tableau invalid: " + v.message);
  const int r = P.rank();
  const int n = Q.num_dominos();
  if (P.num_dominos() != n) throw std::invalid_argument("uninsert: tableaux have different sizes");

  detail::Positions pos;
  detail::positions_from_tableau(P, pos);
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    const Domino qd = Q.domino(k);
    std::vector<Square> excess{qd.first, qd.second};
    auto in_excess = [&](const Square& s) { return std::find(excess.begin(), excess.end(), s) != excess.end(); };
    auto replace = [&](const Square& out, const Square& in) {
      *std::find(excess.begin(), excess.end(), out) = in;
    };
    detail::Positions prev = pos;
    int found = 0;
    for (int j = static_cast<int>(pos.size()) - 1; j >= 1 && !found; --j) {
      if (!pos[j]) continue;
      const Domino moved = *pos[j];
      const int overlap = (in_excess(moved.first) ? 1 : 0) + (in_excess(moved.second) ? 1 : 0);
      if (overlap == 0) continue;
      if (overlap == 2) {
        if ((!moved.vertical() && moved.first.row == 1) || (moved.vertical() && moved.first.col == 1)) {
          found = moved.vertical() ? -j : j;
          prev[j] = std::nullopt;
          break;
        }
        // Undo a bump: the domino came from the end of the previous row/column
        // of the diagram held by labels <= j before this step.
        detail::Occupancy v(detail::work_dim(r, n));
        v.add_core(r);
        for (int l = 1; l <= j; ++l)
          if (pos[l]) v.add(*pos[l]);
        for (const Square& s : excess) v.set(s, false);
        Domino orig;
        if (moved.vertical()) {
          const int col = moved.first.col - 1;
          const int h = v.column_height(col);
          orig = {{h - 1, col}, {h, col}};
        } else {
          const int row = moved.first.row - 1;
          const int len = v.row_length(row);
          orig = {{row, len - 1}, {row, len}};
        }
        prev[j] = orig;
        excess = {orig.first, orig.second};
      } else {
        Domino orig;
        if (moved.vertical() && in_excess(moved.second)) {
          orig = {{moved.first.row, moved.first.col - 1}, moved.first};
          replace(moved.second, orig.first);
        } else if (!moved.vertical() && in_excess(moved.second)) {
          orig = {{moved.first.row - 1, moved.first.col}, moved.first};
          replace(moved.second, orig.first);
        } else {
          throw std::invalid_argument("uninsert: pair is not in the image of insertion");
        }
        prev[j] = orig;
      }
    }
    if (!found) throw std::invalid_argument("uninsert: could not locate the inserted domino");
    w[static_cast<std::size_t>(k - 1)] = found;
    pos = std::move(prev);
  }
  return SignedPermutation(std::move(w));
}

namespace detail {

// Robinson-Schensted row insertion; returns (insertion, recording) rows.
inline std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> robinson_schensted(
    const std::vector<std::pair<int, int>>& word) {  // (value, recording label)
  std::vector<std::vector<int>> p, q;
  for (const auto& [value, label] : word) {
    int x = value;
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({label});
        break;
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
      if (it == p[row].end()) {
        p[row].push_back(x);
        q[row].push_back(label);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {p, q};
}

}  // namespace detail

/// Independent bitableau construction valid for r >= n - 1: ordinary
/// Robinson-Schensted on the positive entries (laid out as rows of horizontal
/// dominos) and on the absolute values of the negative entries (laid out as
/// columns of vertical dominos). r < 0 selects r = max(n - 1, 0).
inline TableauPair asymptotic_bitableaux(const SignedPermutation& w, int r = -1) {
  const int n = w.size();
  if (r < 0) r = std::max(n - 1, 0);
  if (r < n - 1) throw std::invalid_argument("bitableau model needs rank >= n - 1");
  std::vector<std::pair<int, int>> pos_word, neg_word;
  for (int k = 1; k <= n; ++k) {
    if (w(k) > 0) {
      pos_word.emplace_back(w(k), k);
    } else {
      neg_word.emplace_back(-w(k), k);
    }
  }
  const auto [hp, hq] = detail::robinson_schensted(pos_word);
  const auto [vp, vq] = detail::robinson_schensted(neg_word);

  auto build = [&](const std::vector<std::vector<int>>& horiz, const std::vector<std::vector<int>>& vert) {
    std::map<Square, int> cells;
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r + 1 - i; ++j) cells[{i, j}] = 0;
    for (std::size_t i = 0; i < horiz.size(); ++i) {
      const int row = static_cast<int>(i) + 1;
      const int start = std::max(r + 1 - row, 0);
      for (std::size_t m = 0; m < horiz[i].size(); ++m) {
        const int c = start + 2 * static_cast<int>(m) + 1;
        cells[{row, c}] = horiz[i][m];
        cells[{row, c + 1}] = horiz[i][m];
      }
    }
    for (std::size_t i = 0; i < vert.size(); ++i) {
      const int col = static_cast<int>(i) + 1;
      const int start = std::max(r + 1 - col, 0);
      for (std::size_t m = 0; m < vert[i].size(); ++m) {
        const int rr = start + 2 * static_cast<int>(m) + 1;
        if (cells.count({rr, col}) || cells.count({rr + 1, col})) throw std::logic_error("bitableau halves overlap");
        cells[{rr, col}] = vert[i][m];
        cells[{rr + 1, col}] = vert[i][m];
      }
    }
    return assemble_tableau(r, cells);
  };
  return {build(hp, vp), build(hq, vq)};
}

/// Smallest r for which G_r(w) is split; always at most n - 1.
inline int split_rank(const SignedPermutation& w) {
  const int n = w.size();
  for (int r = 0; r < std::max(n - 1, 0); ++r) {
    if (is_split(insert(w, r))) return r;
  }
  return std::max(n - 1, 0);
}

}  // namespace bcells
