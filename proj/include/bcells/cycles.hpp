#pragma once

// Cycles of a domino tableau and moving through them.
//
// Every domino has one fixed and one variable square, chosen by the parity of
// i + j relative to the rank. Moving a single domino keeps its fixed square and
// swings the other square to a neighbouring position; cycles are the classes of
// labels chained together when a moved domino lands on another label's
// variable square.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcells/tableau.hpp"

namespace bcells {

enum class Convention { regular, opposite };

enum class CycleKind { closed, core_open, noncore_open };

inline const char* to_string(CycleKind k) {
  switch (k) {
    case CycleKind::closed: return "closed";
    case CycleKind::core_open: return "core-open";
    case CycleKind::noncore_open: return "noncore-open";
  }
  return "?";
}

struct Cycle {
  std::vector<int> labels;  // sorted
  CycleKind kind = CycleKind::closed;
  std::optional<Square> start;  // square vacated by an open cycle
  std::optional<Square> end;    // square newly covered by an open cycle

  bool open() const { return kind != CycleKind::closed; }
  bool core() const { return kind == CycleKind::core_open; }
  bool contains(int k) const { return std::binary_search(labels.begin(), labels.end(), k); }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(labels[i]);
    }
    return out + "}";
  }

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.labels == b.labels && a.kind == b.kind; }
};

using CycleSet = std::vector<Cycle>;

namespace detail {

// Fault injection for mutation testing: flips the comparison in the
// single-domino rule while a FaultGuard is alive.
inline bool& moving_fault() {
  thread_local bool flag = false;
  return flag;
}

inline bool is_fixed(const Square& s, int rank, Convention conv) {
  const bool parity_differs = (s.row + s.col) % 2 != rank % 2;
  return conv == Convention::regular ? parity_differs : !parity_differs;
}

struct SingleMove {
  Square fixed;
  Square variable;
  Square target;  // the new variable square
};

inline bool below_threshold(int value, int k) { return moving_fault() ? value > k : value < k; }

inline SingleMove single_move(const DominoTableau& t, int k, Convention conv) {
  const Domino d = t.domino(k);
  SingleMove m;
  if (is_fixed(d.first, t.rank(), conv)) {
    m.fixed = d.first;
    m.variable = d.second;
  } else {
    m.fixed = d.second;
    m.variable = d.first;
  }
  const int i = m.fixed.row;
  const int j = m.fixed.col;
  if (m.variable == Square{i + 1, j} || m.variable == Square{i, j - 1}) {
    m.target = below_threshold(t.at(i - 1, j + 1), k) ? Square{i, j + 1} : Square{i - 1, j};
  } else {
    m.target = below_threshold(t.at(i + 1, j - 1), k) ? Square{i + 1, j} : Square{i, j - 1};
  }
  return m;
}

// Squares above and to the left are 0 or off the quadrant.
inline bool joins_zero_region(const std::map<Square, int>& cells, const Square& s) {
  auto zero_or_edge = [&](const Square& q) {
    if (q.row < 1 || q.col < 1) return true;
    auto it = cells.find(q);
    return it != cells.end() && it->second == 0;
  };
  return zero_or_edge({s.row - 1, s.col}) && zero_or_edge({s.row, s.col - 1});
}

inline std::map<Square, int> cells_of(const DominoTableau& t) {
  std::map<Square, int> cells;
  for (int i = 1; i <= t.num_rows(); ++i)
    for (int j = 1; j <= t.row_length(i); ++j) cells[{i, j}] = t.at(i, j);
  return cells;
}

// Rank read off the 0-region when it is a staircase; otherwise `fallback`.
inline int zero_region_rank(const std::map<Square, int>& cells, int fallback) {
  std::vector<int> rows;
  for (const auto& [s, v] : cells) {
    if (v != 0) continue;
    if (static_cast<int>(rows.size()) < s.row) rows.resize(static_cast<std::size_t>(s.row), 0);
    rows[s.row - 1] = std::max(rows[s.row - 1], s.col);
  }
  const int r = static_cast<int>(rows.size());
  for (int i = 0; i < r; ++i)
    if (rows[i] != r - i) return fallback;
  return r;
}

// Moves every label in `labels` simultaneously, without checking that the set
// is a union of cycles.
inline DominoTableau move_labels(const DominoTableau& t, const std::set<int>& labels, Convention conv) {
  if (labels.empty()) return t;
  std::map<Square, int> cells = cells_of(t);
  std::vector<Square> vacated;
  std::vector<std::pair<Square, int>> placed;
  for (int k : labels) {
    const SingleMove m = single_move(t, k, conv);
    vacated.push_back(m.variable);
    placed.push_back({m.target, k});
  }
  std::set<Square> refilled;
  for (const auto& [s, k] : placed) refilled.insert(s);
  for (const Square& s : vacated) {
    if (!refilled.count(s)) cells.erase(s);
  }
  for (const auto& [s, k] : placed) cells[s] = k;
  // Vacated squares either join the 0-region or leave the diagram.
  std::vector<Square> holes;
  for (const Square& s : vacated)
    if (!refilled.count(s)) holes.push_back(s);
  std::sort(holes.begin(), holes.end());
  for (bool grew = true; grew;) {
    grew = false;
    for (const Square& s : holes) {
      if (cells.count(s)) continue;
      if (joins_zero_region(cells, s)) {
        cells[s] = 0;
        grew = true;
      }
    }
  }
  return assemble_tableau(zero_region_rank(cells, t.rank()), cells);
}

}  // namespace detail

// Enables the deliberate fault in the single-domino rule for its lifetime.
class FaultGuard {
 public:
  FaultGuard() : previous_(detail::moving_fault()) { detail::moving_fault() = true; }
  ~FaultGuard() { detail::moving_fault() = previous_; }
  FaultGuard(const FaultGuard&) = delete;
  FaultGuard& operator=(const FaultGuard&) = delete;

 private:
  bool previous_;
};

/// Partition of the labels of `t` into cycles, each classified by the effect
/// of moving through it alone.
inline CycleSet cycle_partition(const DominoTableau& t, Convention conv = Convention::regular) {
  const std::vector<int>& labels = t.labels();
  std::map<Square, int> owner;  // variable square -> label
  std::map<int, detail::SingleMove> moves;
  for (int k : labels) {
    moves[k] = detail::single_move(t, k, conv);
    owner[moves[k].variable] = k;
  }
  std::map<int, int> next, prev;
  for (int k : labels) {
    auto it = owner.find(moves[k].target);
    if (it == owner.end()) continue;
    if (prev.count(it->second)) throw std::logic_error("two dominos move onto one variable square");
    next[k] = it->second;
    prev[it->second] = k;
  }

  CycleSet out;
  std::set<int> seen;
  const Shape shape = t.shape();
  const int size = shape.size();
  for (int k : labels) {
    if (seen.count(k)) continue;
    // Walk back to the head of a chain, or around a loop.
    int head = k;
    while (prev.count(head) && prev[head] != k) head = prev[head];
    const bool loop = prev.count(head) > 0;
    if (loop) head = k;
    Cycle c;
    int cur = head;
    for (;;) {
      c.labels.push_back(cur);
      seen.insert(cur);
      auto it = next.find(cur);
      if (it == next.end() || it->second == head) break;
      cur = it->second;
    }
    std::sort(c.labels.begin(), c.labels.end());
    if (!loop) {
      c.start = moves[head].variable;
      c.end = moves[cur].target;
    }
    const DominoTableau moved = detail::move_labels(t, std::set<int>(c.labels.begin(), c.labels.end()), conv);
    const Shape s2 = moved.shape();
    if (s2 == shape) {
      c.kind = CycleKind::closed;
    } else {
      c.kind = s2.size() != size ? CycleKind::core_open : CycleKind::noncore_open;
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return a.labels < b.labels; });
  return out;
}

inline CycleSet core_cycles(const DominoTableau& t, Convention conv = Convention::regular) {
  CycleSet out;
  for (const Cycle& c : cycle_partition(t, conv))
    if (c.kind == CycleKind::core_open) out.push_back(c);
  return out;
}

inline CycleSet noncore_cycles(const DominoTableau& t, Convention conv = Convention::regular) {
  CycleSet out;
  for (const Cycle& c : cycle_partition(t, conv))
    if (c.kind == CycleKind::noncore_open) out.push_back(c);
  return out;
}

inline std::set<int> label_union(const CycleSet& cycles) {
  std::set<int> out;
  for (const Cycle& c : cycles) out.insert(c.labels.begin(), c.labels.end());
  return out;
}

/// Moves `t` through the union of cycles `labels`. Throws std::invalid_argument
/// if `labels` cuts across a cycle.
inline DominoTableau move_through(const DominoTableau& t, const std::set<int>& labels,
                                  Convention conv = Convention::regular) {
  if (labels.empty()) return t;
  for (const Cycle& c : cycle_partition(t, conv)) {
    std::size_t inside = 0;
    for (int k : c.labels) inside += labels.count(k);
    if (inside != 0 && inside != c.labels.size()) {
      throw std::invalid_argument("label set splits the cycle " + c.to_string());
    }
  }
  for (int k : labels)
    if (!t.has_label(k)) throw std::invalid_argument("label " + std::to_string(k) + " not in tableau");
  return detail::move_labels(t, labels, conv);
}

inline DominoTableau move_through(const DominoTableau& t, const CycleSet& cycles,
                                  Convention conv = Convention::regular) {
  return move_through(t, label_union(cycles), conv);
}

struct ExtendedCyclePair {
  CycleSet in_left;
  CycleSet in_right;
};

/// Smallest sets of open cycles of `s` and `t`, containing all core cycles,
/// such that moving through them leaves tableaux of equal shape.
inline ExtendedCyclePair extended_cycles(const DominoTableau& s, const DominoTableau& t,
                                         Convention conv = Convention::regular) {
  if (s.shape() != t.shape() || s.rank() != t.rank()) {
    throw std::invalid_argument("extended cycles need a same-shape pair");
  }
  const Shape original = s.shape();
  const CycleSet s_all = cycle_partition(s, conv);
  const CycleSet t_all = cycle_partition(t, conv);
  std::set<std::size_t> s_pick, t_pick;
  for (std::size_t i = 0; i < s_all.size(); ++i)
    if (s_all[i].core()) s_pick.insert(i);
  for (std::size_t i = 0; i < t_all.size(); ++i)
    if (t_all[i].core()) t_pick.insert(i);

  auto labels_of = [](const CycleSet& all, const std::set<std::size_t>& pick) {
    std::set<int> out;
    for (std::size_t i : pick) out.insert(all[i].labels.begin(), all[i].labels.end());
    return out;
  };
  auto squares_of = [](const Shape& sh) {
    std::set<Square> out;
    for (int i = 1; i <= sh.num_rows(); ++i)
      for (int j = 1; j <= sh.row_length(i); ++j) out.insert({i, j});
    return out;
  };
  // Adds the noncore cycle of `all` that starts (or ends) at q.
  auto adjoin = [](const CycleSet& all, std::set<std::size_t>& pick, const Square& q, bool at_start) {
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (pick.count(i) || all[i].kind != CycleKind::noncore_open) continue;
      const auto& sq = at_start ? all[i].start : all[i].end;
      if (sq && *sq == q) {
        pick.insert(i);
        return;
      }
    }
    throw std::logic_error("no open cycle meets square (" + std::to_string(q.row) + "," + std::to_string(q.col) + ")");
  };

  for (;;) {
    const auto a = squares_of(detail::move_labels(s, labels_of(s_all, s_pick), conv).shape());
    const auto b = squares_of(detail::move_labels(t, labels_of(t_all, t_pick), conv).shape());
    if (a == b) break;
    std::optional<Square> q;
    bool in_a = false;
    for (const Square& x : a)
      if (!b.count(x)) { q = x; in_a = true; break; }
    if (!q) {
      for (const Square& x : b)
        if (!a.count(x)) { q = x; break; }
    }
    const bool was_there = original.contains(*q);
    // The side that lacks q either failed to grow into it or emptied it.
    if (in_a) {
      if (was_there) adjoin(s_all, s_pick, *q, true);
      else adjoin(t_all, t_pick, *q, false);
    } else {
      if (was_there) adjoin(t_all, t_pick, *q, true);
      else adjoin(s_all, s_pick, *q, false);
    }
  }
  ExtendedCyclePair out;
  for (std::size_t i : s_pick) out.in_left.push_back(s_all[i]);
  for (std::size_t i : t_pick) out.in_right.push_back(t_all[i]);
  return out;
}

namespace detail {

inline DominoTableau with_zero_region(const DominoTableau& t, int rank) {
  std::map<Square, int> cells = cells_of(t);
  const Shape core = Shape::staircase(rank);
  for (int i = 1; i <= core.num_rows(); ++i)
    for (int j = 1; j <= core.row_length(i); ++j) cells.try_emplace(Square{i, j}, 0);
  for (auto it = cells.begin(); it != cells.end();) {
    if (it->second == 0 && !core.contains(it->first)) it = cells.erase(it);
    else ++it;
  }
  return assemble_tableau(rank, cells);
}

}  // namespace detail

/// MT(T, cc(T)) as a tableau of rank r + 1; staircase squares left empty by a
/// split tableau become core squares.
inline DominoTableau raise_tableau_rank(const DominoTableau& t) {
  return detail::with_zero_region(detail::move_labels(t, label_union(core_cycles(t)), Convention::regular),
                                  t.rank() + 1);
}

/// Raises a same-shape pair of rank r to rank r + 1 by moving each side
/// through its extended cycles relative to the other.
inline TableauPair raise_pair_rank(const TableauPair& pair) {
  const int r = pair.left.rank();
  const ExtendedCyclePair ext = extended_cycles(pair.left, pair.right, Convention::regular);
  DominoTableau left = detail::move_labels(pair.left, label_union(ext.in_left), Convention::regular);
  DominoTableau right = detail::move_labels(pair.right, label_union(ext.in_right), Convention::regular);
  return {detail::with_zero_region(left, r + 1), detail::with_zero_region(right, r + 1)};
}

/// Inverse of raise_pair_rank: lowers a pair of rank r + 1 to rank r through
/// opposite extended cycles.
inline TableauPair lower_pair_rank(const TableauPair& pair) {
  const int r = pair.left.rank() - 1;
  if (r < 0) throw std::invalid_argument("cannot lower a rank-0 pair");
  const ExtendedCyclePair ext = extended_cycles(pair.left, pair.right, Convention::opposite);
  DominoTableau left = detail::move_labels(pair.left, label_union(ext.in_left), Convention::opposite);
  DominoTableau right = detail::move_labels(pair.right, label_union(ext.in_right), Convention::opposite);
  return {detail::with_zero_region(left, r), detail::with_zero_region(right, r)};
}

}  // namespace bcells
