#pragma once

// Tableau classes, combinatorial cells and comparable cell partitions.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bcells/cycles.hpp"
#include "bcells/insertion.hpp"

namespace bcells {

enum class Side { left, right, two_sided };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::left: return "L";
    case Side::right: return "R";
    case Side::two_sided: return "LR";
  }
  return "?";
}

inline Side parse_side(const std::string& s) {
  if (s == "L") return Side::left;
  if (s == "R") return Side::right;
  if (s == "LR") return Side::two_sided;
  throw std::invalid_argument("side must be L, R or LR, got '" + s + "'");
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

/// A partition of W_n into blocks, kept canonical: members sorted inside each
/// block, blocks sorted by their first member.
class CellPartition {
 public:
  CellPartition() = default;
  CellPartition(int n, std::string label, std::vector<std::vector<SignedPermutation>> blocks)
      : n_(n), label_(std::move(label)), blocks_(std::move(blocks)) {
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end());
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (const auto& w : blocks_[i]) {
        if (!index_.emplace(w, i).second) throw std::invalid_argument("element " + w.to_string() + " in two blocks");
      }
    if (static_cast<std::int64_t>(index_.size()) != group_order(n)) {
      throw std::invalid_argument("blocks do not cover W_" + std::to_string(n));
    }
  }

  /// Blocks from a class id per element.
  static CellPartition from_ids(int n, std::string label, const std::vector<SignedPermutation>& elements,
                                const std::vector<std::size_t>& ids) {
    std::map<std::size_t, std::vector<SignedPermutation>> grouped;
    for (std::size_t i = 0; i < elements.size(); ++i) grouped[ids[i]].push_back(elements[i]);
    std::vector<std::vector<SignedPermutation>> blocks;
    for (auto& [id, b] : grouped) blocks.push_back(std::move(b));
    return CellPartition(n, std::move(label), std::move(blocks));
  }

  int n() const { return n_; }
  const std::string& label() const { return label_; }
  const std::vector<std::vector<SignedPermutation>>& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t block_index(const SignedPermutation& w) const { return index_.at(w); }
  const std::vector<SignedPermutation>& block_of(const SignedPermutation& w) const { return blocks_[block_index(w)]; }

  // Every block of *this lies inside a block of `coarser`.
  bool refines(const CellPartition& coarser) const {
    for (const auto& b : blocks_) {
      const std::size_t target = coarser.block_index(b.front());
      for (const auto& w : b)
        if (coarser.block_index(w) != target) return false;
    }
    return true;
  }

  CellPartition common_refinement(const CellPartition& other) const {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<SignedPermutation>> grouped;
    for (const auto& [w, i] : index_) grouped[{i, other.block_index(w)}].push_back(w);
    std::vector<std::vector<SignedPermutation>> blocks;
    for (auto& [key, b] : grouped) blocks.push_back(std::move(b));
    return CellPartition(n_, label_ + " ^ " + other.label_, std::move(blocks));
  }

  // Equality ignores labels.
  friend bool operator==(const CellPartition& a, const CellPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  int n_ = 0;
  std::string label_;
  std::vector<std::vector<SignedPermutation>> blocks_;
  std::map<SignedPermutation, std::size_t> index_;
};

/// Diagrams obtained from `shape` by adding one domino.
inline std::vector<std::pair<Shape, Domino>> addable_dominos(const Shape& shape) {
  std::vector<std::pair<Shape, Domino>> out;
  const int m = shape.num_rows();
  auto try_rows = [&](std::vector<int> rows, Domino d) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i] > rows[i - 1]) return;
    out.emplace_back(Shape(std::move(rows)), d);
  };
  for (int i = 1; i <= m + 1; ++i) {
    const int len = shape.row_length(i);
    std::vector<int> rows = shape.rows();
    rows.resize(static_cast<std::size_t>(std::max(m, i)), 0);
    auto horiz = rows;
    horiz[i - 1] += 2;
    try_rows(horiz, {{i, len + 1}, {i, len + 2}});
    if (shape.row_length(i + 1) == len) {
      auto vert = rows;
      vert.resize(static_cast<std::size_t>(std::max<int>(static_cast<int>(vert.size()), i + 1)), 0);
      vert[i - 1] += 1;
      vert[i] += 1;
      try_rows(vert, {{i, len + 1}, {i + 1, len + 1}});
    }
  }
  return out;
}

/// All standard domino tableaux of rank r with n dominos, SDT_r(n).
inline std::vector<DominoTableau> standard_tableaux(int r, int n) {
  std::vector<std::map<Square, int>> layer{{}};
  const Shape core = Shape::staircase(r);
  for (int i = 1; i <= core.num_rows(); ++i)
    for (int j = 1; j <= core.row_length(i); ++j) layer[0][{i, j}] = 0;
  auto shape_of = [](const std::map<Square, int>& cells) {
    std::vector<int> rows;
    for (const auto& [s, v] : cells) {
      if (static_cast<int>(rows.size()) < s.row) rows.resize(static_cast<std::size_t>(s.row), 0);
      rows[s.row - 1] = std::max(rows[s.row - 1], s.col);
    }
    return Shape(rows);
  };
  for (int k = 1; k <= n; ++k) {
    std::vector<std::map<Square, int>> next;
    for (const auto& cells : layer) {
      for (const auto& [sh, d] : addable_dominos(shape_of(cells))) {
        auto grown = cells;
        grown[d.first] = k;
        grown[d.second] = k;
        next.push_back(std::move(grown));
      }
    }
    layer = std::move(next);
  }
  std::vector<DominoTableau> out;
  for (const auto& cells : layer) out.push_back(assemble_tableau(r, cells));
  std::sort(out.begin(), out.end());
  return out;
}

/// Standard domino tableaux of rank r and the given shape, built by peeling
/// off the domino holding the largest label.
inline std::vector<DominoTableau> standard_tableaux(int r, const Shape& shape) {
  const Shape core = Shape::staircase(r);
  if (!shape.contains(core) || (shape.size() - core.size()) % 2) return {};
  if (shape == core) return {DominoTableau::core_only(r)};
  const int n = (shape.size() - core.size()) / 2;
  std::vector<DominoTableau> out;
  for (const Domino& d : removable_dominos(shape)) {
    const Shape smaller = remove_domino(shape, d);
    if (!smaller.contains(core)) continue;
    for (const auto& t : standard_tableaux(r, smaller)) {
      std::map<Square, int> cells = detail::cells_of(t);
      cells[d.first] = n;
      cells[d.second] = n;
      out.push_back(assemble_tableau(r, cells));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// C(T): the signed permutations whose rank-r recording tableau is T.
inline std::vector<SignedPermutation> class_of_tableau(const DominoTableau& t) {
  std::vector<SignedPermutation> out;
  for (const auto& p : standard_tableaux(t.rank(), t.shape())) out.push_back(uninsert({p, t}));
  std::sort(out.begin(), out.end());
  return out;
}

/// All tableaux MT(T, U) with U a union of non-core open cycles of T.
inline std::vector<DominoTableau> noncore_images(const DominoTableau& t) {
  const CycleSet ncc = noncore_cycles(t);
  std::vector<DominoTableau> out;
  const std::size_t m = ncc.size();
  if (m > 20) throw std::length_error("too many non-core cycles to enumerate");
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::set<int> labels;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) labels.insert(ncc[i].labels.begin(), ncc[i].labels.end());
    out.push_back(detail::move_labels(t, labels, Convention::regular));
  }
  return out;
}

/// Equivalence classes of rank-r tableaux generated by T ~ MT(T, U), U a
/// union of non-core open cycles. Returns a class id per tableau key.
inline std::unordered_map<std::string, std::size_t> tableau_classes(int r, int n) {
  const auto all = standard_tableaux(r, n);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i].key(), i);
  DisjointSets sets(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& u : noncore_images(all[i])) sets.unite(i, index.at(u.key()));
  }
  std::unordered_map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < all.size(); ++i) out.emplace(all[i].key(), sets.find(i));
  return out;
}

inline std::string combinatorial_label(int r, Side side) {
  return "comb r=" + std::to_string(r) + " " + to_string(side);
}

namespace detail {

// Classes of the equivalence generated by "same left id" and "same right id".
inline std::vector<std::size_t> joined_ids(const std::vector<std::size_t>& left_id,
                                           const std::vector<std::size_t>& right_id) {
  DisjointSets sets(left_id.size());
  std::map<std::size_t, std::size_t> first_left, first_right;
  for (std::size_t i = 0; i < left_id.size(); ++i) {
    auto [a, fresh_a] = first_left.emplace(left_id[i], i);
    if (!fresh_a) sets.unite(i, a->second);
    auto [b, fresh_b] = first_right.emplace(right_id[i], i);
    if (!fresh_b) sets.unite(i, b->second);
  }
  std::vector<std::size_t> ids(left_id.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = sets.find(i);
  return ids;
}

}  // namespace detail

/// Combinatorial left, right or two-sided r-cells of W_n.
inline CellPartition combinatorial_cells(int n, int r, Side side) {
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  const auto elements = enumerate(n);
  const auto classes = tableau_classes(r, n);
  std::vector<std::size_t> left_id(elements.size()), right_id(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const TableauPair p = insert(elements[i], r);
    left_id[i] = classes.at(p.right.key());
    right_id[i] = classes.at(p.left.key());
  }
  if (side == Side::left) return CellPartition::from_ids(n, combinatorial_label(r, side), elements, left_id);
  if (side == Side::right) return CellPartition::from_ids(n, combinatorial_label(r, side), elements, right_id);
  return CellPartition::from_ids(n, combinatorial_label(r, side), elements, detail::joined_ids(left_id, right_id));
}

/// Asymptotic cells, computed from the bitableaux model: left cells share the
/// recording bitableau, right cells the insertion bitableau.
inline CellPartition asymptotic_cells(int n, Side side) {
  const auto elements = enumerate(n);
  std::map<std::string, std::size_t> lkeys, rkeys;
  std::vector<std::size_t> left_id(elements.size()), right_id(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const TableauPair p = asymptotic_bitableaux(elements[i]);
    left_id[i] = lkeys.emplace(p.right.key(), lkeys.size()).first->second;
    right_id[i] = rkeys.emplace(p.left.key(), rkeys.size()).first->second;
  }
  const std::string label = std::string("asymptotic ") + to_string(side);
  if (side == Side::left) return CellPartition::from_ids(n, label, elements, left_id);
  if (side == Side::right) return CellPartition::from_ids(n, label, elements, right_id);
  return CellPartition::from_ids(n, label, elements, detail::joined_ids(left_id, right_id));
}

}  // namespace bcells
