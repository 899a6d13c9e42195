#pragma once

// The Iwahori-Hecke algebra of W_n with unequal parameters, its
// Kazhdan-Lusztig basis and the resulting left, right and two-sided cells.
//
// Elements of W_n are indexed by position in a list sorted by length, so a
// Bruhat-smaller element always has a smaller index.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bcells/cells.hpp"
#include "bcells/laurent.hpp"
#include "bcells/signed_permutation.hpp"

namespace bcells {

/// L(s_i) = a for every i, L(t) = b.
struct WeightFunction {
  int a = 1;
  int b = 1;

  int of(int generator) const { return generator == 0 ? b : a; }
  std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

/// Sparse element of the Hecke algebra in the standard basis, keyed by
/// element index.
using HeckeElement = std::map<int, LaurentPolynomial>;

inline void add_to(HeckeElement& h, int index, const LaurentPolynomial& p, int shift = 0, const Integer& c = 1) {
  if (p.is_zero()) return;
  auto& slot = h[index];
  slot.add_scaled(p, shift, c);
  if (slot.is_zero()) h.erase(index);
}

inline void add_to(HeckeElement& h, const HeckeElement& g, const LaurentPolynomial& scale) {
  for (const auto& [y, p] : g) {
    const LaurentPolynomial q = p * scale;
    if (q.is_zero()) continue;
    auto& slot = h[y];
    slot += q;
    if (slot.is_zero()) h.erase(y);
  }
}

/// Bruhat order via the embedding of W_n in the symmetric group on
/// {-n, ..., -1, 1, ..., n}: u <= v iff #{a <= i : u(a) >= j} <= the same
/// count for v, for all i, j.
inline bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& v) {
  const int n = u.size();
  if (v.size() != n) throw std::invalid_argument("bruhat_leq: rank mismatch");
  std::vector<int> points;
  for (int a = -n; a <= n; ++a)
    if (a != 0) points.push_back(a);
  for (int i : points) {
    for (int j : points) {
      int cu = 0, cv = 0;
      for (int a : points) {
        if (a > i) break;
        if (u(a) >= j) ++cu;
        if (v(a) >= j) ++cv;
      }
      if (cu > cv) return false;
    }
  }
  return true;
}

class HeckeAlgebra {
 public:
  HeckeAlgebra(int n, WeightFunction weights) : n_(n), weights_(weights) {
    if (n < 1 || n > 8) throw std::invalid_argument("HeckeAlgebra supports 1 <= n <= 8");
    if (weights.a < 1 || weights.b < 1) throw std::invalid_argument("weights must be positive");
    elements_ = enumerate(n);
    std::stable_sort(elements_.begin(), elements_.end(), [](const auto& x, const auto& y) {
      const int lx = length(x), ly = length(y);
      return lx != ly ? lx < ly : x < y;
    });
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      index_.emplace(encode(elements_[i]), static_cast<int>(i));
      lengths_.push_back(length(elements_[i]));
    }
    left_.assign(static_cast<std::size_t>(n), std::vector<int>(elements_.size()));
    right_.assign(static_cast<std::size_t>(n), std::vector<int>(elements_.size()));
    for (int s = 0; s < n; ++s) {
      const SignedPermutation g = simple_generator(s).as_permutation(n);
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        left_[s][i] = index_of(compose(g, elements_[i]));
        right_[s][i] = index_of(compose(elements_[i], g));
      }
    }
    for (const auto& w : elements_) inverse_.push_back(index_of(w.inverse()));
  }

  int n() const { return n_; }
  const WeightFunction& weights() const { return weights_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<SignedPermutation>& elements() const { return elements_; }
  const SignedPermutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  int index_of(const SignedPermutation& w) const {
    auto it = index_.find(encode(w));
    if (it == index_.end() || w.size() != n_) throw std::out_of_range("element not in W_" + std::to_string(n_));
    return it->second;
  }
  int length_of(int i) const { return lengths_[static_cast<std::size_t>(i)]; }
  int left_mul(int s, int i) const { return left_[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)]; }
  int right_mul(int s, int i) const { return right_[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)]; }
  int inverse_of(int i) const { return inverse_[static_cast<std::size_t>(i)]; }
  int weight_of_generator(int s) const { return weights_.of(s); }

  // First generator s (in index order) with l(sw) < l(w), or -1 for e.
  int left_descent(int i) const {
    for (int s = 0; s < n_; ++s)
      if (length_of(left_mul(s, i)) < length_of(i)) return s;
    return -1;
  }

  // Reduced word s_1 s_2 ... s_k of w.
  std::vector<int> reduced_word(int i) const {
    std::vector<int> word;
    for (int s = left_descent(i); s >= 0; s = left_descent(i)) {
      word.push_back(s);
      i = left_mul(s, i);
    }
    return word;
  }

  HeckeElement basis_element(int i) const { return {{i, LaurentPolynomial(1)}}; }
  HeckeElement basis_element(const SignedPermutation& w) const { return basis_element(index_of(w)); }

  /// T_s * h.
  HeckeElement t_multiply_left(int s, const HeckeElement& h) const {
    HeckeElement out;
    const int e = weights_.of(s);
    for (const auto& [y, p] : h) {
      const int sy = left_mul(s, y);
      add_to(out, sy, p);
      if (length_of(sy) < length_of(y)) {
        add_to(out, y, p, e);
        add_to(out, y, p, -e, -1);
      }
    }
    return out;
  }

  /// h * T_s.
  HeckeElement t_multiply_right(const HeckeElement& h, int s) const {
    HeckeElement out;
    const int e = weights_.of(s);
    for (const auto& [y, p] : h) {
      const int ys = right_mul(s, y);
      add_to(out, ys, p);
      if (length_of(ys) < length_of(y)) {
        add_to(out, y, p, e);
        add_to(out, y, p, -e, -1);
      }
    }
    return out;
  }

  HeckeElement multiply(const HeckeElement& x, const HeckeElement& y) const {
    HeckeElement out;
    for (const auto& [u, p] : x) {
      HeckeElement term = y;
      const auto word = reduced_word(u);
      for (auto it = word.rbegin(); it != word.rend(); ++it) term = t_multiply_left(*it, term);
      add_to(out, term, p);
    }
    return out;
  }

  /// Bar involution: v -> v^{-1}, T_w -> (T_{w^{-1}})^{-1}.
  HeckeElement bar(const HeckeElement& h) const {
    HeckeElement out;
    for (const auto& [w, p] : h) add_to(out, bar_of_basis(w), p.bar());
    return out;
  }

  const HeckeElement& bar_of_basis(int w) const {
    if (bar_table_.empty()) {
      bar_table_.resize(elements_.size());
      bar_table_[0] = basis_element(0);
      for (int i = 1; i < size(); ++i) {
        const int s = left_descent(i);
        const HeckeElement& rest = bar_table_[static_cast<std::size_t>(left_mul(s, i))];
        // bar(T_s) = T_s - (v_s - v_s^{-1}).
        HeckeElement h = t_multiply_left(s, rest);
        add_to(h, rest, -LaurentPolynomial::quantum_difference(weights_.of(s)));
        bar_table_[static_cast<std::size_t>(i)] = std::move(h);
      }
    }
    return bar_table_[static_cast<std::size_t>(w)];
  }

  /// Bruhat ideal {y <= w} from the subword recursion B(sw) = B(w) u s B(w).
  const std::vector<bool>& bruhat_ideal(int w) const {
    if (ideals_.empty()) {
      ideals_.assign(elements_.size(), std::vector<bool>(elements_.size(), false));
      ideals_[0][0] = true;
      for (int i = 1; i < size(); ++i) {
        const int s = left_descent(i);
        const int rest = left_mul(s, i);
        auto& ideal = ideals_[static_cast<std::size_t>(i)];
        const auto& below = ideals_[static_cast<std::size_t>(rest)];
        for (int y = 0; y < size(); ++y) {
          if (!below[static_cast<std::size_t>(y)]) continue;
          ideal[static_cast<std::size_t>(y)] = true;
          ideal[static_cast<std::size_t>(left_mul(s, y))] = true;
        }
      }
    }
    return ideals_[static_cast<std::size_t>(w)];
  }

  /// C_s * h with C_s = T_s + v_s^{-1} T_e.
  HeckeElement c_multiply_left(int s, const HeckeElement& h) const {
    HeckeElement out = t_multiply_left(s, h);
    for (const auto& [y, p] : h) add_to(out, y, p, -weights_.of(s));
    return out;
  }

  /// Coefficients mu_z with h = sum mu_z C_z, for bar-invariant h.
  std::map<int, LaurentPolynomial> expand_in_kl_basis(HeckeElement h) const {
    const auto& basis = kl_basis();
    std::map<int, LaurentPolynomial> out;
    while (!h.empty()) {
      auto top = std::prev(h.end());
      const int z = top->first;
      LaurentPolynomial mu = top->second.symmetric_part();
      if (mu.is_zero()) throw std::logic_error("element is not bar-invariant at " + element(z).to_string());
      add_to(h, basis[static_cast<std::size_t>(z)], -mu);
      if (h.count(z)) throw std::logic_error("expansion did not clear " + element(z).to_string());
      out.emplace(z, std::move(mu));
    }
    return out;
  }

  /// Kazhdan-Lusztig basis {C_w}, computed once by increasing length.
  const std::vector<HeckeElement>& kl_basis() const {
    if (basis_.empty()) compute_basis();
    return basis_;
  }

  bool has_basis() const { return !basis_.empty(); }
  void set_basis(std::vector<HeckeElement> basis) {
    if (static_cast<int>(basis.size()) != size()) throw std::invalid_argument("basis has the wrong size");
    basis_ = std::move(basis);
  }

  /// Edges w -> y for each C_y occurring in C_s C_w.
  std::vector<std::vector<int>> left_edges() const {
    std::vector<std::vector<int>> edges(elements_.size());
    const auto& basis = kl_basis();
    for (int w = 0; w < size(); ++w) {
      std::set<int> targets;
      for (int s = 0; s < n_; ++s) {
        if (length_of(left_mul(s, w)) < length_of(w)) {
          targets.insert(w);
          continue;
        }
        for (const auto& [z, mu] : expand_in_kl_basis(c_multiply_left(s, basis[static_cast<std::size_t>(w)])))
          targets.insert(z);
      }
      edges[static_cast<std::size_t>(w)].assign(targets.begin(), targets.end());
    }
    return edges;
  }

 private:
  static std::uint64_t encode(const SignedPermutation& w) {
    std::uint64_t key = 0;
    const std::uint64_t base = 2 * static_cast<std::uint64_t>(w.size()) + 1;
    for (int e : w.entries()) key = key * base + static_cast<std::uint64_t>(e + w.size());
    return key;
  }

  void compute_basis() const {
    std::vector<HeckeElement> basis(elements_.size());
    basis[0] = basis_element(0);
    basis_.swap(basis);  // expand_in_kl_basis reads the partial table
    for (int w = 1; w < size(); ++w) {
      const int s = left_descent(w);
      HeckeElement h = c_multiply_left(s, basis_[static_cast<std::size_t>(left_mul(s, w))]);
      // Strip C_z (z < w) until only negative degrees remain below T_w.
      for (auto it = h.rbegin(); it != h.rend();) {
        const int z = it->first;
        if (z == w || it->second.only_negative_degrees()) {
          ++it;
          continue;
        }
        const LaurentPolynomial mu = it->second.symmetric_part();
        add_to(h, basis_[static_cast<std::size_t>(z)], -mu);
        it = std::make_reverse_iterator(h.lower_bound(z));
      }
      basis_[static_cast<std::size_t>(w)] = std::move(h);
    }
  }

  int n_;
  WeightFunction weights_;
  std::vector<SignedPermutation> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> left_, right_;
  std::vector<int> inverse_;
  mutable std::vector<HeckeElement> bar_table_;
  mutable std::vector<std::vector<bool>> ideals_;
  mutable std::vector<HeckeElement> basis_;
};

namespace detail {

// Strongly connected components (iterative Tarjan); returns a component id
// per vertex.
inline std::vector<std::size_t> strong_components(const std::vector<std::vector<int>>& edges) {
  const std::size_t n = edges.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> comp(n, 0), stack;
  int counter = 0;
  std::size_t ncomp = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> work{{root, 0}};
    while (!work.empty()) {
      auto& [v, next] = work.back();
      if (next == 0 && index[v] < 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (next < edges[v].size()) {
        const auto w = static_cast<std::size_t>(edges[v][next++]);
        if (index[w] < 0) {
          work.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        for (;;) {
          const std::size_t x = stack.back();
          stack.pop_back();
          on_stack[x] = false;
          comp[x] = ncomp;
          if (x == v) break;
        }
        ++ncomp;
      }
      const std::size_t done = v;
      work.pop_back();
      if (!work.empty()) {
        const std::size_t parent = work.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace detail

inline std::string kl_label(const WeightFunction& L, Side side) {
  return "kl a=" + std::to_string(L.a) + " b=" + std::to_string(L.b) + " " + to_string(side);
}

/// Kazhdan-Lusztig cells of an algebra whose basis is (or will be) computed.
inline CellPartition kl_cells(const HeckeAlgebra& algebra, Side side) {
  const auto left = algebra.left_edges();
  std::vector<std::vector<int>> edges(left.size());
  for (std::size_t w = 0; w < left.size(); ++w) {
    if (side != Side::right) edges[w] = left[w];
    if (side != Side::left) {
      // w -> y on the right iff w^{-1} -> y^{-1} on the left.
      for (int y : left[static_cast<std::size_t>(algebra.inverse_of(static_cast<int>(w)))])
        edges[w].push_back(algebra.inverse_of(y));
    }
  }
  return CellPartition::from_ids(algebra.n(), kl_label(algebra.weights(), side), algebra.elements(),
                                 detail::strong_components(edges));
}

inline CellPartition kl_cells(int n, WeightFunction L, Side side) { return kl_cells(HeckeAlgebra(n, L), side); }

}  // namespace bcells
