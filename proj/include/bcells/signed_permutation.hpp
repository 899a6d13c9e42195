#pragma once

// Signed permutations: the Weyl group W_n of type B_n in one-line notation.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcells {

class SignedPermutation {
 public:
  SignedPermutation() = default;

  explicit SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int e : entries_) {
      const int a = std::abs(e);
      if (a == 0 || a > n || seen[a]) {
        throw std::invalid_argument("not a signed permutation: " + to_string());
      }
      seen[a] = true;
    }
  }

  static SignedPermutation identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return SignedPermutation(std::move(e));
  }

  // Longest element (-1 -2 ... -n).
  static SignedPermutation longest(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[i] = -(i + 1);
    return SignedPermutation(std::move(e));
  }

  // Parses "4 1 -3 -2"; also accepts "(4 1 −3 −2)" and commas.
  static SignedPermutation parse(std::string text) {
    for (std::size_t at; (at = text.find("\u2212")) != std::string::npos;) text.replace(at, 3, "-");
    for (char& c : text)
      if (c == '(' || c == ')' || c == ',') c = ' ';
    std::istringstream in(text);
    std::vector<int> e;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad entry '" + tok + "' in permutation");
      }
      if (used != tok.size()) throw std::invalid_argument("bad entry '" + tok + "' in permutation");
      e.push_back(value);
    }
    return SignedPermutation(std::move(e));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }

  // 1-indexed value w(i); w(-i) = -w(i).
  int operator()(int i) const {
    return i > 0 ? entries_[static_cast<std::size_t>(i - 1)] : -entries_[static_cast<std::size_t>(-i - 1)];
  }

  SignedPermutation inverse() const {
    std::vector<int> inv(entries_.size());
    for (int i = 1; i <= size(); ++i) {
      const int v = (*this)(i);
      inv[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
    }
    return SignedPermutation(std::move(inv));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(entries_[i]);
    }
    return out;
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

// (u o w)(i) = sign(w(i)) * u(|w(i)|).
inline SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& w) {
  if (u.size() != w.size()) {
    throw std::invalid_argument("compose: rank mismatch (" + std::to_string(u.size()) + " vs " +
                                std::to_string(w.size()) + ")");
  }
  std::vector<int> e(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) e[i - 1] = u(w(i));
  return SignedPermutation(std::move(e));
}

/// A simple reflection t = s_0 or s_i (1 <= i < n), or one of the reflections
/// t_k = s_{k-1} ... s_1 t s_1 ... s_{k-1}, which negates position k.
struct Generator {
  enum class Kind { t, s, t_k };
  Kind kind = Kind::t;
  int index = 1;

  static Generator t() { return {Kind::t, 1}; }
  static Generator s(int i) { return {Kind::s, i}; }
  static Generator tk(int k) { return {Kind::t_k, k}; }

  // Index into the Coxeter generating set {t, s_1, ..., s_{n-1}} as 0..n-1.
  // t_1 coincides with t.
  int simple_index() const {
    if (kind == Kind::s) return index;
    if (index == 1) return 0;
    return -1;
  }

  SignedPermutation as_permutation(int n) const {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    switch (kind) {
      case Kind::t:
        if (n < 1) throw std::out_of_range("t needs n >= 1");
        e[0] = -1;
        break;
      case Kind::s:
        if (index < 1 || index >= n) throw std::out_of_range("s_" + std::to_string(index) + " outside W_" + std::to_string(n));
        std::swap(e[index - 1], e[index]);
        break;
      case Kind::t_k:
        if (index < 1 || index > n) throw std::out_of_range("t_" + std::to_string(index) + " outside W_" + std::to_string(n));
        e[index - 1] = -index;
        break;
    }
    return SignedPermutation(std::move(e));
  }

  std::string name() const {
    switch (kind) {
      case Kind::t: return "t";
      case Kind::s: return "s_" + std::to_string(index);
      case Kind::t_k: return index == 1 ? "t" : "t_" + std::to_string(index);
    }
    return "?";
  }

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Simple generator by Coxeter index: 0 -> t, i -> s_i.
inline Generator simple_generator(int index) { return index == 0 ? Generator::t() : Generator::s(index); }

/// Descent data: `simple` holds Coxeter indices (0 for t, i for s_i);
/// `extended` holds the k >= 2 of the t_k included.
struct DescentSet {
  std::set<int> simple;
  std::set<int> extended;

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    auto add = [&](const std::string& s) {
      if (!first) out += ", ";
      out += s;
      first = false;
    };
    for (int i : simple) add(simple_generator(i).name());
    for (int k : extended) add("t_" + std::to_string(k));
    return out + "}";
  }

  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

// inversions(w) + sum of |w(i)| over negative entries.
inline int length(const SignedPermutation& w) {
  int len = 0;
  const int n = w.size();
  for (int i = 1; i <= n; ++i) {
    if (w(i) < 0) len -= w(i);
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) > w(j)) ++len;
    }
  }
  return len;
}

inline bool right_descends(const SignedPermutation& w, const Generator& g) {
  const int n = w.size();
  switch (g.kind) {
    case Generator::Kind::s:
      if (g.index < 1 || g.index >= n) throw std::out_of_range("s_" + std::to_string(g.index) + " outside W_" + std::to_string(n));
      return w(g.index + 1) < w(g.index);
    case Generator::Kind::t:
    case Generator::Kind::t_k:
      if (g.index < 1 || g.index > n) throw std::out_of_range("t_" + std::to_string(g.index) + " outside W_" + std::to_string(n));
      return w(g.index) < 0;
  }
  return false;
}

inline DescentSet tau(const SignedPermutation& w) {
  DescentSet d;
  if (w.size() == 0) return d;
  if (w(1) < 0) d.simple.insert(0);
  for (int i = 1; i < w.size(); ++i) {
    if (w(i + 1) < w(i)) d.simple.insert(i);
  }
  return d;
}

// Enhanced descent set for the weight ratio b/a = ratio: adds t_j whenever
// j - 1 < ratio and w(j) < 0.
inline DescentSet enhanced_tau(const SignedPermutation& w, int ratio) {
  if (ratio < 1) throw std::invalid_argument("weight ratio must be a positive integer");
  DescentSet d = tau(w);
  for (int j = 2; j <= w.size() && j - 1 < ratio; ++j) {
    if (w(j) < 0) d.extended.insert(j);
  }
  return d;
}

// Negative entries have decreasing absolute values and positive entries are
// decreasing.
inline bool is_nonsplit(const SignedPermutation& w) {
  int last_pos = INT32_MAX;
  int last_neg = INT32_MAX;
  for (int e : w.entries()) {
    if (e > 0) {
      if (e > last_pos) return false;
      last_pos = e;
    } else {
      if (-e > last_neg) return false;
      last_neg = -e;
    }
  }
  return true;
}

/// All 2^n n! elements of W_n; order: permutations of |values| in
/// lexicographic order, then sign patterns.
inline std::vector<SignedPermutation> enumerate(int n) {
  if (n < 0) throw std::invalid_argument("enumerate: n must be nonnegative");
  std::vector<SignedPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> e = perm;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) e[i] = -e[i];
      }
      out.emplace_back(std::move(e));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::int64_t group_order(int n) {
  std::int64_t r = 1;
  for (int i = 1; i <= n; ++i) r *= 2 * i;
  return r;
}

}  // namespace bcells
