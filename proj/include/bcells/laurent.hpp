#pragma once

// Laurent polynomials in v with arbitrary-precision integer coefficients.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bcells {

using Integer = boost::multiprecision::cpp_int;

/// Dense coefficient vector starting at exponent low(). Always trimmed: the
/// zero polynomial has no coefficients, otherwise both ends are nonzero.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(Integer c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  LaurentPolynomial(int c) : LaurentPolynomial(Integer(c)) {}  // NOLINT

  static LaurentPolynomial monomial(int exponent, Integer c = 1) {
    LaurentPolynomial p(std::move(c));
    if (!p.is_zero()) p.low_ = exponent;
    return p;
  }

  // v^e - v^{-e}.
  static LaurentPolynomial quantum_difference(int e) { return monomial(e) - monomial(-e); }

  static LaurentPolynomial from_map(const std::map<int, Integer>& terms) {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  Integer coefficient(int e) const {
    if (is_zero() || e < low() || e > high()) return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }

  std::map<int, Integer> terms() const {
    std::map<int, Integer> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
  }

  void add_term(int e, const Integer& c) {
    if (c == 0) return;
    if (is_zero()) {
      low_ = e;
      coeffs_.push_back(c);
      return;
    }
    reserve_range(e, e);
    coeffs_[static_cast<std::size_t>(e - low_)] += c;
    trim();
  }

  // *this += c * v^shift * other.
  void add_scaled(const LaurentPolynomial& other, int shift = 0, const Integer& c = 1) {
    if (other.is_zero() || c == 0) return;
    const int lo = other.low_ + shift;
    const int hi = other.high() + shift;
    if (is_zero()) {
      low_ = lo;
      coeffs_.assign(other.coeffs_.size(), 0);
    } else {
      reserve_range(lo, hi);
    }
    const std::size_t off = static_cast<std::size_t>(lo - low_);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
      if (c == 1) coeffs_[off + i] += other.coeffs_[i];
      else if (c == -1) coeffs_[off + i] -= other.coeffs_[i];
      else coeffs_[off + i] += c * other.coeffs_[i];
    }
    trim();
  }

  // v -> v^{-1}.
  LaurentPolynomial bar() const {
    LaurentPolynomial p;
    if (is_zero()) return p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.low_ = -high();
    return p;
  }

  // Terms with exponent >= e.
  LaurentPolynomial truncated_below(int e) const {
    LaurentPolynomial p;
    for (int k = std::max(e, low()); !is_zero() && k <= high(); ++k) p.add_term(k, coefficient(k));
    return p;
  }

  /// The bar-invariant polynomial agreeing with *this in all nonnegative
  /// degrees.
  LaurentPolynomial symmetric_part() const {
    LaurentPolynomial p;
    if (is_zero() || high() < 0) return p;
    for (int k = std::max(0, low()); k <= high(); ++k) {
      const Integer c = coefficient(k);
      p.add_term(k, c);
      if (k > 0) p.add_term(-k, c);
    }
    return p;
  }

  bool only_negative_degrees() const { return is_zero() || high() < 0; }

  LaurentPolynomial operator-() const {
    LaurentPolynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    add_scaled(o);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    add_scaled(o, 0, -1);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial p;
    if (a.is_zero() || b.is_zero()) return p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    p.trim();
    return p;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
  }

  // e.g. "v^2 - 1 + 3v^-1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = high(); k >= low(); --k) {
      Integer c = coefficient(k);
      if (c == 0) continue;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (out.empty()) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      const bool unit = c == 1 && k != 0;
      if (!unit) out += c.str();
      if (k != 0) out += k == 1 ? "v" : "v^" + std::to_string(k);
    }
    return out;
  }

 private:
  void reserve_range(int lo, int hi) {
    if (lo < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
      low_ = lo;
    }
    if (hi > high()) coeffs_.resize(static_cast<std::size_t>(hi - low_ + 1), Integer(0));
  }
  void trim() {
    std::size_t front = 0;
    while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
    if (front == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    while (coeffs_.back() == 0) coeffs_.pop_back();
    if (front) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(front));
      low_ += static_cast<int>(front);
    }
  }

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

}  // namespace bcells
