#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lexfan/errors.hpp"
#include "lexfan/rational.hpp"

namespace lexfan {

/// An element of Q^(k): k exact rationals ordered lexicographically, first coordinate
/// most significant.
class LexVec {
 public:
  LexVec() = default;
  explicit LexVec(std::size_t k) : entries_(k) {}
  explicit LexVec(std::vector<Rational> entries) : entries_(std::move(entries)) {
    for (auto& e : entries_) e.canonicalize();
  }
  LexVec(std::initializer_list<Rational> entries) : LexVec(std::vector<Rational>(entries)) {}

  std::size_t k() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  /// -1, 0 or +1 according to the lexicographic order.
  int sign() const {
    for (const auto& e : entries_)
      if (int s = sgn(e); s != 0) return s;
    return 0;
  }

  LexVec& operator+=(const LexVec& o) {
    check_k(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  LexVec& operator-=(const LexVec& o) {
    check_k(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  LexVec& operator*=(const Rational& q) {
    for (auto& e : entries_) e *= q;
    return *this;
  }
  LexVec& operator/=(const Rational& q) {
    for (auto& e : entries_) e /= q;
    return *this;
  }

  friend LexVec operator+(LexVec a, const LexVec& b) { return a += b; }
  friend LexVec operator-(LexVec a, const LexVec& b) { return a -= b; }
  friend LexVec operator*(const Rational& q, LexVec a) { return a *= q; }
  friend LexVec operator*(LexVec a, const Rational& q) { return a *= q; }
  friend LexVec operator/(LexVec a, const Rational& q) { return a /= q; }
  friend LexVec operator-(LexVec a) {
    for (auto& e : a.entries_) e = -e;
    return a;
  }

  friend bool operator==(const LexVec& a, const LexVec& b) {
    a.check_k(b);
    return a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const LexVec& a, const LexVec& b) {
    a.check_k(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      const int c = cmp(a.entries_[i], b.entries_[i]);
      if (c < 0) return std::strong_ordering::less;
      if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  /// "(0,-1)" with integers unadorned; for human-facing output.
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ',';
      s += pretty_rational(entries_[i]);
    }
    return s + ")";
  }

 private:
  void check_k(const LexVec& o) const {
    if (o.k() != k())
      throw DimensionMismatch("value vectors of length " + std::to_string(k()) + " and " +
                              std::to_string(o.k()));
  }

  std::vector<Rational> entries_;
};

inline std::strong_ordering lex_cmp(const LexVec& a, const LexVec& b) { return a <=> b; }

/// The coordinate vector with a single 1 in position `i`.
inline LexVec unit_lexvec(std::size_t k, std::size_t i) {
  LexVec e(k);
  e[i] = 1;
  return e;
}

/// Number of leading zero coordinates (k for the zero vector). A vector with level l lies in
/// the convex subgroup of vectors supported on the trailing k - l coordinates and in no smaller one.
inline std::size_t arch_level(const LexVec& g) {
  std::size_t l = 0;
  while (l < g.k() && g[l] == 0) ++l;
  return l;
}

}  // namespace lexfan
