#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lexfan/lattice.hpp"
#include "lexfan/lexvec.hpp"

namespace lexfan {

/// A point of N tensored with Q^(k): row j holds the value of the j-th coordinate.
class Point {
 public:
  Point() = default;
  Point(std::size_t n, std::size_t k) : rows_(n, LexVec(k)), k_(k) {}
  explicit Point(std::vector<LexVec> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) k_ = rows_.front().k();
    for (const auto& r : rows_)
      if (r.k() != k_) throw DimensionMismatch("point rows of different length");
  }
  /// Explicit k for n = 0.
  Point(std::vector<LexVec> rows, std::size_t k) : Point(std::move(rows)) {
    if (rows_.empty()) k_ = k;
    if (k_ != k) throw DimensionMismatch("point rows do not have length " + std::to_string(k));
  }

  std::size_t n() const noexcept { return rows_.size(); }
  std::size_t k() const noexcept { return k_; }
  const LexVec& operator[](std::size_t j) const { return rows_[j]; }
  LexVec& operator[](std::size_t j) { return rows_[j]; }
  const std::vector<LexVec>& rows() const noexcept { return rows_; }

  /// <u, v> = sum_j u_j * row_j.
  LexVec pair(const LatticeVec& u) const {
    if (u.size() != n())
      throw DimensionMismatch("pairing lattice vector of rank " + std::to_string(u.size()) + " with point of rank " +
                              std::to_string(n()));
    LexVec s(k_);
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u[j] != 0) s += Rational(static_cast<long>(u[j])) * rows_[j];
    return s;
  }

  LexVec pair(const std::vector<Rational>& u) const {
    if (u.size() != n()) throw DimensionMismatch("pairing rational vector with point of different rank");
    LexVec s(k_);
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u[j] != 0) s += u[j] * rows_[j];
    return s;
  }

  friend bool operator==(const Point& a, const Point& b) { return a.k_ == b.k_ && a.rows_ == b.rows_; }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.n() <=> b.n(); c != 0) return c;
    for (std::size_t j = 0; j < a.n(); ++j)
      if (auto c = a.rows_[j] <=> b.rows_[j]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// "(0,-1)" for n = 1, "[(0,1);(2,0)]" otherwise.
  std::string str() const {
    if (rows_.size() == 1) return rows_[0].str();
    std::string s = "[";
    for (std::size_t j = 0; j < rows_.size(); ++j) s += (j ? ";" : "") + rows_[j].str();
    return s + "]";
  }

 private:
  std::vector<LexVec> rows_;
  std::size_t k_ = 0;
};

/// {v : <u, v> >= gamma}.
struct Halfspace {
  LatticeVec u;
  LexVec gamma;

  bool contains(const Point& v) const { return v.pair(u) >= gamma; }
  bool tight_at(const Point& v) const { return v.pair(u) == gamma; }
  /// The complementary open halfspace written as <-u, v> > -gamma.
  Halfspace negated() const { return {lexfan::negated(u), -gamma}; }

  friend bool operator==(const Halfspace& a, const Halfspace& b) { return a.u == b.u && a.gamma == b.gamma; }
};

enum class Relation { Ge, Eq, Gt };

/// <u, v> rel gamma.
struct Constraint {
  Halfspace h;
  Relation rel = Relation::Ge;
};

inline bool satisfies(const Point& v, const Constraint& c) {
  const auto lhs = v.pair(c.h.u);
  switch (c.rel) {
    case Relation::Ge: return lhs >= c.h.gamma;
    case Relation::Eq: return lhs == c.h.gamma;
    case Relation::Gt: return lhs > c.h.gamma;
  }
  return false;
}

/// Scales u to a primitive vector (gamma scaled along); zero u is left alone.
inline Halfspace normalize(Halfspace h) {
  const auto g = content(h.u);
  if (g > 1) {
    for (auto& x : h.u) x /= g;
    h.gamma /= Rational(static_cast<long>(g));
  }
  return h;
}

/// A finite intersection of halfspaces {v : <u_l, v> >= gamma_l} in N tensored with Q^(k).
///
/// Construction normalizes each u to be primitive, drops trivially true constraints (u = 0,
/// gamma <= 0) and duplicates. A trivially false constraint (u = 0, gamma > 0) is kept and
/// makes the polyhedron empty. The empty list is all of N_{Q^(k)}.
class Polyhedron {
 public:
  Polyhedron() = default;
  Polyhedron(std::size_t n, std::size_t k, const std::vector<Halfspace>& halfspaces) : n_(n), k_(k) {
    if (k == 0) throw InvalidArgument("value group length k must be positive");
    for (const auto& h0 : halfspaces) {
      if (h0.u.size() != n) throw DimensionMismatch("halfspace normal of rank " + std::to_string(h0.u.size()) +
                                                    " in polyhedron of rank " + std::to_string(n));
      if (h0.gamma.k() != k) throw DimensionMismatch("halfspace constant of length " + std::to_string(h0.gamma.k()) +
                                                     ", expected " + std::to_string(k));
      Halfspace h = normalize(h0);
      if (is_zero(h.u)) {
        if (h.gamma.sign() <= 0) continue;
        trivially_empty_ = true;
      }
      if (std::find(halfspaces_.begin(), halfspaces_.end(), h) == halfspaces_.end()) halfspaces_.push_back(std::move(h));
    }
  }

  /// The single point {p}, written with 2n halfspaces.
  static Polyhedron point(const Point& p) {
    std::vector<Halfspace> hs;
    for (std::size_t j = 0; j < p.n(); ++j) {
      LatticeVec e(p.n(), 0);
      e[j] = 1;
      hs.push_back({e, p[j]});
      hs.push_back({negated(e), -p[j]});
    }
    return Polyhedron(p.n(), p.k(), hs);
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }
  std::size_t size() const noexcept { return halfspaces_.size(); }
  bool trivially_empty() const noexcept { return trivially_empty_; }

  bool contains(const Point& v) const {
    return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const Halfspace& h) { return h.contains(v); });
  }

  std::vector<LatticeVec> normals() const {
    std::vector<LatticeVec> us;
    for (const auto& h : halfspaces_) us.push_back(h.u);
    return us;
  }

  /// Same as this polyhedron with every constraint in `extra` appended.
  Polyhedron with(const std::vector<Halfspace>& extra) const {
    auto hs = halfspaces_;
    hs.insert(hs.end(), extra.begin(), extra.end());
    return Polyhedron(n_, k_, hs);
  }

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.halfspaces_ == b.halfspaces_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 1;
  std::vector<Halfspace> halfspaces_;
  bool trivially_empty_ = false;
};

inline Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
  if (a.n() != b.n() || a.k() != b.k()) throw DimensionMismatch("intersecting polyhedra of different shape");
  return a.with(b.halfspaces());
}

}  // namespace lexfan
