#pragma once

#include <cstddef>
#include <vector>

#include "lexfan/lattice.hpp"
#include "lexfan/polyhedron.hpp"

namespace lexfan {

/// Coordinates adapted to the lineality of a set of normals U.
///
/// Q is unimodular with U Q = [H | 0]. Columns r.. of Q span the kernel lattice V_Z and the
/// first r rows of Q^-1 span its orthogonal V^perp in M. A point v has quotient coordinates
/// given by the first r entries of Q^-1 v.
class BasisMap {
 public:
  BasisMap() = default;
  BasisMap(const std::vector<LatticeVec>& normals, std::size_t n) : n_(n) {
    const auto ech = column_echelon(to_int_matrix(normals, n), n);
    q_ = ech.q;
    r_ = ech.rank;
    const auto inv = invert(to_rat_matrix(q_));
    qinv_.assign(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) qinv_[i][j] = (*inv)[i][j].get_num();
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t rank() const noexcept { return r_; }

  std::vector<LatticeVec> kernel_basis() const {
    std::vector<LatticeVec> out;
    for (std::size_t j = r_; j < n_; ++j) out.push_back(column_of(q_, j));
    return out;
  }

  std::vector<LatticeVec> perp_basis() const {
    std::vector<LatticeVec> out;
    for (std::size_t i = 0; i < r_; ++i) {
      LatticeVec row(n_);
      for (std::size_t j = 0; j < n_; ++j) row[j] = to_int64(qinv_[i][j]);
      out.push_back(row);
    }
    return out;
  }

  /// u is orthogonal to every kernel vector.
  bool in_perp(const LatticeVec& u) const {
    for (std::size_t j = r_; j < n_; ++j)
      if (dot(u, column_of(q_, j)) != 0) return false;
    return true;
  }

  /// (u.q_1, ..., u.q_r); meaningful for u in V^perp.
  LatticeVec to_quotient(const LatticeVec& u) const {
    check(u.size(), n_);
    LatticeVec out(r_);
    for (std::size_t i = 0; i < r_; ++i) out[i] = dot(u, column_of(q_, i));
    return out;
  }

  /// Inverse of to_quotient on V^perp.
  LatticeVec from_quotient(const LatticeVec& w) const {
    check(w.size(), r_);
    LatticeVec u(n_, 0);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < n_; ++j) u[j] += w[i] * to_int64(qinv_[i][j]);
    return u;
  }

  /// sum_i y_i q_i: the representative of quotient coordinates y in the span of q_1..q_r.
  LatticeVec lift(const LatticeVec& y) const {
    check(y.size(), r_);
    LatticeVec out(n_, 0);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[j] += y[i] * to_int64(q_[j][i]);
    return out;
  }

  /// Image of v in N/V_Z.
  Point project(const Point& v) const {
    check(v.n(), n_);
    Point out(r_, v.k());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (qinv_[i][j] != 0) out[i] += Rational(qinv_[i][j]) * v[j];
    return out;
  }

  /// The representative of a quotient point inside the span of q_1..q_r.
  Point lift(const Point& w) const {
    check(w.n(), r_);
    Point out(n_, w.k());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (q_[j][i] != 0) out[j] += Rational(q_[j][i]) * w[i];
    return out;
  }

 private:
  static void check(std::size_t got, std::size_t want) {
    if (got != want)
      throw DimensionMismatch("expected rank " + std::to_string(want) + ", got " + std::to_string(got));
  }

  std::size_t n_ = 0;
  std::size_t r_ = 0;
  IntMatrix q_;
  IntMatrix qinv_;
};

struct Lineality {
  std::vector<LatticeVec> v_z;     // basis of the lineality lattice in N
  std::vector<LatticeVec> v_perp;  // basis of its orthogonal in M
  bool pointed() const noexcept { return v_z.empty(); }
};

inline Lineality lineality(const Polyhedron& p) {
  BasisMap map(p.normals(), p.n());
  return {map.kernel_basis(), map.perp_basis()};
}

struct PointedQuotient {
  Polyhedron polyhedron;  // P / V_Z, pointed, in rank(V^perp) coordinates
  BasisMap map;
};

inline PointedQuotient pointed_quotient(const Polyhedron& p) {
  PointedQuotient out{Polyhedron(), BasisMap(p.normals(), p.n())};
  std::vector<Halfspace> hs;
  for (const auto& h : p.halfspaces()) hs.push_back({out.map.to_quotient(h.u), h.gamma});
  out.polyhedron = Polyhedron(out.map.rank(), p.k(), hs);
  return out;
}

}  // namespace lexfan
