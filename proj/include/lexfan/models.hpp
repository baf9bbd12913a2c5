#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexfan/admissible.hpp"
#include "lexfan/hilbert.hpp"
#include "lexfan/lineality.hpp"

namespace lexfan {

/// a * chi^u, known only through val = nu(a).
struct ValuedMonomial {
  LatticeVec u;
  LexVec val;
  friend bool operator==(const ValuedMonomial&, const ValuedMonomial&) = default;
  friend bool operator<(const ValuedMonomial& a, const ValuedMonomial& b) {
    if (a.u != b.u) return a.u < b.u;
    return a.val < b.val;
  }
};

/// A Laurent polynomial seen through the valuations of its coefficients. Terms sorted by exponent.
class FormalLaurent {
 public:
  FormalLaurent() = default;
  FormalLaurent(std::vector<ValuedMonomial> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].u.size() != terms_[0].u.size() || terms_[i].val.k() != terms_[0].val.k())
        throw DimensionMismatch("terms of different shape");
      if (i > 0 && terms_[i].u == terms_[i - 1].u)
        throw InvalidArgument("repeated exponent " + lattice_str(terms_[i].u));
    }
  }

  const std::vector<ValuedMonomial>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  friend bool operator==(const FormalLaurent&, const FormalLaurent&) = default;

 private:
  std::vector<ValuedMonomial> terms_;
};

/// Product without cancellation: each exponent of the Minkowski sum keeps the smallest sum of valuations.
inline FormalLaurent formal_mul(const FormalLaurent& f, const FormalLaurent& g) {
  std::map<LatticeVec, LexVec> acc;
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) {
      if (a.u.size() != b.u.size()) throw DimensionMismatch("multiplying polynomials of different rank");
      LatticeVec u(a.u.size());
      for (std::size_t j = 0; j < u.size(); ++j) u[j] = a.u[j] + b.u[j];
      LexVec v = a.val + b.val;
      auto [it, fresh] = acc.emplace(std::move(u), v);
      if (!fresh && v < it->second) it->second = std::move(v);
    }
  std::vector<ValuedMonomial> terms;
  for (auto& [u, v] : acc) terms.push_back({u, v});
  return FormalLaurent(std::move(terms));
}

/// f multiplied by itself m >= 1 times.
inline FormalLaurent formal_pow(const FormalLaurent& f, unsigned m) {
  if (m == 0) throw InvalidArgument("formal_pow needs a positive exponent");
  FormalLaurent out = f;
  for (unsigned i = 1; i < m; ++i) out = formal_mul(out, f);
  return out;
}

/// a * f for a scalar of valuation `val`.
inline FormalLaurent formal_scale(const LexVec& val, const FormalLaurent& f) {
  std::vector<ValuedMonomial> terms;
  for (const auto& t : f.terms()) terms.push_back({t.u, t.val + val});
  return FormalLaurent(std::move(terms));
}

/// min over terms of val + <u, w>.
inline LexVec vertex_valuation(const Point& w, const FormalLaurent& f) {
  if (f.empty()) throw InvalidArgument("valuation of the zero polynomial");
  std::optional<LexVec> best;
  for (const auto& t : f.terms()) {
    LexVec v = t.val + w.pair(t.u);
    if (!best || v < *best) best = std::move(v);
  }
  return *best;
}

/// Monomial data of R[M]^P: the pointed quotient of P with its vertices and recession rays.
class TiltedAlgebra {
 public:
  explicit TiltedAlgebra(const Polyhedron& p) : n_(p.n()), k_(p.k()) {
    if (is_empty(p)) throw EmptyPolyhedron();
    auto q = pointed_quotient(p);
    map_ = q.map;
    vertices_ = lexfan::vertices(q.polyhedron);
    rays_ = recession_cone(q.polyhedron).rays();
  }

  const BasisMap& map() const noexcept { return map_; }
  /// Vertices in quotient coordinates.
  const std::vector<Point>& quotient_vertices() const noexcept { return vertices_; }
  const std::vector<LatticeVec>& quotient_rays() const noexcept { return rays_; }

  /// The infimum of <u, .> over P exists.
  bool bounded(const LatticeVec& u) const {
    if (u.size() != n_) throw DimensionMismatch("exponent of rank " + std::to_string(u.size()));
    if (!map_.in_perp(u)) return false;
    const auto w = map_.to_quotient(u);
    return std::all_of(rays_.begin(), rays_.end(), [&](const LatticeVec& d) { return dot(w, d) >= 0; });
  }

  /// min over P of val + <u, .>; throws UnboundedBelow when there is none.
  LexVec minimum(const ValuedMonomial& m) const {
    if (m.val.k() != k_) throw DimensionMismatch("valuation of length " + std::to_string(m.val.k()));
    if (!bounded(m.u)) throw UnboundedBelow("exponent " + lattice_str(m.u));
    const auto w = map_.to_quotient(m.u);
    std::optional<LexVec> best;
    for (const auto& v : vertices_) {
      LexVec x = m.val + v.pair(w);
      if (!best || x < *best) best = std::move(x);
    }
    return *best;
  }

  LexVec weight(const FormalLaurent& f) const {
    if (f.empty()) throw InvalidArgument("weight of the zero polynomial");
    std::optional<LexVec> best;
    for (const auto& t : f.terms()) {
      LexVec x = minimum(t);
      if (!best || x < *best) best = std::move(x);
    }
    return *best;
  }

  bool is_member(const ValuedMonomial& m) const {
    if (m.val.k() != k_) throw DimensionMismatch("valuation of length " + std::to_string(m.val.k()));
    return bounded(m.u) && minimum(m).sign() >= 0;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  BasisMap map_;
  std::vector<Point> vertices_;
  std::vector<LatticeVec> rays_;
};

inline LexVec weight(const Polyhedron& p, const FormalLaurent& f) { return TiltedAlgebra(p).weight(f); }

inline bool is_member(const Polyhedron& p, const ValuedMonomial& m) { return TiltedAlgebra(p).is_member(m); }

/// Monomials a chi^u with nu(a) = val; together with the scalars of nonnegative valuation they
/// generate R[M]^P.
using GeneratorSet = std::vector<ValuedMonomial>;

/// For each vertex v, the Hilbert basis of the dual of the tangent cone at v, each u paired with
/// -<u, v>. Sorted, without repeats.
inline GeneratorSet tilted_generators(const Polyhedron& p) {
  if (!is_pointed(p)) throw NotPointed();
  GeneratorSet out;
  for (const auto& v : vertices(p)) {
    std::vector<LatticeVec> tight;
    for (const auto& h : p.halfspaces())
      if (h.tight_at(v)) tight.push_back(h.u);
    for (const auto& u : hilbert_basis(RationalCone::from_inequalities(p.n(), tight))) out.push_back({u, -v.pair(u)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The same question answered by feasibility: with val = -min over the vertices, no point of P
/// may push val + <u, .> below zero.
inline bool generic_monoid_member_by_feasibility(const Polyhedron& p, const LatticeVec& u) {
  const TiltedAlgebra alg(p);
  const auto& map = alg.map();
  std::optional<LexVec> low;
  for (const auto& w : alg.quotient_vertices()) {
    LexVec x = map.lift(w).pair(u);
    if (!low || x < *low) low = std::move(x);
  }
  auto cs = as_constraints(p);
  cs.push_back({{negated(u), -*low}, Relation::Gt});
  return !feasible(p.n(), p.k(), cs).feasible;
}

/// u lies in the dual monoid of the recession cone, i.e. chi^u survives on the generic fiber.
/// Decided from the recession rays and confirmed by feasibility.
inline bool generic_monoid_member(const Polyhedron& p, const LatticeVec& u) {
  const bool by_rays = TiltedAlgebra(p).bounded(u);
  if (by_rays != generic_monoid_member_by_feasibility(p, u))
    throw Error("recession test and feasibility test disagree on " + lattice_str(u));
  return by_rays;
}

/// Whether f lies in the ideal of the component of the level-i fiber indexed by the vertex w of
/// rec_i: the leading k - i coordinates of nu_w(f) are positive.
inline bool component_vanishes(const AdmissibleFan& fan, std::size_t level, const Point& w, const FormalLaurent& f) {
  if (level > fan.k()) throw InvalidArgument("level " + std::to_string(level) + " out of range");
  const auto verts = vertices(recession(fan, level));
  if (!std::binary_search(verts.begin(), verts.end(), w))
    throw InvalidArgument(w.str() + " is not a vertex at level " + std::to_string(level));
  if (f.empty()) throw InvalidArgument("the zero polynomial");
  for (const auto& t : f.terms())
    if (truncate(t.val + w.pair(t.u), level).sign() < 0)
      throw InvalidArgument("term " + lattice_str(t.u) + " is not regular at " + w.str());
  return truncate(vertex_valuation(w, f), level).sign() > 0;
}

}  // namespace lexfan
