#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "lexfan/feasibility.hpp"

namespace lexfan {

/// Sorted indices of constraints turned into equalities.
using TightSet = std::vector<std::size_t>;

struct Face {
  TightSet tight;  // maximal: every constraint that is an equality on the face
  Point witness;   // some point of the face
};

namespace detail {

inline std::vector<Constraint> face_system(std::span<const Halfspace> hs, const TightSet& tight) {
  std::vector<Constraint> cs;
  cs.reserve(hs.size());
  for (std::size_t l = 0; l < hs.size(); ++l)
    cs.push_back({hs[l], std::binary_search(tight.begin(), tight.end(), l) ? Relation::Eq : Relation::Ge});
  return cs;
}

}  // namespace detail

/// Canonicalizes the face cut out by `tight`: adds every constraint forced to equality on it.
/// Returns nullopt when that face is empty.
inline std::optional<Face> close_tight_set(std::size_t n, std::size_t k, std::span<const Halfspace> hs,
                                           const TightSet& tight) {
  auto cs = detail::face_system(hs, tight);
  auto base = feasible(n, k, cs);
  if (!base) return std::nullopt;
  Face face{tight, *base.witness};
  for (std::size_t l = 0; l < hs.size(); ++l) {
    if (cs[l].rel == Relation::Eq) continue;
    if (face.witness.pair(hs[l].u) > hs[l].gamma) continue;
    cs[l].rel = Relation::Gt;
    const bool can_be_strict = feasible(n, k, cs).feasible;
    cs[l].rel = Relation::Ge;
    if (!can_be_strict) face.tight.push_back(l);
  }
  std::sort(face.tight.begin(), face.tight.end());
  return face;
}

/// All nonempty faces of a halfspace system with inclusion data and flag ranks.
struct FaceLattice {
  std::vector<Face> faces;        // sorted by decreasing tight-set size, then by index set
  std::vector<std::size_t> dims;  // flag rank of each face

  /// Face a is contained in face b.
  bool includes(std::size_t a, std::size_t b) const {
    return std::includes(faces[a].tight.begin(), faces[a].tight.end(), faces[b].tight.begin(), faces[b].tight.end());
  }
  bool empty() const noexcept { return faces.empty(); }
  /// Flag rank of the whole polyhedron (the last face).
  std::size_t dimension() const { return dims.back(); }
};

inline FaceLattice face_lattice(std::size_t n, std::size_t k, std::span<const Halfspace> hs) {
  FaceLattice lat;
  auto top = close_tight_set(n, k, hs, {});
  if (!top) return lat;
  std::set<TightSet> seen{top->tight};
  std::deque<Face> queue{*top};
  while (!queue.empty()) {
    Face f = std::move(queue.front());
    queue.pop_front();
    for (std::size_t l = 0; l < hs.size(); ++l) {
      if (std::binary_search(f.tight.begin(), f.tight.end(), l)) continue;
      TightSet t = f.tight;
      t.insert(std::upper_bound(t.begin(), t.end(), l), l);
      auto g = close_tight_set(n, k, hs, t);
      if (g && seen.insert(g->tight).second) queue.push_back(*g);
    }
    lat.faces.push_back(std::move(f));
  }
  std::sort(lat.faces.begin(), lat.faces.end(), [](const Face& a, const Face& b) {
    if (a.tight.size() != b.tight.size()) return a.tight.size() > b.tight.size();
    return a.tight < b.tight;
  });
  // Proper subfaces have strictly larger tight sets, so they precede their superfaces.
  lat.dims.assign(lat.faces.size(), 0);
  for (std::size_t b = 0; b < lat.faces.size(); ++b)
    for (std::size_t a = 0; a < b; ++a)
      if (lat.faces[a].tight.size() > lat.faces[b].tight.size() && lat.includes(a, b))
        lat.dims[b] = std::max(lat.dims[b], lat.dims[a] + 1);
  return lat;
}

inline FaceLattice face_lattice(const Polyhedron& p) { return face_lattice(p.n(), p.k(), p.halfspaces()); }

inline std::vector<Face> enumerate_faces(const Polyhedron& p) { return face_lattice(p).faces; }

/// Maximum rank of a flag of nonempty faces.
inline std::size_t dimension(const Polyhedron& p) {
  const auto lat = face_lattice(p);
  if (lat.empty()) throw EmptyPolyhedron("dimension of an empty polyhedron");
  return lat.dimension();
}

/// The face as a polyhedron: P with each tight halfspace doubled into an equation.
inline Polyhedron face_polyhedron(const Polyhedron& p, const TightSet& tight) {
  std::vector<Halfspace> extra;
  for (auto l : tight) extra.push_back(p.halfspaces()[l].negated());
  return p.with(extra);
}

inline bool is_pointed(const Polyhedron& p) { return lattice_rank(p.normals(), p.n()) == p.n(); }

/// The unique point where the given constraints (normals of rank n) hold with equality.
inline Point solve_equalities(std::size_t n, std::size_t k, std::span<const Halfspace> hs,
                              const std::vector<std::size_t>& rows) {
  std::vector<LatticeVec> normals;
  for (auto r : rows) normals.push_back(hs[r].u);
  const auto basis = independent_rows(normals, n);
  if (basis.size() != n) throw InvalidArgument("equalities do not determine a point");
  RatMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto x : normals[basis[i]]) a[i].emplace_back(static_cast<long>(x));
  const auto inv = invert(a);
  Point v(n, k);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if ((*inv)[j][i] != 0) v[j] += (*inv)[j][i] * hs[rows[basis[i]]].gamma;
  return v;
}

/// Vertices of a pointed polyhedron, sorted: the faces whose tight normals have rank n.
inline std::vector<Point> vertices(const FaceLattice& lat, const Polyhedron& p) {
  std::vector<Point> out;
  for (std::size_t f = 0; f < lat.faces.size(); ++f) {
    std::vector<LatticeVec> normals;
    for (auto l : lat.faces[f].tight) normals.push_back(p.halfspaces()[l].u);
    if (lattice_rank(normals, p.n()) != p.n()) continue;
    if (lat.dims[f] != 0) throw Error("face with full-rank tight set has flag rank " + std::to_string(lat.dims[f]));
    out.push_back(solve_equalities(p.n(), p.k(), p.halfspaces(), lat.faces[f].tight));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Point> vertices(const Polyhedron& p) {
  if (!is_pointed(p)) throw NotPointed();
  const auto lat = face_lattice(p);
  if (lat.empty()) throw EmptyPolyhedron("vertices of an empty polyhedron");
  return vertices(lat, p);
}

}  // namespace lexfan
