#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexfan/cone.hpp"
#include "lexfan/faces.hpp"
#include "lexfan/feasibility.hpp"

namespace lexfan {

inline RationalCone recession_cone(const Polyhedron& p) { return RationalCone::from_inequalities(p.n(), p.normals()); }

/// Canonical description of a nonempty pointed polyhedron: vertices and recession rays.
/// Two such polyhedra are equal as sets iff their keys agree.
struct PolyKey {
  std::vector<Point> vertices;
  std::vector<LatticeVec> rays;
  friend bool operator==(const PolyKey&, const PolyKey&) = default;
  friend auto operator<=>(const PolyKey&, const PolyKey&) = default;
};

/// Keys of every face of a pointed polyhedron, in face-lattice order. Empty for empty P.
inline std::vector<PolyKey> face_keys(const Polyhedron& p, const FaceLattice& lat) {
  if (lat.empty()) return {};
  const auto rays = recession_cone(p).rays();
  std::vector<std::pair<TightSet, Point>> verts;
  for (const auto& f : lat.faces) {
    std::vector<LatticeVec> normals;
    for (auto l : f.tight) normals.push_back(p.halfspaces()[l].u);
    if (lattice_rank(normals, p.n()) == p.n()) verts.emplace_back(f.tight, solve_equalities(p.n(), p.k(), p.halfspaces(), f.tight));
  }
  std::vector<PolyKey> keys;
  for (const auto& f : lat.faces) {
    PolyKey key;
    for (const auto& [t, v] : verts)
      if (std::includes(t.begin(), t.end(), f.tight.begin(), f.tight.end())) key.vertices.push_back(v);
    for (const auto& r : rays)
      if (std::all_of(f.tight.begin(), f.tight.end(), [&](std::size_t l) { return dot(p.halfspaces()[l].u, r) == 0; }))
        key.rays.push_back(r);
    std::sort(key.vertices.begin(), key.vertices.end());
    keys.push_back(std::move(key));
  }
  return keys;
}

/// nullopt when P is empty or has lineality.
inline std::optional<PolyKey> set_key(const Polyhedron& p) {
  if (!is_pointed(p)) return std::nullopt;
  const auto lat = face_lattice(p);
  if (lat.empty()) return std::nullopt;
  return face_keys(p, lat).back();
}

/// A polyhedron together with the data needed to compare it and its faces as point sets.
class Cell {
 public:
  explicit Cell(Polyhedron p) : p_(std::move(p)), lattice_(face_lattice(p_)), pointed_(is_pointed(p_)) {
    if (pointed_) keys_ = face_keys(p_, lattice_);
  }

  const Polyhedron& polyhedron() const noexcept { return p_; }
  const FaceLattice& lattice() const noexcept { return lattice_; }
  bool empty() const noexcept { return lattice_.empty(); }
  bool pointed() const noexcept { return pointed_; }
  std::size_t face_count() const noexcept { return lattice_.faces.size(); }
  std::size_t dimension() const { return lattice_.dimension(); }
  Polyhedron face(std::size_t f) const { return face_polyhedron(p_, lattice_.faces[f].tight); }
  std::optional<PolyKey> face_key(std::size_t f) const {
    if (!pointed_) return std::nullopt;
    return keys_[f];
  }
  std::optional<PolyKey> key() const {
    if (!pointed_ || empty()) return std::nullopt;
    return keys_.back();
  }
  std::vector<Point> vertices() const {
    if (!pointed_ || empty()) return {};
    return keys_.back().vertices;
  }

 private:
  Polyhedron p_;
  FaceLattice lattice_;
  bool pointed_;
  std::vector<PolyKey> keys_;
};

/// Same point set, through keys when both sides have them.
inline bool same_points(const Polyhedron& a, const std::optional<PolyKey>& ka, const Polyhedron& b,
                        const std::optional<PolyKey>& kb) {
  if (ka && kb) return *ka == *kb;
  return same_set(a, b);
}

class PolyComplex {
 public:
  PolyComplex() = default;
  PolyComplex(std::size_t n, std::size_t k, std::vector<Polyhedron> cells) : n_(n), k_(k), cells_(std::move(cells)) {
    for (const auto& c : cells_)
      if (c.n() != n || c.k() != k) throw DimensionMismatch("cell of shape (" + std::to_string(c.n()) + "," +
                                                            std::to_string(c.k()) + ") in complex of shape (" +
                                                            std::to_string(n) + "," + std::to_string(k) + ")");
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const std::vector<Polyhedron>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 1;
  std::vector<Polyhedron> cells_;
};

struct Violation {
  std::string kind;  // "empty-cell", "missing-face", "bad-intersection", "duplicate-cell"
  std::size_t a = 0;
  std::optional<std::size_t> b;
  std::string message;
};

struct ComplexCheck {
  bool valid = true;
  std::vector<Violation> violations;
};

namespace detail {

inline std::optional<std::size_t> find_cell(const std::vector<Cell>& cells, const Polyhedron& p,
                                            const std::optional<PolyKey>& key) {
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (!cells[c].empty() && same_points(cells[c].polyhedron(), cells[c].key(), p, key)) return c;
  return std::nullopt;
}

inline bool is_face_of(const Cell& cell, const Polyhedron& p, const std::optional<PolyKey>& key) {
  for (std::size_t f = 0; f < cell.face_count(); ++f)
    if (same_points(cell.face(f), cell.face_key(f), p, key)) return true;
  return false;
}

}  // namespace detail

/// Checks that cells are nonempty and distinct, that every face of a cell is a cell, and that
/// two cells meet in a common face (or not at all).
inline ComplexCheck validate_complex(const PolyComplex& c) {
  ComplexCheck out;
  std::vector<Cell> cells;
  for (const auto& p : c.cells()) cells.emplace_back(p);
  auto report = [&](std::string kind, std::size_t a, std::optional<std::size_t> b, std::string msg) {
    out.violations.push_back({std::move(kind), a, b, std::move(msg)});
  };

  for (std::size_t a = 0; a < cells.size(); ++a) {
    if (cells[a].empty()) {
      report("empty-cell", a, std::nullopt, "cell " + std::to_string(a) + " is empty");
      continue;
    }
    for (std::size_t b = a + 1; b < cells.size(); ++b)
      if (!cells[b].empty() && same_points(cells[a].polyhedron(), cells[a].key(), cells[b].polyhedron(), cells[b].key()))
        report("duplicate-cell", a, b, "cells " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
    for (std::size_t f = 0; f < cells[a].face_count(); ++f)
      if (!detail::find_cell(cells, cells[a].face(f), cells[a].face_key(f)))
        report("missing-face", a, std::nullopt,
               "face " + std::to_string(f) + " of cell " + std::to_string(a) + " is not a cell");
  }

  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      if (cells[a].empty() || cells[b].empty()) continue;
      const auto x = intersect(cells[a].polyhedron(), cells[b].polyhedron());
      if (is_empty(x)) continue;
      const auto key = set_key(x);
      if (!detail::is_face_of(cells[a], x, key) || !detail::is_face_of(cells[b], x, key))
        report("bad-intersection", a, b,
               "cells " + std::to_string(a) + " and " + std::to_string(b) + " do not meet in a common face");
    }
  out.valid = out.violations.empty();
  return out;
}

/// Pairs (a, b), a != b, with cell a a face of cell b.
inline std::vector<std::pair<std::size_t, std::size_t>> incidences(const PolyComplex& c) {
  std::vector<Cell> cells;
  for (const auto& p : c.cells()) cells.emplace_back(p);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b)
      if (a != b && !cells[a].empty() && detail::is_face_of(cells[b], cells[a].polyhedron(), cells[a].key()))
        out.emplace_back(a, b);
  return out;
}

/// Vertices of all pointed cells, sorted.
inline std::vector<Point> vertices(const PolyComplex& c) {
  std::vector<Point> out;
  for (const auto& p : c.cells()) {
    if (!is_pointed(p) || is_empty(p)) continue;
    for (auto& v : vertices(p)) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline std::vector<LatticeVec> tight_normals(const Polyhedron& p, const Point& w) {
  std::vector<LatticeVec> out;
  for (const auto& h : p.halfspaces())
    if (h.tight_at(w)) out.push_back(h.u);
  return out;
}

}  // namespace detail

/// Cone of directions at w of every cell through w.
inline RationalFan star_fan(const PolyComplex& c, const Point& w) {
  if (w.n() != c.n() || w.k() != c.k()) throw DimensionMismatch("star point has the wrong shape");
  bool is_vertex = false;
  std::vector<RationalCone> cones;
  for (const auto& p : c.cells()) {
    if (!p.contains(w)) continue;
    const auto rows = detail::tight_normals(p, w);
    if (lattice_rank(rows, c.n()) != c.n()) continue;
    is_vertex = true;
    cones.push_back(RationalCone::from_inequalities(c.n(), rows));
  }
  if (!is_vertex) throw InvalidArgument(w.str() + " is not a vertex of the complex");
  for (const auto& p : c.cells())
    if (p.contains(w) && lattice_rank(detail::tight_normals(p, w), c.n()) != c.n())
      throw InvalidArgument("cell through " + w.str() + " does not have it as a vertex");
  return RationalFan(c.n(), cones);
}

}  // namespace lexfan
