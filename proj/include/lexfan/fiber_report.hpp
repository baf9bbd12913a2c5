#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lexfan/admissible.hpp"
#include "lexfan/hilbert.hpp"

namespace lexfan {

struct StarData {
  Point vertex;
  RationalFan fan;
  std::vector<RationalCone> maximal;                 // maximal cones of the star
  std::vector<std::vector<LatticeVec>> hilbert;      // Hilbert basis of the dual of each maximal cone
  bool complete = false;
};

struct LevelReport {
  std::size_t level = 0;
  PolyComplex complex;
  std::vector<Point> vertices;                               // one per component, sorted
  std::vector<StarData> stars;                               // parallel to vertices
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;  // vertex indices joined by a bounded 1-cell
  std::optional<RationalFan> fan;                             // last level only
  std::optional<bool> complete;                               // last level only

  std::size_t components() const noexcept { return vertices.size(); }
};

struct FiberReport {
  std::size_t n = 0;
  std::size_t k = 1;
  std::vector<LevelReport> levels;

  std::vector<std::size_t> component_counts() const {
    std::vector<std::size_t> out;
    for (const auto& l : levels) out.push_back(l.components());
    return out;
  }
};

inline StarData star_data(const PolyComplex& c, const Point& w) {
  StarData s{w, star_fan(c, w), {}, {}, false};
  s.maximal = s.fan.maximal_cones();
  for (const auto& cone : s.maximal) s.hilbert.push_back(hilbert_basis(cone));
  s.complete = is_complete_fan(s.fan);
  return s;
}

/// Pairs of vertex indices (a < b) that are the two endpoints of a bounded 1-cell of c.
inline std::vector<std::pair<std::size_t, std::size_t>> adjacency(const PolyComplex& c, const std::vector<Point>& verts) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : c.cells()) {
    if (!is_pointed(p)) continue;
    const Cell cell(p);
    if (cell.empty() || cell.dimension() != 1) continue;
    const auto vs = cell.vertices();
    if (vs.size() != 2 || !cell.key()->rays.empty()) continue;
    const auto a = std::lower_bound(verts.begin(), verts.end(), vs[0]) - verts.begin();
    const auto b = std::lower_bound(verts.begin(), verts.end(), vs[1]) - verts.begin();
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline LevelReport level_report(const AdmissibleFan& fan, std::size_t level) {
  LevelReport r;
  r.level = level;
  r.complex = recession(fan, level);
  r.vertices = vertices(r.complex);
  for (const auto& w : r.vertices) r.stars.push_back(star_data(r.complex, w));
  r.adjacency = adjacency(r.complex, r.vertices);
  if (level == fan.k()) {
    r.fan = recession_fan(fan);
    r.complete = is_complete_fan(*r.fan);
  }
  return r;
}

/// Combinatorial data of every fiber of the model: components, their stars and how they meet.
inline FiberReport fiber_report(const AdmissibleFan& fan) {
  const auto check = validate_fan(fan);
  if (!check.valid) throw InvalidArgument("invalid fan: " + check.violations.front());
  FiberReport out{fan.n(), fan.k(), {}};
  for (std::size_t i = 0; i < fan.levels(); ++i) out.levels.push_back(level_report(fan, i));
  return out;
}

}  // namespace lexfan
