#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lexfan/cone.hpp"

namespace lexfan {

namespace detail {

/// Irreducible elements of the pointed full-dimensional monoid {y in Z^r : rows y >= 0}.
inline std::vector<LatticeVec> pointed_hilbert_basis(const std::vector<LatticeVec>& rows, std::size_t r) {
  if (r == 0) return {};
  const auto gens = extreme_rays(rows, r);
  auto inside = [&](const LatticeVec& y) { return satisfies_all(rows, y); };

  std::vector<LatticeVec> cand = gens;
  if (gens.size() == r) {
    // Simplicial: lattice points of the half-open fundamental parallelepiped.
    RatMatrix g(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) g[j][i] = static_cast<long>(gens[i][j]);
    const auto ginv = *invert(g);
    std::vector<std::int64_t> lo(r, 0), hi(r, 0);
    for (const auto& v : gens)
      for (std::size_t j = 0; j < r; ++j) (v[j] < 0 ? lo[j] : hi[j]) += v[j];
    LatticeVec y = lo;
    while (true) {
      bool in = !is_zero(y);
      for (std::size_t i = 0; i < r && in; ++i) {
        Rational lambda = 0;
        for (std::size_t j = 0; j < r; ++j) lambda += ginv[i][j] * static_cast<long>(y[j]);
        in = lambda >= 0 && lambda < 1;
      }
      if (in) cand.push_back(y);
      std::size_t j = 0;
      for (; j < r && y[j] == hi[j]; ++j) y[j] = lo[j];
      if (j == r) break;
      ++y[j];
    }
  } else {
    // Lattice points of the zonotope's bounding box that lie in the cone.
    std::vector<std::int64_t> lo(r, 0), hi(r, 0);
    for (const auto& v : gens)
      for (std::size_t j = 0; j < r; ++j) (v[j] < 0 ? lo[j] : hi[j]) += v[j];
    LatticeVec y = lo;
    while (true) {
      if (!is_zero(y) && inside(y)) cand.push_back(y);
      std::size_t j = 0;
      for (; j < r && y[j] == hi[j]; ++j) y[j] = lo[j];
      if (j == r) break;
      ++y[j];
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<LatticeVec> basis;
  for (const auto& x : cand) {
    bool reducible = false;
    for (const auto& y : cand) {
      if (y == x) continue;
      LatticeVec d(r);
      for (std::size_t j = 0; j < r; ++j) d[j] = x[j] - y[j];
      if (inside(d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

}  // namespace detail

/// Generators of S = {u in M : <u,d> >= 0 for d in sigma}: the units of S come as a basis
/// with both signs, followed by the irreducibles of the pointed part. Sorted.
inline std::vector<LatticeVec> hilbert_basis(const RationalCone& sigma) {
  const std::size_t n = sigma.n();
  BasisMap map(sigma.rays(), n);
  std::vector<LatticeVec> out;
  for (const auto& z : map.kernel_basis()) {
    out.push_back(z);
    out.push_back(negated(z));
  }
  std::vector<LatticeVec> h;
  for (const auto& g : sigma.rays()) h.push_back(map.to_quotient(g));
  for (const auto& y : detail::pointed_hilbert_basis(h, map.rank())) out.push_back(map.lift(y));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lexfan
