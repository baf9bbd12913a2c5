#pragma once

// Small hand-built objects shared by the unit tests and the acceptance run.

#include <initializer_list>
#include <optional>
#include <vector>

#include "lexfan.hpp"

namespace fx {

using namespace lexfan;

inline LexVec lv(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.emplace_back(x);
  return LexVec(std::move(v));
}

inline Point pt(std::initializer_list<LexVec> rows) { return Point(std::vector<LexVec>(rows)); }

/// {lo <= v <= hi} on the line; either end may be open.
inline Polyhedron interval(std::optional<LexVec> lo, std::optional<LexVec> hi, std::size_t k = 2) {
  std::vector<Halfspace> hs;
  if (lo) hs.push_back({{1}, *lo});
  if (hi) hs.push_back({{-1}, -*hi});
  return Polyhedron(1, k, hs);
}

inline Polyhedron single(const LexVec& x) { return interval(x, x, x.k()); }

/// The three-vertex chain on the line over Q^(2): vertices (0,-1), (0,1), (1,0).
inline PolyComplex chain() {
  const auto a = lv({0, -1}), b = lv({0, 1}), c = lv({1, 0});
  return PolyComplex(1, 2,
                     {interval(a, a), interval(b, b), interval(c, c), interval(std::nullopt, a), interval(a, b),
                      interval(b, c), interval(c, std::nullopt)});
}

inline AdmissibleFan chain_fan() { return cone_over_complex(chain()); }

/// Unit square with its faces in n = 2, k = 1.
inline Polyhedron square() {
  return Polyhedron(2, 1, {{{1, 0}, lv({0})}, {{-1, 0}, lv({-1})}, {{0, 1}, lv({0})}, {{0, -1}, lv({-1})}});
}

inline FormalLaurent laurent(std::initializer_list<ValuedMonomial> terms) {
  return FormalLaurent(std::vector<ValuedMonomial>(terms));
}

}  // namespace fx
