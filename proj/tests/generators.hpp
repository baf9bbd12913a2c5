#pragma once

// Seeded random instances for property tests and the acceptance run.

#include <algorithm>
#include <random>
#include <vector>

#include "lexfan.hpp"

namespace gen {

using namespace lexfan;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  template <class T>
  const T& pick(const std::vector<T>& xs) { return xs[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(xs.size()) - 1))]; }
  template <class T>
  void shuffle(std::vector<T>& xs) { std::shuffle(xs.begin(), xs.end(), eng_); }

  Rational rational(std::int64_t range, std::int64_t max_den = 1) {
    return Rational(static_cast<long>(uniform(-range, range)), static_cast<unsigned long>(uniform(1, max_den)));
  }

  LexVec lexvec(std::size_t k, std::int64_t range, std::int64_t max_den = 1) {
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < k; ++i) {
      xs.push_back(rational(range, max_den));
      xs.back().canonicalize();
    }
    return LexVec(std::move(xs));
  }

  /// Strictly positive in lex order.
  LexVec positive_lexvec(std::size_t k, std::int64_t range) {
    while (true) {
      auto g = lexvec(k, range);
      if (g.sign() > 0) return g;
    }
  }

  LatticeVec lattice(std::size_t n, std::int64_t range) {
    LatticeVec u(n);
    for (auto& x : u) x = uniform(-range, range);
    return u;
  }

  LatticeVec nonzero_lattice(std::size_t n, std::int64_t range) {
    while (true) {
      auto u = lattice(n, range);
      if (!is_zero(u)) return u;
    }
  }

  Point point(std::size_t n, std::size_t k, std::int64_t range) {
    std::vector<LexVec> rows;
    for (std::size_t j = 0; j < n; ++j) rows.push_back(lexvec(k, range));
    return Point(std::move(rows), k);
  }

  Multiplier multiplier(std::size_t k) {
    std::vector<Rational> r;
    for (std::size_t i = 0; i < k; ++i) r.push_back(Rational(static_cast<long>(uniform(-2, 3))));
    return Multiplier(std::move(r));
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// A random lex-linear system with relations drawn from {>=, =, >}.
inline std::vector<Constraint> system(Rng& rng, std::size_t n, std::size_t k, std::size_t m) {
  std::vector<Constraint> cs;
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = rng.uniform(0, 9);
    const Relation rel = r < 6 ? Relation::Ge : (r < 8 ? Relation::Gt : Relation::Eq);
    cs.push_back({{rng.lattice(n, 2), rng.lexvec(k, 2)}, rel});
  }
  return cs;
}

inline Polyhedron polyhedron(Rng& rng, std::size_t n, std::size_t k, std::size_t m) {
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < m; ++i) hs.push_back({rng.nonzero_lattice(n, 2), rng.lexvec(k, 3)});
  return Polyhedron(n, k, hs);
}

/// Nonempty and pointed, built around a random interior point so that emptiness is rare.
inline Polyhedron pointed_polyhedron(Rng& rng, std::size_t n, std::size_t k, std::size_t max_m = 4) {
  while (true) {
    const auto center = rng.point(n, k, 2);
    std::vector<Halfspace> hs;
    const auto m = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(n), static_cast<std::int64_t>(max_m)));
    for (std::size_t i = 0; i < m; ++i) {
      auto u = rng.nonzero_lattice(n, 2);
      // gamma at or below <u, center>, so the center stays inside
      LexVec slack = rng.coin(0.3) ? LexVec(k) : rng.positive_lexvec(k, 2);
      hs.push_back({u, center.pair(u) - slack});
    }
    Polyhedron p(n, k, hs);
    if (is_pointed(p) && !is_empty(p)) return p;
  }
}

/// Nonempty with lineality: every normal is a multiple of one primitive direction w in rank 2.
inline Polyhedron unpointed_polyhedron(Rng& rng, std::size_t k) {
  while (true) {
    const auto w = primitive(rng.nonzero_lattice(2, 3));
    const auto center = rng.point(2, k, 2);
    std::vector<Halfspace> hs;
    const auto m = rng.uniform(1, 3);
    for (std::int64_t i = 0; i < m; ++i) {
      const std::int64_t s = rng.coin() ? 1 : -1;
      const LatticeVec u{s * w[0], s * w[1]};
      hs.push_back({u, center.pair(u) - (rng.coin(0.3) ? LexVec(k) : rng.positive_lexvec(k, 2))});
    }
    Polyhedron p(2, k, hs);
    if (!is_pointed(p) && !is_empty(p)) return p;
  }
}

/// A monomial exponent bounded below on P (in the dual of its recession cone).
inline LatticeVec bounded_exponent(Rng& rng, const TiltedAlgebra& alg, std::size_t n, std::int64_t range) {
  for (int tries = 0; tries < 200; ++tries) {
    auto u = rng.lattice(n, range);
    if (alg.bounded(u)) return u;
  }
  return LatticeVec(n, 0);
}

inline FormalLaurent laurent(Rng& rng, const TiltedAlgebra& alg, std::size_t n, std::size_t k, std::size_t max_terms) {
  std::vector<ValuedMonomial> terms;
  const auto m = rng.uniform(1, static_cast<std::int64_t>(max_terms));
  for (std::int64_t i = 0; i < m; ++i) {
    auto u = bounded_exponent(rng, alg, n, 2);
    if (std::any_of(terms.begin(), terms.end(), [&](const ValuedMonomial& t) { return t.u == u; })) continue;
    terms.push_back({u, rng.lexvec(k, 3)});
  }
  return FormalLaurent(std::move(terms));
}

// Random complexes.

namespace detail {

inline Point shift(const Point& p, const LatticeVec& d, const LexVec& t) {
  Point q = p;
  for (std::size_t j = 0; j < p.n(); ++j) q[j] += Rational(static_cast<long>(d[j])) * t;
  return q;
}

/// Integer normal orthogonal to d in rank 2, oriented to pair positively with `toward`.
inline LatticeVec normal_to(const LatticeVec& d, const LatticeVec& toward) {
  LatticeVec w{-d[1], d[0]};
  if (dot(w, toward) < 0) w = negated(w);
  return primitive(w);
}

inline std::int64_t det(const LatticeVec& a, const LatticeVec& b) { return a[0] * b[1] - a[1] * b[0]; }

inline LatticeVec independent_of(Rng& rng, const LatticeVec& d) {
  while (true) {
    auto e = primitive(rng.nonzero_lattice(2, 2));
    if (det(d, e) != 0) return e;
  }
}

}  // namespace detail

/// Cells of a face-closed piece of a subdivision of the line at 1 <= m <= 3 breakpoints.
inline std::vector<Polyhedron> line_complex(Rng& rng, std::size_t k) {
  const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
  std::vector<LexVec> b;
  while (b.size() < m) {
    auto g = rng.lexvec(k, 3);
    if (std::find(b.begin(), b.end(), g) == b.end()) b.push_back(g);
  }
  std::sort(b.begin(), b.end());
  // Pieces in order: ray below b0, b0, [b0,b1], b1, ..., ray above b_{m-1}; choose a contiguous window.
  std::vector<Polyhedron> pieces;
  pieces.emplace_back(1, k, std::vector<Halfspace>{{{-1}, -b[0]}});
  for (std::size_t i = 0; i < m; ++i) {
    pieces.emplace_back(1, k, std::vector<Halfspace>{{{1}, b[i]}, {{-1}, -b[i]}});
    if (i + 1 < m) pieces.emplace_back(1, k, std::vector<Halfspace>{{{1}, b[i]}, {{-1}, -b[i + 1]}});
  }
  pieces.emplace_back(1, k, std::vector<Halfspace>{{{1}, b[m - 1]}});
  // Even positions are 1-cells, odd positions are points; windows start and end on points
  // unless they run to an end.
  std::vector<Polyhedron> cells;
  while (cells.empty() || cells.size() > 6) {
    auto lo = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pieces.size()) - 1));
    auto hi = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(pieces.size()) - 1));
    if (lo % 2 == 0 && lo != 0) --lo;
    if (hi % 2 == 0 && hi + 1 != pieces.size()) ++hi;
    cells.assign(pieces.begin() + static_cast<std::ptrdiff_t>(lo), pieces.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  }
  return cells;
}

/// Apex, two rays and the cone between them, translated to a random point (4 cells).
inline std::vector<Polyhedron> translated_cone(Rng& rng, std::size_t k) {
  const auto p = rng.point(2, k, 2);
  const auto r1 = primitive(rng.nonzero_lattice(2, 2));
  const auto r2 = detail::independent_of(rng, r1);
  const auto wa = detail::normal_to(r1, r2), wb = detail::normal_to(r2, r1);
  const Halfspace ha{wa, p.pair(wa)}, hb{wb, p.pair(wb)};
  return {Polyhedron(2, k, {ha, hb}), Polyhedron(2, k, {ha, ha.negated(), hb}), Polyhedron(2, k, {ha, hb, hb.negated()}),
          Polyhedron(2, k, {ha, ha.negated(), hb, hb.negated()})};
}

/// A segment from p to p + d*lambda with lambda > 0 in the value group (3 cells).
inline std::vector<Polyhedron> segment(Rng& rng, std::size_t k) {
  const auto p = rng.point(2, k, 2);
  const auto d = primitive(rng.nonzero_lattice(2, 2));
  const auto q = detail::shift(p, d, rng.positive_lexvec(k, 3));
  const LatticeVec w{-d[1], d[0]};
  const Halfspace line{w, p.pair(w)}, lo{d, p.pair(d)}, hi{negated(d), -q.pair(d)};
  return {Polyhedron(2, k, {line, line.negated(), lo, hi}), Polyhedron(2, k, {line, line.negated(), lo, lo.negated()}),
          Polyhedron(2, k, {line, line.negated(), hi, hi.negated()})};
}

/// Two cones at a common apex sharing the ray r2 (6 cells).
inline std::vector<Polyhedron> two_cones(Rng& rng, std::size_t k) {
  const auto p = rng.point(2, k, 2);
  const auto r2 = primitive(rng.nonzero_lattice(2, 2));
  LatticeVec r1, r3;
  do {
    r1 = detail::independent_of(rng, r2);
    r3 = detail::independent_of(rng, r2);
  } while (detail::det(r2, r1) * detail::det(r2, r3) >= 0);
  // cone{r1,r2}: normals a (vanishing on r1) and b (vanishing on r2); cone{r2,r3}: b' and c.
  const auto a = detail::normal_to(r1, r2), b = detail::normal_to(r2, r1);
  const auto b2 = detail::normal_to(r2, r3), c = detail::normal_to(r3, r2);
  auto hs = [&](const LatticeVec& u) { return Halfspace{u, p.pair(u)}; };
  const Halfspace ha = hs(a), hb = hs(b), hb2 = hs(b2), hc = hs(c);
  return {Polyhedron(2, k, {ha, hb}),
          Polyhedron(2, k, {hb2, hc}),
          Polyhedron(2, k, {ha, ha.negated(), hb}),
          Polyhedron(2, k, {ha, hb, hb.negated()}),
          Polyhedron(2, k, {hc, hc.negated(), hb2}),
          Polyhedron(2, k, {ha, ha.negated(), hb, hb.negated()})};
}

/// {p + e*s + d*t : 0 <= s <= lambda, t >= 0} with its faces (6 cells).
inline std::vector<Polyhedron> half_strip(Rng& rng, std::size_t k) {
  const auto p = rng.point(2, k, 2);
  const auto d = primitive(rng.nonzero_lattice(2, 2));
  const auto e = detail::independent_of(rng, d);
  const auto q = detail::shift(p, e, rng.positive_lexvec(k, 3));
  const auto w1 = detail::normal_to(d, e), w2 = detail::normal_to(e, d);
  const Halfspace lo{w1, p.pair(w1)}, hi{negated(w1), -q.pair(w1)}, base{w2, p.pair(w2)};
  return {Polyhedron(2, k, {lo, hi, base}),
          Polyhedron(2, k, {lo, hi, base, base.negated()}),
          Polyhedron(2, k, {lo, lo.negated(), base}),
          Polyhedron(2, k, {hi, hi.negated(), base}),
          Polyhedron(2, k, {lo, lo.negated(), base, base.negated()}),
          Polyhedron(2, k, {hi, hi.negated(), base, base.negated()})};
}

/// One of the templates above (n = 1 or 2), with cells shuffled.
inline PolyComplex complex(Rng& rng, std::size_t k) {
  std::vector<Polyhedron> cells;
  std::size_t n = 2;
  switch (rng.uniform(0, 4)) {
    case 0:
      cells = line_complex(rng, k);
      n = 1;
      break;
    case 1: cells = translated_cone(rng, k); break;
    case 2: cells = segment(rng, k); break;
    case 3: cells = two_cones(rng, k); break;
    default: cells = half_strip(rng, k); break;
  }
  rng.shuffle(cells);
  return PolyComplex(n, k, std::move(cells));
}

}  // namespace gen
