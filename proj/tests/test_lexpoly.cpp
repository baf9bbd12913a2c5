#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace lexfan;
using fx::interval;
using fx::lv;
using fx::pt;

TEST(Feasibility, SegmentMidpoint) {
  const auto r = feasible(1, 2, {Constraint{{{1}, lv({0, -1})}}, Constraint{{{-1}, lv({0, -1})}}});
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(*r.witness, pt({lv({0, 0})}));
}

TEST(Feasibility, ContradictoryBounds) {
  EXPECT_FALSE(feasible(1, 2, {Constraint{{{1}, lv({1, 0})}}, Constraint{{{-1}, lv({0, 0})}}}).feasible);
}

TEST(Feasibility, UniqueWitness) {
  const auto r = feasible(1, 2, {Constraint{{{1}, lv({0, 1})}}, Constraint{{{-1}, lv({0, -1})}}});
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(*r.witness, pt({lv({0, 1})}));
}

TEST(Feasibility, StrictAndEquality) {
  // 0 < v < (0,1) is nonempty; v = (1,0) with v > (1,0) is not
  EXPECT_TRUE(feasible(1, 2, {Constraint{{{1}, lv({0, 0})}, Relation::Gt}, Constraint{{{-1}, lv({0, -1})}, Relation::Gt}})
                  .feasible);
  EXPECT_FALSE(feasible(1, 2, {Constraint{{{1}, lv({1, 0})}, Relation::Eq}, Constraint{{{1}, lv({1, 0})}, Relation::Gt}})
                   .feasible);
  EXPECT_THROW(feasible(1, 2, {Constraint{{{1, 0}, lv({0, 0})}}}), DimensionMismatch);
}

TEST(Feasibility, AgreesWithPatternOracle) {
  gen::Rng rng(21);
  for (int it = 0; it < 300; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 2)), k = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto cs = gen::system(rng, n, k, static_cast<std::size_t>(rng.uniform(1, 6)));
    const auto r = feasible(n, k, cs);
    ASSERT_EQ(r.feasible, oracle::feasible_by_patterns(n, k, cs)) << "iteration " << it;
    if (r.feasible)
      for (const auto& c : cs) ASSERT_TRUE(satisfies(*r.witness, c));
  }
}

TEST(Faces, SegmentHasThree) {
  const auto seg = interval(lv({0, -1}), lv({0, 1}));
  const auto lat = face_lattice(seg);
  EXPECT_EQ(lat.faces.size(), 3u);
  EXPECT_EQ(dimension(seg), 1u);
  EXPECT_EQ(vertices(seg), (std::vector<Point>{pt({lv({0, -1})}), pt({lv({0, 1})})}));
}

TEST(Faces, HalfLine) {
  const auto ray = interval(lv({0, 0}), std::nullopt);
  EXPECT_EQ(enumerate_faces(ray).size(), 2u);
  const auto r10 = interval(lv({1, 0}), std::nullopt);
  EXPECT_EQ(vertices(r10), std::vector<Point>{pt({lv({1, 0})})});
}

TEST(Faces, DimensionExamples) {
  EXPECT_EQ(dimension(fx::single(lv({0, 1}))), 0u);
  EXPECT_EQ(dimension(interval(lv({0, 0}), lv({1, 0}))), 1u);
  EXPECT_EQ(dimension(fx::square()), 2u);
  EXPECT_THROW(dimension(interval(lv({1, 0}), lv({0, 0}))), EmptyPolyhedron);
  EXPECT_TRUE(enumerate_faces(interval(lv({1, 0}), lv({0, 0}))).empty());
}

TEST(Faces, SquareMatchesOracle) {
  const auto sq = fx::square();
  EXPECT_EQ(enumerate_faces(sq).size(), 9u);
  EXPECT_EQ(enumerate_faces(sq).size(), oracle::face_count(sq));
  EXPECT_EQ(vertices(sq).size(), 4u);
}

TEST(Faces, VerticesNeedPointedness) {
  EXPECT_THROW(vertices(Polyhedron(2, 1, {{{1, 0}, lv({0})}})), NotPointed);
  EXPECT_THROW(vertices(interval(lv({1, 0}), lv({0, 0}))), EmptyPolyhedron);
}

TEST(Faces, RandomAgainstOracles) {
  gen::Rng rng(22);
  for (int it = 0; it < 150; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 2)), k = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto p = gen::polyhedron(rng, n, k, static_cast<std::size_t>(rng.uniform(1, 4)));
    const auto lat = face_lattice(p);
    ASSERT_EQ(lat.faces.size(), oracle::face_count(p)) << "iteration " << it;
    if (lat.empty()) continue;
    // transitivity: faces of faces are faces
    for (std::size_t f = 0; f < lat.faces.size(); ++f) {
      const auto fp = face_polyhedron(p, lat.faces[f].tight);
      for (const auto& g : enumerate_faces(fp)) {
        const auto gp = face_polyhedron(fp, g.tight);
        bool found = false;
        for (const auto& h : lat.faces) found = found || same_set(gp, face_polyhedron(p, h.tight));
        ASSERT_TRUE(found);
      }
    }
    if (!is_pointed(p)) continue;
    const auto vs = vertices(lat, p);
    ASSERT_EQ(vs, oracle::vertices(p)) << "iteration " << it;
    for (std::size_t f = 0; f < lat.faces.size(); ++f) {
      std::vector<LatticeVec> us;
      for (auto l : lat.faces[f].tight) us.push_back(p.halfspaces()[l].u);
      EXPECT_EQ(lattice_rank(us, n) == n, lat.dims[f] == 0);
    }
  }
}

TEST(Lineality, Examples) {
  EXPECT_TRUE(lineality(interval(lv({0, -1}), lv({0, 1}))).pointed());
  const auto l = lineality(Polyhedron(2, 1, {{{1, 0}, lv({0})}}));
  ASSERT_EQ(l.v_z.size(), 1u);
  EXPECT_EQ(primitive(l.v_z[0]) == LatticeVec({0, 1}) || primitive(l.v_z[0]) == LatticeVec({0, -1}), true);
  EXPECT_EQ(lineality(Polyhedron(1, 2, {})).v_z.size(), 1u);
}

TEST(Lineality, KernelIsSaturatedAndTranslatesP) {
  gen::Rng rng(23);
  for (int it = 0; it < 200; ++it) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto p = rng.coin() ? gen::unpointed_polyhedron(rng, k) : gen::polyhedron(rng, 2, k, 3);
    const auto l = lineality(p);
    ASSERT_TRUE(oracle::saturated(l.v_z, 2));
    ASSERT_TRUE(oracle::saturated(l.v_perp, 2));
    ASSERT_EQ(l.v_z.size() + l.v_perp.size(), 2u);
    for (const auto& d : l.v_z)
      for (const auto& h : p.halfspaces()) ASSERT_EQ(dot(h.u, d), 0);
    const auto w = feasible(p);
    if (!w.feasible) continue;
    for (const auto& d : l.v_z) {
      const auto t = rng.lexvec(k, 3);
      Point plus = *w.witness, minus = *w.witness;
      for (std::size_t j = 0; j < 2; ++j) {
        plus[j] += Rational(static_cast<long>(d[j])) * t;
        minus[j] -= Rational(static_cast<long>(d[j])) * t;
      }
      ASSERT_TRUE(p.contains(plus));
      ASSERT_TRUE(p.contains(minus));
    }
  }
}

TEST(Lineality, PointedQuotientExample) {
  const Polyhedron p(2, 2, {{{1, 0}, lv({2, 0})}});
  const auto q = pointed_quotient(p);
  ASSERT_EQ(q.polyhedron.n(), 1u);
  ASSERT_EQ(q.polyhedron.size(), 1u);
  const auto& h = q.polyhedron.halfspaces()[0];
  EXPECT_EQ(h.u[0] > 0 ? h.gamma : -h.gamma, lv({2, 0}));
  EXPECT_TRUE(is_pointed(q.polyhedron));
}

TEST(Lineality, QuotientMembershipMatches) {
  gen::Rng rng(24);
  for (int it = 0; it < 200; ++it) {
    const auto p = gen::unpointed_polyhedron(rng, 2);
    const auto q = pointed_quotient(p);
    ASSERT_TRUE(is_pointed(q.polyhedron));
    for (int s = 0; s < 10; ++s) {
      const auto v = rng.point(2, 2, 4);
      ASSERT_EQ(p.contains(v), q.polyhedron.contains(q.map.project(v)));
    }
  }
}

TEST(Complexes, ChainIsValid) {
  const auto c = fx::chain();
  EXPECT_TRUE(validate_complex(c).valid);
  EXPECT_EQ(vertices(c), (std::vector<Point>{pt({lv({0, -1})}), pt({lv({0, 1})}), pt({lv({1, 0})})}));
  EXPECT_EQ(incidences(c), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}}));
}

TEST(Complexes, MissingVertex) {
  auto cells = fx::chain().cells();
  cells.erase(cells.begin() + 1);
  const auto r = validate_complex(PolyComplex(1, 2, cells));
  ASSERT_FALSE(r.valid);
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(), [](const Violation& v) { return v.kind == "missing-face"; }));
}

TEST(Complexes, OverlappingSegments) {
  const auto a = lv({0, -1}), b = lv({0, 1}), z = lv({0, 0}), c = lv({1, 0});
  const PolyComplex bad(1, 2,
                        {interval(a, b), interval(z, c), fx::single(a), fx::single(b), fx::single(z), fx::single(c)});
  const auto r = validate_complex(bad);
  ASSERT_FALSE(r.valid);
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                          [](const Violation& v) { return v.kind == "bad-intersection"; }));
  // the intersection [(0,0),(0,1)] is not a face of the first segment
  const auto meet = intersect(interval(a, b), interval(z, c));
  const auto lat = face_lattice(interval(a, b));
  for (const auto& f : lat.faces) EXPECT_FALSE(same_set(meet, face_polyhedron(interval(a, b), f.tight)));
}

TEST(Complexes, DuplicateAndEmptyCells) {
  const auto a = lv({0, 0});
  auto r = validate_complex(PolyComplex(1, 2, {fx::single(a), fx::single(a)}));
  EXPECT_FALSE(r.valid);
  r = validate_complex(PolyComplex(1, 2, {interval(lv({1, 0}), lv({0, 0}))}));
  EXPECT_FALSE(r.valid);
}

TEST(Stars, ChainVertices) {
  const auto c = fx::chain();
  for (const auto& w : {pt({lv({0, 1})}), pt({lv({0, -1})})}) {
    const auto f = star_fan(c, w);
    EXPECT_EQ(f.cones().size(), 3u);
    EXPECT_TRUE(is_complete_fan(f));
  }
  EXPECT_THROW(star_fan(c, pt({lv({0, 0})})), InvalidArgument);
}

TEST(Stars, IsolatedPoint) {
  const PolyComplex c(1, 2, {fx::single(lv({3, 1}))});
  const auto f = star_fan(c, pt({lv({3, 1})}));
  ASSERT_EQ(f.cones().size(), 1u);
  EXPECT_EQ(f.cones()[0], RationalCone::origin(1));
  EXPECT_FALSE(is_complete_fan(f));
}

TEST(Stars, ConeCountMatchesCellsThroughVertex) {
  gen::Rng rng(25);
  for (int it = 0; it < 60; ++it) {
    const auto c = gen::complex(rng, 2);
    ASSERT_TRUE(validate_complex(c).valid) << "iteration " << it;
    for (const auto& w : vertices(c)) {
      const auto f = star_fan(c, w);
      const auto through = std::count_if(c.cells().begin(), c.cells().end(), [&](const Polyhedron& p) { return p.contains(w); });
      EXPECT_EQ(static_cast<long>(f.cones().size()), through);
      EXPECT_TRUE(validate(f).valid);
      for (const auto& cone : f.cones()) EXPECT_TRUE(is_pointed(Polyhedron(c.n(), 1, cone.halfspaces())));
    }
  }
}

TEST(Fans, CompletenessExamples) {
  const auto pos = RationalCone::from_rays(1, {{1}}), neg = RationalCone::from_rays(1, {{-1}});
  EXPECT_TRUE(is_complete_fan(RationalFan(1, {pos, neg, RationalCone::origin(1)})));
  EXPECT_FALSE(is_complete_fan(RationalFan(1, {pos, RationalCone::origin(1)})));

  const LatticeVec a{1, 0}, b{0, 1}, c{-1, -1};
  const RationalFan p2 = RationalFan(2, {RationalCone::from_rays(2, {a, b}), RationalCone::from_rays(2, {b, c}),
                                         RationalCone::from_rays(2, {c, a})})
                             .face_closure();
  EXPECT_EQ(p2.cones().size(), 7u);
  EXPECT_TRUE(validate(p2).valid);
  EXPECT_TRUE(is_complete_fan(p2));
  // each ray lies in exactly two 2-cones
  for (const auto& r : {a, b, c}) {
    int count = 0;
    for (const auto& m : p2.maximal_cones())
      count += std::find(m.rays().begin(), m.rays().end(), r) != m.rays().end();
    EXPECT_EQ(count, 2);
  }
  const RationalFan missing = RationalFan(2, {RationalCone::from_rays(2, {a, b}), RationalCone::from_rays(2, {b, c})}).face_closure();
  EXPECT_FALSE(is_complete_fan(missing));
}

TEST(Fans, OverlapIsInvalid) {
  const RationalFan f = RationalFan(2, {RationalCone::from_rays(2, {{1, 0}, {0, 1}}), RationalCone::from_rays(2, {{1, 1}, {-1, 1}})})
                            .face_closure();
  EXPECT_FALSE(validate(f).valid);
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert_basis(RationalCone::from_rays(2, {{1, 0}, {0, 1}})), (std::vector<LatticeVec>{{0, 1}, {1, 0}}));
  EXPECT_EQ(hilbert_basis(RationalCone::from_rays(2, {{1, 0}, {1, 2}})), (std::vector<LatticeVec>{{0, 1}, {1, 0}, {2, -1}}));
  EXPECT_EQ(hilbert_basis(RationalCone::origin(1)), (std::vector<LatticeVec>{{-1}, {1}}));
  // a ray in rank 2: dual is a half-plane
  const auto h = hilbert_basis(RationalCone::from_rays(2, {{1, 0}}));
  EXPECT_EQ(std::set<LatticeVec>(h.begin(), h.end()), (std::set<LatticeVec>{{0, 1}, {0, -1}, {1, 0}}));
}

TEST(Hilbert, MatchesOracleAndIsMinimal) {
  gen::Rng rng(26);
  for (int it = 0; it < 60; ++it) {
    const auto a = primitive(rng.nonzero_lattice(2, 5));
    auto b = primitive(rng.nonzero_lattice(2, 5));
    if (a[0] * b[1] - a[1] * b[0] == 0) continue;
    const auto got = hilbert_basis(RationalCone::from_rays(2, {a, b}));
    ASSERT_EQ(got, oracle::hilbert_basis_2d(a, b)) << lattice_str(a) << " " << lattice_str(b);
    // no element is a sum of two others
    for (const auto& x : got)
      for (const auto& y : got)
        for (const auto& z : got) EXPECT_FALSE(x[0] == y[0] + z[0] && x[1] == y[1] + z[1]);
  }
}
