#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace lexfan;
using fx::interval;
using fx::lv;
using fx::pt;

TEST(ConeOverCell, Segment) {
  const auto sigma = cone_over_cell(interval(lv({0, -1}), lv({0, 1})));
  EXPECT_EQ(sigma.constraints(),
            (std::vector<Halfspace>{{{1}, lv({0, 1})}, {{-1}, lv({0, 1})}}));
  EXPECT_TRUE(same_set(recession(sigma, 0), interval(lv({0, -1}), lv({0, 1}))));
  EXPECT_TRUE(is_admissible(sigma));
}

TEST(ConeOverCell, OriginIsSliceIndependent) {
  const auto sigma = cone_over_cell(fx::single(lv({0, 0})));
  for (std::size_t i = 0; i < sigma.levels(); ++i) EXPECT_TRUE(same_set(recession(sigma, i), fx::single(lv({0, 0}))));
}

TEST(ConeOverCell, SliceRecoversCellOnRandomCells) {
  gen::Rng rng(31);
  for (int it = 0; it < 200; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto p = gen::polyhedron(rng, n, 2, static_cast<std::size_t>(rng.uniform(0, 4)));
    ASSERT_TRUE(same_set(recession(cone_over_cell(p), 0), p));
  }
}

TEST(Admissibility, Examples) {
  EXPECT_FALSE(is_admissible(AdmissibleCone(1, 2, {})));
  EXPECT_FALSE(is_admissible(AdmissibleCone(2, 1, {{{1, 0}, lv({0})}, {{-1, 0}, lv({1})}})));
  const auto fan = fx::chain_fan();
  for (const auto& sigma : fan.cones()) EXPECT_TRUE(is_admissible(sigma));
}

TEST(Recession, ChainLevels) {
  const auto fan = fx::chain_fan();
  EXPECT_EQ(fan.size(), 15u);
  const auto r0 = recession(fan, 0), r1 = recession(fan, 1), r2 = recession(fan, 2);
  EXPECT_EQ(vertices(r0), (std::vector<Point>{pt({lv({0, -1})}), pt({lv({0, 1})}), pt({lv({1, 0})})}));
  EXPECT_EQ(vertices(r1), (std::vector<Point>{pt({lv({0, 0})}), pt({lv({1, 0})})}));
  EXPECT_EQ(vertices(r2), std::vector<Point>{pt({lv({0, 0})})});
  EXPECT_EQ(r2.size(), 3u);
  EXPECT_TRUE(is_complete_fan(recession_fan(fan)));
  EXPECT_THROW(recession(fan, 3), InvalidArgument);
  // level 0 is the input complex cell for cell
  const auto c = fx::chain();
  ASSERT_EQ(r0.size(), c.size());
  for (const auto& cell : c.cells())
    EXPECT_EQ(std::count_if(r0.cells().begin(), r0.cells().end(), [&](const Polyhedron& q) { return same_set(q, cell); }), 1);
}

TEST(Recession, ConstantsLieInTruncationImage) {
  gen::Rng rng(32);
  for (int it = 0; it < 200; ++it) {
    const auto p = gen::polyhedron(rng, 2, 3, 4);
    const auto sigma = cone_over_cell(p);
    for (std::size_t i = 0; i <= 3; ++i) {
      const auto slice = recession(sigma, i);
      for (const auto& h : slice.halfspaces()) {
        EXPECT_EQ(truncate(h.gamma, i), h.gamma);
      }
    }
    for (const auto& c : sigma.constraints()) {
      const auto g = -c.gamma;
      for (std::size_t i = 0; i <= 3; ++i) {
        const auto t = truncate(g, i);
        EXPECT_TRUE(t.is_zero() || arch_level(t) >= arch_level(g));
        for (std::size_t m = i; m <= 3; ++m) EXPECT_EQ(truncate(t, m), truncate(g, m));
      }
    }
  }
}

TEST(ValidateFan, ChainIsValid) {
  const auto r = validate_fan(fx::chain_fan());
  EXPECT_TRUE(r.valid) << (r.violations.empty() ? "" : r.violations.front());
}

TEST(ValidateFan, DeletedConstraintBreaksAdmissibility) {
  auto cones = fx::chain_fan().cones();
  for (auto& c : cones)
    if (c.constraints().size() == 1) {
      c = AdmissibleCone(1, 2, {});
      break;
    }
  EXPECT_FALSE(validate_fan(AdmissibleFan(1, 2, cones)).valid);
}

TEST(ValidateFan, OverlapAtLevelZero) {
  const auto a = cone_over_cell(interval(lv({0, -1}), lv({0, 1})));
  const auto b = cone_over_cell(interval(lv({0, 0}), lv({1, 0})));
  const auto fan = close_under_faces(AdmissibleFan(1, 2, {a, b}));
  const auto r = validate_fan(fan);
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(validate_complex(recession(fan, 0)).valid);
}

TEST(ConeOverComplex, SinglePoint) {
  const auto fan = cone_over_complex(PolyComplex(1, 2, {fx::single(lv({2, 1}))}));
  EXPECT_TRUE(validate_fan(fan).valid);
  EXPECT_GE(fan.size(), 1u);
  EXPECT_EQ(vertices(recession(fan, 0)), std::vector<Point>{pt({lv({2, 1})})});
}

TEST(ConeOverComplex, RejectsInvalidComplex) {
  const auto a = lv({0, -1}), b = lv({0, 1}), z = lv({0, 0}), c = lv({1, 0});
  const PolyComplex bad(1, 2, {interval(a, b), interval(z, c), fx::single(a), fx::single(b), fx::single(z), fx::single(c)});
  EXPECT_THROW(cone_over_complex(bad), Error);
}

TEST(ConeOverComplex, RandomComplexes) {
  gen::Rng rng(33);
  for (int it = 0; it < 40; ++it) {
    const auto c = gen::complex(rng, 2);
    const auto fan = cone_over_complex(c);
    const auto check = validate_fan(fan);
    ASSERT_TRUE(check.valid) << it << ": " << (check.violations.empty() ? "" : check.violations.front());
    const auto r0 = recession(fan, 0);
    ASSERT_EQ(r0.size(), c.size());
    for (const auto& cell : c.cells())
      EXPECT_TRUE(std::any_of(r0.cells().begin(), r0.cells().end(), [&](const Polyhedron& q) { return same_set(q, cell); }));
    const auto last = recession(fan, 2);
    for (const auto& cell : last.cells()) EXPECT_TRUE(lineality(cell).pointed());
    EXPECT_TRUE(validate(recession_fan(fan)).valid);
  }
}
