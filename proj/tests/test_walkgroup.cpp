#include "generators.hpp"

#include <gtest/gtest.h>

using namespace qwalks;

namespace {

RationalFunction2 rf(const LaurentPoly2& n, const LaurentPoly2& d = LaurentPoly2(BigRational(1))) { return {n, d}; }

const RationalFunction2 x = RationalFunction2::x(), y = RationalFunction2::y();

} // namespace

TEST(Generators, SimpleWalk) {
  auto g = group::generators(parse("N,E,S,W"));
  EXPECT_EQ(g.phi, (group::BirationalMap{rf(mono(-1, 0)), y}));
  EXPECT_EQ(g.psi, (group::BirationalMap{x, rf(mono(0, -1))}));
}

TEST(Generators, Kreweras) {
  auto g = group::generators(parse("NE,S,W"));
  EXPECT_EQ(g.psi, (group::BirationalMap{x, rf(mono(-1, -1))}));
  EXPECT_EQ(g.phi, (group::BirationalMap{rf(mono(-1, -1)), y}));
}

TEST(Generators, DiagonalSteps) {
  auto g = group::generators(parse("NE,NW,SE,SW"));
  EXPECT_EQ(g.psi, (group::BirationalMap{x, rf(mono(0, -1))}));
}

TEST(Generators, MissingSection) {
  EXPECT_THROW(group::generators(parse("N,E,W")), Inapplicable);
  EXPECT_THROW(group::generators(parse("N,S,E")), Inapplicable);
}

TEST(Generators, AreInvolutions) {
  for (const auto& s : enumerate_models()) {
    auto g = group::generators(s);
    EXPECT_EQ(g.phi.after(g.phi), group::BirationalMap::identity()) << s.to_string();
    EXPECT_EQ(g.psi.after(g.psi), group::BirationalMap::identity()) << s.to_string();
  }
}

TEST(Orbit, SimpleWalk) {
  auto o = group::orbit(parse("N,E,S,W"));
  ASSERT_TRUE(o.finite());
  EXPECT_EQ(o.order, 4);
  ASSERT_EQ(o.elements.size(), 4u);
  const RationalFunction2 xi = rf(mono(-1, 0)), yi = rf(mono(0, -1));
  EXPECT_EQ(o.elements[0].map, (group::BirationalMap{x, y}));
  EXPECT_EQ(o.elements[1].map, (group::BirationalMap{xi, y}));
  EXPECT_EQ(o.elements[2].map, (group::BirationalMap{xi, yi}));
  EXPECT_EQ(o.elements[3].map, (group::BirationalMap{x, yi}));
  for (int k = 0; k < 4; ++k) EXPECT_EQ(o.elements[k].sign, k % 2 ? -1 : 1);
}

TEST(Orbit, KrewerasAndInfinite) {
  auto k = group::orbit(parse("NE,S,W"));
  ASSERT_TRUE(k.finite());
  EXPECT_EQ(k.order, 6);
  auto inf = group::orbit(parse("N,E,SE,W"), 200);
  EXPECT_FALSE(inf.finite());
  EXPECT_TRUE(inf.elements.empty());
}

TEST(Orbit, ElementsPreserveKernel) {
  for (const auto& rec : registry()) {
    auto o = group::orbit(rec.steps);
    ASSERT_TRUE(o.finite()) << rec.index;
    EXPECT_TRUE(o.order == 4 || o.order == 6 || o.order == 8) << rec.index;
    const RationalFunction2 S(inventory(rec.steps));
    for (const auto& e : o.elements) EXPECT_EQ(substitute(inventory(rec.steps), e.map.x_image, e.map.y_image), S);
  }
}

TEST(Orbit, Census) {
  int finite = 0;
  for (const auto& s : enumerate_models()) {
    auto o = group::orbit(s, 200);
    if (!o.finite()) continue;
    ++finite;
    EXPECT_TRUE(find_registry(s)) << s.to_string();
  }
  EXPECT_EQ(finite, 23);
}

TEST(OrbitSum, SimpleWalk) {
  auto os = group::orbit_sum(parse("N,E,S,W"));
  EXPECT_TRUE(os.is_laurent);
  EXPECT_EQ(os.value.as_laurent(), mono(1, 1) - mono(-1, 1) + mono(-1, -1) - mono(1, -1));
}

TEST(OrbitSum, VanishingCases) {
  EXPECT_TRUE(group::orbit_sum(parse("NE,S,W")).is_zero());
  EXPECT_TRUE(group::orbit_sum(registry_record(20).steps).is_zero());
  EXPECT_THROW(group::orbit_sum_counts(parse("NE,S,W"), 3, 0, 0), Inapplicable);
  EXPECT_THROW(group::orbit_sum(parse("N,E,SE,W")), Inapplicable);
}

TEST(OrbitSum, CountsSimpleWalk) {
  EXPECT_EQ(group::orbit_sum_counts(parse("N,E,S,W"), 2, 0, 0), 2);
  EXPECT_EQ(group::orbit_sum_counts(parse("N,E,S,W"), 1, 1, 0), 1);
}

TEST(OrbitSum, MatchesDpWhereApplicable) {
  int applicable = 0;
  for (const auto& rec : registry()) {
    auto os = group::orbit_sum(rec.steps);
    if (os.is_zero() || !os.is_laurent) continue;
    ++applicable;
    auto t = count_walks(rec.steps, Region::QuarterPlane, 10);
    for (int n = 0; n <= 10; ++n) {
      auto l = group::orbit_sum_layer(rec.steps, n);
      EXPECT_EQ(l.nonzero(), t.layers[n].nonzero()) << "model " << rec.index << " n=" << n;
    }
  }
  EXPECT_GE(applicable, 2);
}

TEST(OrbitJson, Shape) {
  auto j = io::to_json(group::orbit(parse("N,E,S,W")));
  EXPECT_EQ(j["status"], "Finite");
  EXPECT_EQ(j["elements"].size(), 4u);
  EXPECT_EQ(j["elements"][1]["sign"], -1);
}
