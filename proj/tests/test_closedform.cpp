#include "generators.hpp"

#include <gtest/gtest.h>

using namespace qwalks;
using closedform::ClosedFormId;

namespace {

/// Oracle count of a closed form at argument n, or nullopt when the id has no walk model.
std::optional<BigInt> oracle_value(ClosedFormId id, int n) {
  const int L = static_cast<int>(closedform::walk_length(id, n));
  auto run = [&](const StepSet& s) { return exhaustive_oracle(s, Region::QuarterPlane, L); };
  switch (id) {
    case ClosedFormId::KrewerasOrigin: return run(parse("NE,S,W")).origin[L];
    case ClosedFormId::GouyouBeauchampsOrigin: return run(parse("E,SE,W,NW")).origin[L];
    case ClosedFormId::S2All: return run(parse("NE,SE,SW,NW")).totals[L];
    case ClosedFormId::S11Origin: return run(parse("N,S,SW,SE")).origin[L];
    case ClosedFormId::S13XAxis: return run(parse("S,SW,SE,NW,NE")).x_axis[L];
    case ClosedFormId::S15Origin: return run(parse("SW,SE,N")).origin[L];
    case ClosedFormId::DyckPrefix: return run(parse("NE,SE")).totals[L];
    case ClosedFormId::Motzkin: return run(parse("N,W,SE")).totals[L];
    default: return std::nullopt;
  }
}

} // namespace

TEST(ClosedForm, FrozenExamples) {
  EXPECT_EQ(closedform::eval(ClosedFormId::KrewerasOrigin, 1), 2);
  EXPECT_EQ(closedform::eval(ClosedFormId::GouyouBeauchampsOrigin, 2), 3);
  EXPECT_EQ(closedform::eval(ClosedFormId::S11Origin, 1), 1);
  EXPECT_EQ(closedform::eval(ClosedFormId::S2All, 2), 4);
  EXPECT_EQ(closedform::eval(ClosedFormId::S13XAxis, 1), 3);
  EXPECT_EQ(closedform::eval(ClosedFormId::S15Origin, 1), 2);
  EXPECT_EQ(closedform::eval(ClosedFormId::Motzkin, 4), 9);
  EXPECT_EQ(closedform::eval(ClosedFormId::Catalan, 0), 1);
  EXPECT_THROW(closedform::eval(ClosedFormId::Catalan, -1), DomainError);
}

TEST(ClosedForm, AgreesWithOracleWhereAffordable) {
  for (ClosedFormId id : closedform::kAllIds)
    for (int n = 0; n <= 10; ++n) {
      const int L = static_cast<int>(closedform::walk_length(id, n));
      if (L > 10) break;
      auto o = oracle_value(id, n);
      if (!o) break;
      EXPECT_EQ(closedform::eval(id, n), *o) << closedform::to_string(id) << " n=" << n;
    }
}

TEST(ClosedForm, CatalanCountsExcursions) {
  // Catalan(n) counts {N,S} walks of length 2n back at the origin.
  auto t = count_walks(parse("N,S"), Region::QuarterPlane, 40);
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(closedform::catalan(n), t.origin[2 * n]);
}

TEST(ClosedForm, AgainstDpAtLargerLengths) {
  auto k = count_walks(parse("NE,S,W"), Region::QuarterPlane, 45);
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(closedform::eval(ClosedFormId::KrewerasOrigin, n), k.origin[3 * n]);
  auto g = count_walks(parse("E,SE,W,NW"), Region::QuarterPlane, 40);
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(closedform::eval(ClosedFormId::GouyouBeauchampsOrigin, n), g.origin[2 * n]);
  auto s15 = count_walks(parse("SW,SE,N"), Region::QuarterPlane, 40);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(closedform::eval(ClosedFormId::S15Origin, n), s15.origin[4 * n]);
  auto s13 = count_walks(parse("S,SW,SE,NW,NE"), Region::QuarterPlane, 30);
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(closedform::eval(ClosedFormId::S13XAxis, n), s13.x_axis[2 * n]);
  auto s17 = count_walks(parse("N,W,SE"), Region::QuarterPlane, 40, History::Last);
  for (int n = 0; n <= 40; ++n) EXPECT_EQ(closedform::motzkin(n), s17.totals[n]);
}

TEST(ClosedForm, S13IsComposedFromOtherForms) {
  for (unsigned long n = 0; n <= 20; ++n) {
    BigInt s = 0;
    for (unsigned long k = 0; k <= n; ++k) s += binomial(n, k) * closedform::eval(ClosedFormId::DyckPrefix, 2 * n - k);
    EXPECT_EQ(closedform::eval(ClosedFormId::S13XAxis, n), closedform::eval(ClosedFormId::Catalan, n) * s);
  }
}

TEST(SawPd, Series) {
  Series p = closedform::saw_pd_series(10);
  EXPECT_EQ(p[0], 0);
  EXPECT_EQ(p[1], 1);
  EXPECT_EQ(p[2], 1);
  EXPECT_EQ(p[3], 3);
  // (1 − 2t − t²)·P(t) = t − t²
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(p[n] - 2 * p[n - 1] - p[n - 2], 0);
  Series q = closedform::saw_pd_series(61);
  EXPECT_NEAR(BigRational(q[61], q[60]).get_d(), 1 + std::sqrt(2.0), 1e-6);
}

TEST(SawPd, PoleAtSqrt2Minus1) {
  QuadraticSurd t(-1, 1, 2);
  // 1 − 2t − t² with t² = 3 − 2√2
  QuadraticSurd t2(3, -2, 2);
  EXPECT_EQ(QuadraticSurd(1) + (-(t * BigRational(2))) + (-t2), QuadraticSurd(0));
}

TEST(Bootstrap, Examples) {
  Series ones(12, 1), threes(12);
  for (int i = 0; i < 12; ++i) threes[i] = ipow(3, i);
  for (int n = 0; n < 12; ++n) {
    EXPECT_EQ(closedform::bootstrap_one(ones, n), ipow(2, n));
    EXPECT_EQ(closedform::bootstrap_one(threes, n), ipow(4, n));
  }
  EXPECT_EQ(closedform::bootstrap_two(ones, 2), 5);
  EXPECT_EQ(closedform::bootstrap_two(threes, 0), 1);
  EXPECT_THROW(closedform::bootstrap_one(ones, 12), DomainError);
}

TEST(Bootstrap, InjectionsIntoLargerModels) {
  auto q5 = count_walks(registry_record(5).steps, Region::QuarterPlane, 12, History::Last).totals;
  auto q7 = count_walks(registry_record(7).steps, Region::QuarterPlane, 12, History::Last).totals;
  for (int n = 0; n <= 12; ++n) EXPECT_LE(closedform::bootstrap_one(q5, n), q7[n]);
  auto q8 = count_walks(registry_record(8).steps, Region::QuarterPlane, 10, History::Last).totals;
  for (int n = 0; n <= 10; ++n) EXPECT_LE(closedform::bootstrap_two(q7, n), q8[n]);
}

TEST(BootstrapProperty, Monotone) {
  auto g = qwalks::testing::rng(41);
  for (int t = 0; t < 100; ++t) {
    Series q(15), r(15);
    for (int i = 0; i < 15; ++i) {
      q[i] = qwalks::testing::uniform(g, 0, 1000);
      r[i] = q[i] + qwalks::testing::uniform(g, 0, 5);
    }
    const int n = qwalks::testing::uniform(g, 0, 14);
    EXPECT_LE(closedform::bootstrap_one(q, n), closedform::bootstrap_one(r, n));
    EXPECT_LE(closedform::bootstrap_two(q, n), closedform::bootstrap_two(r, n));
  }
}

TEST(BootstrapProperty, GrowthShifts) {
  const int N = 400;
  Series threes(N + 1);
  for (int i = 0; i <= N; ++i) threes[i] = ipow(3, i);
  EXPECT_NEAR(log_big(closedform::bootstrap_one(threes, N)) / N, std::log(4.0), 0.01 * std::log(4.0));
  EXPECT_NEAR(log_big(closedform::bootstrap_two(threes, N)) / N, std::log(5.0), 0.01 * std::log(5.0));
}
