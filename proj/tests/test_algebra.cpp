#include "generators.hpp"

#include <gtest/gtest.h>

using namespace qwalks;
using qwalks::testing::rng;

namespace {

LaurentPoly2 X(int k = 1) { return mono(k, 0); }
LaurentPoly2 Y(int k = 1) { return mono(0, k); }

} // namespace

TEST(BigRational, ReducedWithPositiveDenominator) {
  BigRational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
  EXPECT_THROW(make_rational(1, 0), DomainError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(BigInt, Binomials) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(ipow(3, 40).get_str(), "12157665459056928801");
}

TEST(Laurent, SquareOfYPlusInverse) {
  LaurentPoly1 p = mono1(1) + mono1(-1);
  LaurentPoly1 q = p.pow(2);
  EXPECT_EQ(q.coeff(2), 1);
  EXPECT_EQ(q.coeff(0), 2);
  EXPECT_EQ(q.coeff(-2), 1);
  EXPECT_EQ(q.size(), 3u);
}

TEST(Laurent, PowZeroIsOne) {
  LaurentPoly2 s = inventory(parse("N,NE,E,SE,S,SW,W,NW"));
  EXPECT_EQ(s.pow(0), LaurentPoly2(BigRational(1)));
}

TEST(Laurent, SubstituteX1) {
  LaurentPoly1 p = substitute_x1(inventory(parse("NE,E,SE")));
  EXPECT_EQ(p, mono1(1) + mono1(0) + mono1(-1));
  LaurentPoly1 full = substitute_x1(inventory(parse("N,NE,E,SE,S,SW,W,NW")));
  EXPECT_EQ(full, mono1(1, 3) + mono1(0, 2) + mono1(-1, 3));
}

TEST(Laurent, PolePart) {
  LaurentPoly2 s = inventory(parse("N,NE,E,SE,S,SW,W,NW"));
  EXPECT_EQ(s.pole_part(Var::Y), mono(1, -1) + mono(0, -1) + mono(-1, -1));
  EXPECT_TRUE((Y() + LaurentPoly2(BigRational(1))).pole_part(Var::Y).is_zero());
  EXPECT_EQ((mono(-1, -1) + mono(1, 1)).pole_part(Var::X), mono(-1, -1));
}

TEST(Laurent, NoStoredZeros) {
  LaurentPoly2 p = X() - X();
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
}

TEST(LaurentProperty, PolePartIsLinearAndSplits) {
  auto g = rng(11);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly2 p = qwalks::testing::small_poly(g), q = qwalks::testing::small_poly(g);
    for (Var v : {Var::X, Var::Y}) {
      EXPECT_EQ((p + q).pole_part(v), p.pole_part(v) + q.pole_part(v));
      LaurentPoly2 rest = p - p.pole_part(v);
      for (const auto& [e, c] : rest.terms()) EXPECT_GE(v == Var::X ? e.i : e.j, 0);
    }
  }
}

TEST(LaurentProperty, ProductDistributes) {
  auto g = rng(12);
  for (int t = 0; t < 100; ++t) {
    auto a = qwalks::testing::small_poly(g), b = qwalks::testing::small_poly(g), c = qwalks::testing::small_poly(g);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(RationalFunction, MonomialCancellation) {
  RationalFunction2 f(mono(2, 1), X());
  EXPECT_TRUE(f.is_laurent());
  EXPECT_EQ(f.as_laurent(), mono(1, 1));
}

TEST(RationalFunction, InverseMonomialEqualsLaurent) {
  RationalFunction2 f(LaurentPoly2(BigRational(1)), mono(1, 1));
  EXPECT_EQ(f, RationalFunction2(mono(-1, -1)));
}

TEST(RationalFunction, ComposeWithIdentity) {
  RationalFunction2 f(X() + Y(-1), X(2) + LaurentPoly2(BigRational(3)));
  EXPECT_EQ(compose(f, RationalFunction2::x(), RationalFunction2::y()), f);
}

TEST(RationalFunction, DivisionByZeroThrows) {
  EXPECT_THROW(RationalFunction2(X(), LaurentPoly2()), DomainError);
  EXPECT_THROW(RationalFunction2::x() / RationalFunction2(), DomainError);
}

TEST(RationalFunction, ReduceCancelsCommonFactor) {
  LaurentPoly2 common = X() + Y() + LaurentPoly2(BigRational(1));
  RationalFunction2 f(common * (X() - Y()), common * (X(2) + Y()));
  RationalFunction2 r = f.reduced();
  EXPECT_EQ(r, f);
  EXPECT_EQ(r.den().size(), 2u);
}

TEST(RationalFunctionProperty, EqualityIsCrossMultiplication) {
  auto g = rng(13);
  for (int t = 0; t < 100; ++t) {
    auto p = qwalks::testing::small_poly(g, 3), q = qwalks::testing::small_poly(g, 3),
         r = qwalks::testing::small_poly(g, 3);
    if (q.is_zero() || r.is_zero()) continue;
    RationalFunction2 a(p, q), b(p * r, q * r);
    EXPECT_EQ(a, b);
    EXPECT_EQ(b, a);
    EXPECT_EQ(a.reduced(), b.reduced());
    EXPECT_EQ(a - b, RationalFunction2());
    if (!p.is_zero()) {
      EXPECT_EQ(a * (RationalFunction2(q, p)), RationalFunction2(LaurentPoly2(BigRational(1))));
    }
  }
}

TEST(RationalFunctionProperty, SubstituteMatchesComposition) {
  // S(X, Y) for a monomial substitution is S with shifted exponents.
  auto g = rng(14);
  for (int t = 0; t < 50; ++t) {
    auto p = qwalks::testing::small_poly(g, 4);
    RationalFunction2 s = substitute(p, RationalFunction2(mono(-1, 0)), RationalFunction2(mono(0, -1)));
    LaurentPoly2 expect;
    for (const auto& [e, c] : p.terms()) expect.add_term({-e.i, -e.j}, c);
    EXPECT_EQ(s, RationalFunction2(expect));
  }
}

TEST(PowerSeries, GeometricInverse) {
  PowerSeries1 one_minus_t(10, {1, -1});
  PowerSeries1 inv = one_minus_t.inverse();
  for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(inv[k], 1);
}

TEST(PowerSeriesProperty, LongProductsMatchSchoolbook) {
  auto g = rng(15);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 40 + t * 7;
    std::vector<BigInt> a(n), b(n);
    for (auto& z : a) z = BigInt(qwalks::testing::uniform(g, -1000, 1000)) * ipow(10, qwalks::testing::uniform(g, 0, 30));
    for (auto& z : b) z = qwalks::testing::uniform(g, 0, 1000);
    auto c = (PowerSeries1::from_integers(n - 1, a) * PowerSeries1::from_integers(n - 1, b)).integers();
    for (std::size_t k = 0; k < n; ++k) {
      BigInt s = 0;
      for (std::size_t i = 0; i <= k; ++i) s += a[i] * b[k - i];
      ASSERT_EQ(c[k], s) << "k=" << k;
    }
  }
}

TEST(Surd, AddRationalMatchesTable) {
  QuadraticSurd s(0, 2, 3);
  QuadraticSurd t = s + BigRational(2);
  EXPECT_EQ(t, QuadraticSurd(2, 2, 3));
  EXPECT_EQ(to_string(t), "2+2√3");
}

TEST(Surd, Degenerate) {
  EXPECT_EQ(QuadraticSurd(make_rational(5, 2)), QuadraticSurd(make_rational(5, 2), 0, 0));
  EXPECT_EQ(QuadraticSurd(1, 3, 4), QuadraticSurd(7)); // √4 folds into the rational part
  EXPECT_FALSE(QuadraticSurd(0, 1, 2) == QuadraticSurd(0, 1, 3));
}

TEST(Surd, ToFloat) { EXPECT_NEAR(QuadraticSurd(0, 2, 6).to_float(), 4.898979485566356, 1e-12); }

TEST(Surd, SqrtSurd) {
  EXPECT_EQ(sqrt_surd(3), QuadraticSurd(0, 1, 3));
  EXPECT_EQ(sqrt_surd(12), QuadraticSurd(0, 2, 3));
  EXPECT_EQ(sqrt_surd(make_rational(9, 4)), QuadraticSurd(make_rational(3, 2)));
  EXPECT_EQ(sqrt_surd(make_rational(1, 2)), QuadraticSurd(0, make_rational(1, 2), 2));
  EXPECT_THROW(sqrt_surd(-1), DomainError);
}

TEST(Surd, SquareFreeRadicand) {
  QuadraticSurd s(1, 1, 72); // 1 + 6√2
  EXPECT_EQ(s.d(), 2);
  EXPECT_EQ(s.b(), 6);
}

TEST(SurdProperty, ExactSignAgreesWithFloat) {
  auto g = rng(16);
  const long radicands[] = {2, 3, 5, 6, 7};
  for (int t = 0; t < 1000; ++t) {
    QuadraticSurd s(qwalks::testing::small_rational(g), qwalks::testing::small_rational(g), radicands[t % 5]);
    QuadraticSurd u(qwalks::testing::small_rational(g), qwalks::testing::small_rational(g), radicands[(t / 5) % 5]);
    const double diff = s.to_float() - u.to_float();
    if (std::abs(diff) < 1e-9) continue;
    EXPECT_EQ(compare(s, u), diff > 0 ? 1 : -1) << to_string(s) << " vs " << to_string(u);
  }
}

TEST(SurdProperty, RegistryBetasOrderConsistently) {
  for (const auto& a : registry())
    for (const auto& b : registry()) {
      const int c = compare(a.beta, b.beta);
      if (a.beta == b.beta) EXPECT_EQ(c, 0);
      else EXPECT_EQ(c, a.beta.to_float() > b.beta.to_float() ? 1 : -1);
    }
}

TEST(SurdProperty, ReciprocalRoundTrip) {
  auto g = rng(17);
  for (int t = 0; t < 200; ++t) {
    QuadraticSurd s(qwalks::testing::small_rational(g), qwalks::testing::small_rational(g), 5);
    if (s.sign() == 0) continue;
    EXPECT_NEAR(s.reciprocal().to_float() * s.to_float(), 1.0, 1e-9);
    EXPECT_EQ(s.reciprocal().reciprocal(), s);
  }
}
