#include "generators.hpp"

#include <gtest/gtest.h>

using namespace qwalks;

namespace {

/// Integer nearest to κ·βⁿ·n^α, good to about 15 significant digits.
BigInt synth(double kappa, double beta, double alpha, long n) {
  const double L = std::log(kappa) + n * std::log(beta) + (n > 0 ? alpha * std::log(static_cast<double>(n)) : 0.0);
  const long e2 = static_cast<long>(std::floor(L / std::log(2.0))) - 52;
  const double m = std::exp(L - e2 * std::log(2.0));
  BigInt z(static_cast<long>(std::llround(m)));
  if (e2 >= 0) return z << static_cast<unsigned long>(e2);
  return z >> static_cast<unsigned long>(-e2);
}

Series synth_series(double kappa, double beta, double alpha, long N) {
  Series s(N + 1);
  for (long n = 0; n <= N; ++n) s[n] = synth(kappa, beta, alpha, n);
  return s;
}

const Series& series_of(int model, int N) {
  static std::map<std::pair<int, int>, Series> cache;
  auto& s = cache[{model, N}];
  if (s.empty()) s = quarter_plane_totals(registry_record(model).steps, N);
  return s;
}

} // namespace

TEST(EstimateBeta, Geometric) {
  Series s(200);
  for (int n = 0; n < 200; ++n) s[n] = ipow(2, n);
  auto e = estimate::estimate_beta(s);
  EXPECT_NEAR(e.beta_hat, 2.0, 1e-9);
  EXPECT_NEAR(e.alpha_hat, 0.0, 1e-6);
  EXPECT_NEAR(estimate::estimate_alpha(s, QuadraticSurd(2)), 0.0, 1e-9);
}

TEST(EstimateBeta, Preconditions) {
  EXPECT_THROW(estimate::estimate_beta(Series(49, 1)), DomainError);
  Series z(100, 1);
  z[80] = 0;
  EXPECT_THROW(estimate::estimate_beta(z), DomainError);
}

TEST(EstimateBeta, SimpleWalk) {
  auto e = estimate::estimate_beta(series_of(1, 1000));
  EXPECT_NEAR(e.beta_hat, 4.0, 0.005 * 4);
  EXPECT_NEAR(e.alpha_hat, -1.0, 0.1);
}

TEST(EstimateBeta, Kreweras) {
  Series s = series_of(19, 1000);
  s.resize(601);
  EXPECT_NEAR(estimate::estimate_beta(s).beta_hat, 3.0, 0.03);
}

TEST(EstimateAlpha, Examples) {
  EXPECT_NEAR(estimate::estimate_alpha(series_of(2, 1000), QuadraticSurd(4)), -1.0, 0.15);
  Series cat(2001);
  for (int n = 0; n <= 2000; ++n) cat[n] = closedform::catalan(n);
  EXPECT_NEAR(estimate::estimate_alpha(cat, QuadraticSurd(4)), -1.5, 0.1);
  Series pure(300);
  for (int n = 0; n < 300; ++n) pure[n] = ipow(3, n);
  EXPECT_NEAR(estimate::estimate_alpha(pure, QuadraticSurd(3)), 0.0, 1e-9);
}

TEST(CompareRegistry, Examples) {
  auto c11 = estimate::compare_registry(11, series_of(11, 1000));
  EXPECT_NEAR(c11.alpha_hat, -2.0, 0.3);
  EXPECT_LT(c11.rel_err_beta, 0.01);
  auto c5 = estimate::compare_registry(5, series_of(5, 500));
  EXPECT_LT(c5.rel_err_beta, 0.01);
  auto j = io::to_json(c11);
  EXPECT_EQ(j["model"], 11);
  EXPECT_EQ(j["alpha_ref"], "-2");
}

TEST(EstimateProperty, ErrorShrinksWithLength) {
  for (int model : {5, 11, 19}) {
    const Series& full = series_of(model, 1000);
    const double b = registry_record(model).beta.to_float();
    double prev = 1e9;
    for (int N : {250, 500, 1000}) {
      Series s(full.begin(), full.begin() + N + 1);
      const double err = std::abs(estimate::estimate_beta(s).beta_hat - b);
      EXPECT_LT(err, prev) << "model " << model << " N=" << N;
      prev = err;
    }
  }
}

TEST(EstimateProperty, ScaleInvariant) {
  auto g = qwalks::testing::rng(61);
  const Series& base = series_of(7, 500);
  auto e0 = estimate::estimate_beta(base);
  for (int t = 0; t < 10; ++t) {
    Series s = base;
    const BigInt k = qwalks::testing::uniform(g, 2, 1000000);
    for (auto& z : s) z *= k;
    auto e = estimate::estimate_beta(s);
    EXPECT_NEAR(e.beta_hat, e0.beta_hat, 1e-12);
    EXPECT_NEAR(e.alpha_hat, e0.alpha_hat, 1e-12);
  }
}

TEST(EstimateProperty, RecoversSyntheticParameters) {
  auto g = qwalks::testing::rng(62);
  for (int t = 0; t < 10; ++t) {
    const double kappa = 0.5 + qwalks::testing::uniform(g, 0, 100) / 20.0;
    const double beta = 2.0 + qwalks::testing::uniform(g, 0, 60) / 10.0;
    const double alpha = -2.0 + qwalks::testing::uniform(g, 0, 8) / 4.0;
    Series s = synth_series(kappa, beta, alpha, 2000);
    auto e = estimate::estimate_beta(s);
    EXPECT_NEAR(e.beta_hat, beta, 1e-3 * beta);
    EXPECT_NEAR(e.alpha_hat, alpha, 1e-3 * std::max(1.0, std::abs(alpha)));
  }
}
