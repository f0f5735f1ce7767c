#pragma once

#include "qwalks/algebra/bigint.hpp"
#include "qwalks/algebra/surd.hpp"
#include "qwalks/stepset.hpp"

#include <cmath>
#include <vector>

namespace qwalks::estimate {

struct AsymptoticEstimate {
  double beta_hat = 0;
  double alpha_hat = 0;
  long n_lo = 0;
  long n_hi = 0;
  double residual = 0; // RMS of the fit
};

namespace detail {

struct LineFit {
  double intercept = 0, slope = 0, rms = 0;
};

inline LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    double e = y[k] - f.intercept - f.slope * x[k];
    ss += e * e;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

inline std::vector<double> logs(const Series& seq, long lo) {
  std::vector<double> l(seq.size(), 0.0);
  for (std::size_t n = static_cast<std::size_t>(std::max(0L, lo)); n < seq.size(); ++n) {
    if (sgn(seq[n]) <= 0) throw DomainError("nonpositive term at n=" + std::to_string(n) + " in the fitting window");
    l[n] = log_big(seq[n]);
  }
  return l;
}

inline void check_length(const Series& seq) {
  if (seq.size() < 50) throw DomainError("estimation needs at least 50 terms");
}

} // namespace detail

/// Fits log(q(n)/q(n−1)) = log β + α·log(n/(n−1)) over the top half.
inline AsymptoticEstimate estimate_beta(const Series& seq) {
  detail::check_length(seq);
  const long N = static_cast<long>(seq.size()) - 1;
  const long lo = std::max(2L, N / 2);
  const auto l = detail::logs(seq, lo - 1);
  std::vector<double> x, y;
  for (long n = lo; n <= N; ++n) {
    x.push_back(std::log1p(1.0 / static_cast<double>(n - 1)));
    y.push_back(l[n] - l[n - 1]);
  }
  auto f = detail::least_squares(x, y);
  return {std::exp(f.intercept), f.slope, lo, N, f.rms};
}

/// Slope of log(q(n)/βⁿ) against log n over the top half.
inline double estimate_alpha(const Series& seq, const QuadraticSurd& beta) {
  detail::check_length(seq);
  const long N = static_cast<long>(seq.size()) - 1;
  const long lo = std::max(1L, N / 2);
  const auto l = detail::logs(seq, lo);
  const double lb = std::log(beta.to_float());
  std::vector<double> x, y;
  for (long n = lo; n <= N; ++n) {
    x.push_back(std::log(static_cast<double>(n)));
    y.push_back(l[n] - static_cast<double>(n) * lb);
  }
  return detail::least_squares(x, y).slope;
}

struct RegistryComparison {
  int model = 0;
  QuadraticSurd beta_exact;
  double beta_hat = 0;
  BigRational alpha_ref;
  double alpha_hat = 0;
  double rel_err_beta = 0;
  double abs_err_alpha = 0;
};

/// beta_hat from the ratio fit; alpha_hat from the regression given the
/// exact β of the registry.
inline RegistryComparison compare_registry(int index, const Series& seq) {
  const ModelRecord& rec = registry_record(index);
  RegistryComparison c;
  c.model = index;
  c.beta_exact = rec.beta;
  c.alpha_ref = rec.alpha;
  c.beta_hat = estimate_beta(seq).beta_hat;
  c.alpha_hat = estimate_alpha(seq, rec.beta);
  const double b = rec.beta.to_float();
  c.rel_err_beta = std::abs(c.beta_hat - b) / b;
  c.abs_err_alpha = std::abs(c.alpha_hat - rec.alpha.get_d());
  return c;
}

} // namespace qwalks::estimate
