#pragma once

#include "qwalks/algebra/series.hpp"
#include "qwalks/algebra/surd.hpp"
#include "qwalks/stepset.hpp"

#include <cmath>
#include <numbers>
#include <string_view>

namespace qwalks::kernel {

/// P(y) = c_plus·y + c_zero + c_minus/y.
struct DirectedInventory {
  long c_plus = 0;
  long c_zero = 0;
  long c_minus = 0;

  long total() const { return c_plus + c_zero + c_minus; }
  LaurentPoly1 poly() const {
    LaurentPoly1 p;
    p.add_term(1, BigRational(c_plus));
    p.add_term(0, BigRational(c_zero));
    p.add_term(-1, BigRational(c_minus));
    return p;
  }
  friend bool operator==(const DirectedInventory&, const DirectedInventory&) = default;
};

/// S(1, y): forget the x-coordinate.
inline DirectedInventory project(const StepSet& s) {
  DirectedInventory d;
  for (const auto& st : s.steps()) (st.dy > 0 ? d.c_plus : st.dy < 0 ? d.c_minus : d.c_zero) += st.weight;
  return d;
}

/// S(x, 1): forget the y-coordinate.
inline DirectedInventory project_x(const StepSet& s) { return project(reflect(s, Axis::Diagonal)); }

struct StructuralData {
  long delta = 0;
  QuadraticSurd tau;
  QuadraticSurd p_at_tau;
  QuadraticSurd rho;
};

inline StructuralData structural(const DirectedInventory& p) {
  if (p.c_plus <= 0 || p.c_minus <= 0)
    throw DomainError("structural constant needs both an up and a down step");
  StructuralData d;
  d.delta = p.c_plus - p.c_minus;
  d.tau = sqrt_surd(make_rational(p.c_minus, p.c_plus));
  d.p_at_tau = sqrt_surd(BigRational(4 * p.c_plus * p.c_minus)) + BigRational(p.c_zero);
  d.rho = d.p_at_tau.reciprocal();
  return d;
}

/// Root y₀(t) of y = t·(c₊y² + c₀y + c₋) with y₀(0) = 0, by Newton iteration
/// with doubling precision.
inline PowerSeries1 small_branch(const DirectedInventory& p, std::size_t order) {
  if (order < 1) throw DomainError("small_branch: order must be at least 1");
  const BigRational cp(p.c_plus), c0(p.c_zero), cm(p.c_minus);
  PowerSeries1 y(order);
  std::size_t correct = 1; // y is exact modulo t^correct
  while (correct <= order) {
    correct = std::min(2 * correct, order + 1);
    const std::size_t o = correct - 1;
    PowerSeries1 yy = y.truncated(o);
    PowerSeries1 one(o), cst(o);
    one[0] = 1;
    cst[0] = cm;
    PowerSeries1 rhs = (cp * (yy * yy) + c0 * yy + cst).times_t();
    PowerSeries1 F = yy - rhs;
    PowerSeries1 dF = one - (BigRational(2) * cp * yy + c0 * one).times_t();
    y = (yy - F * dF.inverse()).truncated(order);
  }
  return y;
}

/// Coefficients of (1 − y₀(t))/(1 − t·P(1)): meanders of each length.
inline Series meander_series(const DirectedInventory& p, long order) {
  if (order < 0) throw DomainError("order must be nonnegative");
  Series y0(order + 1, 0);
  if (p.c_minus > 0 && order >= 1) y0 = small_branch(p, static_cast<std::size_t>(order)).integers();
  Series f(order + 1);
  const unsigned long P1 = static_cast<unsigned long>(p.total());
  for (long n = 0; n <= order; ++n) {
    f[n] = n == 0 ? BigInt(1 - y0[0]) : BigInt(f[n - 1] * P1 - y0[n]);
    if (sgn(f[n]) < 0) throw InternalError("negative meander count");
  }
  return f;
}

enum class Regime { ZeroDrift, NegativeDrift, PositiveDrift };

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::ZeroDrift: return "ZeroDrift";
    case Regime::NegativeDrift: return "NegativeDrift";
    case Regime::PositiveDrift: return "PositiveDrift";
  }
  return "?";
}

/// f(n) ~ leading_constant · growth_base^n · n^polynomial_exponent.
struct MeanderAsymptotics {
  Regime regime = Regime::ZeroDrift;
  QuadraticSurd growth_base;
  double leading_constant = 0;
  BigRational polynomial_exponent;
};

/// 1 − y₀(1/P(1)). At t = 1/P(1) the kernel c₊y² − (c₊ + c₋)y + c₋ has roots
/// 1 and c₋/c₊, and with positive drift y₀ takes the smaller one.
inline double xi0(const DirectedInventory& p) {
  return 1.0 - static_cast<double>(p.c_minus) / static_cast<double>(p.c_plus);
}

inline MeanderAsymptotics meander_asymptotics(const DirectedInventory& p) {
  const StructuralData sd = structural(p);
  MeanderAsymptotics a;
  const double P1 = static_cast<double>(p.total());
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  if (sd.delta == 0) {
    a.regime = Regime::ZeroDrift;
    a.growth_base = QuadraticSurd(BigRational(p.total()));
    a.polynomial_exponent = make_rational(-1, 2);
    const double nu0 = std::sqrt(2 * P1 / (2.0 * static_cast<double>(p.c_minus)));
    a.leading_constant = nu0 / sqrt_pi;
  } else if (sd.delta < 0) {
    a.regime = Regime::NegativeDrift;
    a.growth_base = sd.p_at_tau;
    a.polynomial_exponent = make_rational(-3, 2);
    const double tau = sd.tau.to_float(), pt = sd.p_at_tau.to_float();
    const double d2 = 2.0 * static_cast<double>(p.c_minus) / (tau * tau * tau);
    const double nu = -std::sqrt(2 * pt * pt * pt / d2) / (pt - P1);
    a.leading_constant = nu / (2 * sqrt_pi);
  } else {
    a.regime = Regime::PositiveDrift;
    a.growth_base = QuadraticSurd(BigRational(p.total()));
    a.polynomial_exponent = 0;
    a.leading_constant = xi0(p);
  }
  return a;
}

} // namespace qwalks::kernel
