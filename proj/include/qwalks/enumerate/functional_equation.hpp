#pragma once

#include "qwalks/algebra/laurent.hpp"
#include "qwalks/enumerate/count_table.hpp"

namespace qwalks {

/// Iterates
///   Q_{n+1} = S·Q_n − {x<0}S·Q_n(0,y) − {y<0}S·Q_n(x,0) + w_SW·x⁻¹y⁻¹·Q_n(0,0)
/// in exact Laurent arithmetic. The corrections must cancel every term
/// with a negative exponent; a leftover is reported as an internal error.
inline CountTable functional_equation_series(const StepSet& s, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  const LaurentPoly2 S = inventory(s);
  const LaurentPoly2 Sx = S.pole_part(Var::X);
  const LaurentPoly2 Sy = S.pole_part(Var::Y);
  const LaurentPoly2 corner = mono(-1, -1, BigRational(s.weight(Dir::SW)));

  CountTable t;
  t.steps = s;
  t.region = Region::QuarterPlane;
  t.n_max = n_max;

  LaurentPoly2 Q(BigRational(1));
  auto record = [&](int n, const LaurentPoly2& q) {
    Layer l(n, 0, 0, n + 1, n + 1);
    for (const auto& [e, c] : q.terms()) {
      if (!is_integral(c) || sgn(c) < 0 || !l.contains(e.i, e.j))
        throw InternalError("functional equation produced an invalid count");
      l.ref(e.i, e.j) = c.get_num();
    }
    t.summarize(l);
    t.layers.push_back(std::move(l));
  };
  record(0, Q);
  for (int n = 0; n < n_max; ++n) {
    LaurentPoly2 q0y = Q.section(Var::X, 0);
    LaurentPoly2 qx0 = Q.section(Var::Y, 0);
    LaurentPoly2 next = S * Q - Sx * q0y - Sy * qx0 + corner * LaurentPoly2(Q.coeff({0, 0}));
    LaurentPoly2 kept;
    for (const auto& [e, c] : next.terms()) {
      if (e.i < 0 || e.j < 0) throw InternalError("nonzero negative-exponent residue in functional equation");
      kept.add_term(e, c);
    }
    Q = std::move(kept);
    record(n + 1, Q);
  }
  return t;
}

} // namespace qwalks
