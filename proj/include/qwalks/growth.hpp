#pragma once

#include "qwalks/closedform.hpp"
#include "qwalks/enumerate/dp.hpp"
#include "qwalks/kernel.hpp"
#include "qwalks/stepset.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qwalks::growth {

enum class BoundKind { BaseCaseFormula, OneStepFrom, TwoStepFrom, HalfPlaneRelaxation, StepCountBound };

inline std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::BaseCaseFormula: return "BaseCaseFormula";
    case BoundKind::OneStepFrom: return "OneStepFrom";
    case BoundKind::TwoStepFrom: return "TwoStepFrom";
    case BoundKind::HalfPlaneRelaxation: return "HalfPlaneRelaxation";
    case BoundKind::StepCountBound: return "StepCountBound";
  }
  return "?";
}

struct BoundLink {
  BoundKind kind = BoundKind::BaseCaseFormula;
  QuadraticSurd value;
  std::string source; // base tag, "model k" or a named set
  std::string note;
};

/// The final value plus, for lower bounds, the links from a base case up.
struct BoundDerivation {
  BoundKind kind = BoundKind::StepCountBound;
  QuadraticSurd value;
  std::string note;
  std::vector<BoundLink> chain;
};

struct GrowthCertificate {
  StepSet model;
  int registry_index = 0;
  QuadraticSurd beta;
  BoundDerivation upper;
  BoundDerivation lower;
  bool verified = false;
  DriftSign drift_sign = DriftSign::Zero;
};

/// A base case: a closed form counting a subset of the model's walks, which
/// grows like `growth` per `period` steps.
struct BaseCase {
  std::string_view tag;
  closedform::ClosedFormId witness;
  unsigned long growth;
  unsigned period;
  std::string_view note;
};

inline const std::vector<BaseCase>& base_cases() {
  using closedform::ClosedFormId;
  static const std::vector<BaseCase> t{
      {"S02", ClosedFormId::S2All, 4, 1, "product of two independent Dyck prefixes"},
      {"S05", ClosedFormId::Motzkin, 3, 1, "Motzkin paths, by rotating the E step of the mirrored {N,W,SE} model"},
      {"S11", ClosedFormId::S11Origin, 12, 2, "C_n*M_n walks of length 2n back at the origin"},
      {"S13", ClosedFormId::S13XAxis, 24, 2, "walks of length 2n ending on the x-axis"},
      {"S15", ClosedFormId::S15Origin, 64, 4, "C_2n*C_n walks of length 4n back at the origin"},
      {"S17", ClosedFormId::Motzkin, 3, 1, "Motzkin numbers count all walks"},
      {"S19", ClosedFormId::KrewerasOrigin, 27, 3, "Kreweras excursions of length 3n"},
      {"S20", ClosedFormId::KrewerasOrigin, 27, 3, "reversed Kreweras excursions of length 3n"},
      {"S22", ClosedFormId::GouyouBeauchampsOrigin, 16, 2, "Gouyou-Beauchamps excursions of length 2m"},
      {"{N,S}", ClosedFormId::DyckPrefix, 2, 1, "directed meander on two opposite steps"},
      {"{E,W}", ClosedFormId::DyckPrefix, 2, 1, "directed meander on two opposite steps"},
  };
  return t;
}

inline const BaseCase& base_case(std::string_view tag) {
  for (const auto& b : base_cases())
    if (b.tag == tag) return b;
  throw InternalError("unknown base case " + std::string(tag));
}

/// growth^(1/period) as an exact surd.
inline QuadraticSurd exact_root(unsigned long growth, unsigned period) {
  BigInt g(growth), r;
  switch (period) {
    case 1: return QuadraticSurd(BigRational(g));
    case 2: return sqrt_surd(BigRational(g));
    case 3:
      if (!mpz_root(r.get_mpz_t(), g.get_mpz_t(), 3)) break;
      return QuadraticSurd(BigRational(r));
    case 4:
      if (!mpz_root(r.get_mpz_t(), g.get_mpz_t(), 2)) break;
      return sqrt_surd(BigRational(r));
  }
  throw InternalError("growth root is not a quadratic surd");
}

/// Half-plane relaxation for negative drift, otherwise the number of steps.
inline BoundDerivation upper_bound(const StepSet& s) {
  const DriftVector d = drift(s);
  if (d.dx_total != 0 && d.dy_total != 0)
    throw UnscopedModel("upper bound needs a drift parallel to an axis or zero: " + s.to_string());
  BoundDerivation b;
  if (d.dy_total < 0 || d.dx_total < 0) {
    const bool y = d.dy_total < 0;
    const kernel::DirectedInventory p = y ? kernel::project(s) : kernel::project_x(s);
    b.kind = BoundKind::HalfPlaneRelaxation;
    b.value = kernel::structural(p).p_at_tau;
    b.note = std::string("P(tau) of the ") + (y ? "y" : "x") + "-projection " + to_string(p.poly());
  } else {
    b.kind = BoundKind::StepCountBound;
    b.value = QuadraticSurd(BigRational(static_cast<unsigned long>(s.total_weight())));
    b.note = "total step weight";
  }
  return b;
}

namespace detail {

inline std::vector<BoundLink> lower_chain(const ModelRecord& rec) {
  std::vector<BoundLink> chain;
  if (rec.lemma == Lemma::BaseCase || !rec.parent.model) {
    const BaseCase& bc = base_case(rec.parent.name);
    chain.push_back({BoundKind::BaseCaseFormula, exact_root(bc.growth, bc.period), std::string(bc.tag),
                     std::string(closedform::to_string(bc.witness)) + ": " + std::string(bc.note)});
  } else {
    chain = lower_chain(registry_record(*rec.parent.model));
  }
  if (rec.lemma == Lemma::BaseCase) return chain;
  const bool one = rec.lemma == Lemma::OneStep;
  const std::string src = rec.parent.model ? "model " + std::to_string(*rec.parent.model) : rec.parent.name;
  chain.push_back({one ? BoundKind::OneStepFrom : BoundKind::TwoStepFrom,
                   chain.back().value + BigRational(one ? 1 : 2), src,
                   one ? "insert one step anywhere" : "interleave a Dyck prefix of two opposite steps"});
  return chain;
}

inline const ModelRecord& scoped(const StepSet& s) {
  auto hit = find_registry(s);
  if (!hit) throw UnscopedModel("not a registered model (up to diagonal reflection): " + s.to_string());
  return *hit->first;
}

} // namespace detail

inline BoundDerivation lower_bound(const StepSet& s) {
  const ModelRecord& rec = detail::scoped(s);
  BoundDerivation b;
  b.chain = detail::lower_chain(rec);
  b.kind = b.chain.back().kind;
  b.value = b.chain.back().value;
  b.note = "model " + std::to_string(rec.index);
  return b;
}

inline GrowthCertificate certify(const StepSet& s) {
  const ModelRecord& rec = detail::scoped(s);
  GrowthCertificate c;
  c.model = s;
  c.registry_index = rec.index;
  c.drift_sign = rec.drift_sign;
  c.upper = upper_bound(s);
  c.lower = lower_bound(s);
  c.verified = c.upper.value == c.lower.value;
  c.beta = c.verified ? c.upper.value : c.lower.value;
  return c;
}

/// Series counting a subset of the model's quarter-plane walks, n = 0..N.
inline Series lower_witness(const ModelRecord& rec, long N) {
  Series w(N + 1, 0);
  if (rec.lemma == Lemma::BaseCase || !rec.parent.model) {
    const BaseCase& bc = base_case(rec.parent.name);
    const long L = closedform::walk_length(bc.witness, 1);
    Series base(N + 1, 0);
    for (long n = 0; n <= N; n += L) base[n] = closedform::eval(bc.witness, n / L);
    if (rec.lemma == Lemma::BaseCase) return base;
    for (long n = 0; n <= N; ++n) w[n] = closedform::bootstrap_two(base, n);
    return w;
  }
  const Series parent = count_walks(registry_record(*rec.parent.model).steps, Region::QuarterPlane, static_cast<int>(N),
                                    History::Last).totals;
  for (long n = 0; n <= N; ++n)
    w[n] = rec.lemma == Lemma::OneStep ? closedform::bootstrap_one(parent, n) : closedform::bootstrap_two(parent, n);
  return w;
}

struct SanityReport {
  bool passed = true;
  long n_checked = 0;
  std::optional<long> first_violation;
  std::string message;
};

/// witness(n) ≤ q(n) ≤ h(n) ≤ W^n, h being the half-plane count.
inline SanityReport numeric_sanity(const GrowthCertificate& cert, const Series& q) {
  if (q.size() < 51) throw DomainError("numeric_sanity needs a series of length at least 50");
  const ModelRecord& rec = detail::scoped(cert.model);
  const long N = static_cast<long>(q.size()) - 1;
  const Series w = lower_witness(rec, N);
  const Series h = kernel::meander_series(kernel::project(rec.steps), N);
  const BigInt W(static_cast<unsigned long>(cert.model.total_weight()));
  SanityReport r;
  BigInt Wn = 1;
  for (long n = 0; n <= N; ++n, Wn *= W) {
    const char* what = nullptr;
    if (sgn(q[n]) < 0) what = "negative count";
    else if (q[n] > Wn) what = "count exceeds W^n";
    else if (w[n] > q[n]) what = "lower-bound witness exceeds count";
    else if (q[n] > h[n]) what = "count exceeds half-plane count";
    if (what) {
      r.passed = false;
      r.first_violation = n;
      r.message = std::string(what) + " at n=" + std::to_string(n);
      break;
    }
    r.n_checked = n + 1;
  }
  return r;
}

} // namespace qwalks::growth
