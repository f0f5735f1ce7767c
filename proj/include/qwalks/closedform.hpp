#pragma once

#include "qwalks/algebra/bigint.hpp"
#include "qwalks/errors.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace qwalks::closedform {

/// Each id counts walks of a length tied to its argument n: 3n for
/// KrewerasOrigin, 2n for GouyouBeauchampsOrigin, S11Origin and S13XAxis,
/// 4n for S15Origin, and n otherwise.
enum class ClosedFormId {
  Catalan,
  Motzkin,
  DyckPrefix,
  KrewerasOrigin,
  GouyouBeauchampsOrigin,
  S2All,
  S11Origin,
  S13XAxis,
  S15Origin,
  PartiallyDirectedSAW,
};

inline constexpr std::array<ClosedFormId, 10> kAllIds{
    ClosedFormId::Catalan,   ClosedFormId::Motzkin,   ClosedFormId::DyckPrefix, ClosedFormId::KrewerasOrigin,
    ClosedFormId::GouyouBeauchampsOrigin, ClosedFormId::S2All, ClosedFormId::S11Origin, ClosedFormId::S13XAxis,
    ClosedFormId::S15Origin, ClosedFormId::PartiallyDirectedSAW};

inline std::string_view to_string(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::Catalan: return "Catalan";
    case ClosedFormId::Motzkin: return "Motzkin";
    case ClosedFormId::DyckPrefix: return "DyckPrefix";
    case ClosedFormId::KrewerasOrigin: return "KrewerasOrigin";
    case ClosedFormId::GouyouBeauchampsOrigin: return "GouyouBeauchampsOrigin";
    case ClosedFormId::S2All: return "S2All";
    case ClosedFormId::S11Origin: return "S11Origin";
    case ClosedFormId::S13XAxis: return "S13XAxis";
    case ClosedFormId::S15Origin: return "S15Origin";
    case ClosedFormId::PartiallyDirectedSAW: return "PartiallyDirectedSAW";
  }
  return "?";
}

/// Walk length counted by eval(id, n).
inline long walk_length(ClosedFormId id, long n) {
  switch (id) {
    case ClosedFormId::KrewerasOrigin: return 3 * n;
    case ClosedFormId::GouyouBeauchampsOrigin:
    case ClosedFormId::S11Origin:
    case ClosedFormId::S13XAxis: return 2 * n;
    case ClosedFormId::S15Origin: return 4 * n;
    default: return n;
  }
}

inline BigInt catalan(unsigned long n) { return binomial(2 * n, n) / (n + 1); }

inline BigInt motzkin(unsigned long n) {
  BigInt s = 0;
  for (unsigned long k = 0; 2 * k <= n; ++k) s += binomial(n, 2 * k) * catalan(k);
  return s;
}

/// Meanders with steps ±1: binom(n, ⌊n/2⌋).
inline BigInt dyck_prefix(unsigned long n) { return binomial(n, n / 2); }

/// Coefficients of t(1 − t)/(1 − 2t − t²).
inline Series saw_pd_series(long order) {
  if (order < 0) throw DomainError("order must be nonnegative");
  // a = 1/(1 − 2t − t²); coefficient n is a_{n−1} − a_{n−2}.
  std::vector<BigInt> a(order + 1);
  for (long n = 0; n <= order; ++n) a[n] = n == 0 ? BigInt(1) : (n == 1 ? BigInt(2) : BigInt(2 * a[n - 1] + a[n - 2]));
  Series p(order + 1, 0);
  for (long n = 1; n <= order; ++n) p[n] = a[n - 1] - (n >= 2 ? a[n - 2] : BigInt(0));
  return p;
}

inline BigInt eval(ClosedFormId id, long n) {
  if (n < 0) throw DomainError("closed form argument must be nonnegative");
  const auto u = static_cast<unsigned long>(n);
  switch (id) {
    case ClosedFormId::Catalan: return catalan(u);
    case ClosedFormId::Motzkin: return motzkin(u);
    case ClosedFormId::DyckPrefix: return dyck_prefix(u);
    case ClosedFormId::KrewerasOrigin:
      return ipow(4, u) * binomial(3 * u, u) / ((u + 1) * (2 * u + 1));
    case ClosedFormId::GouyouBeauchampsOrigin:
      return 6 * factorial(2 * u) * factorial(2 * u + 2) /
             (factorial(u) * factorial(u + 1) * factorial(u + 2) * factorial(u + 3));
    case ClosedFormId::S2All: {
      BigInt d = dyck_prefix(u);
      return d * d;
    }
    case ClosedFormId::S11Origin: return catalan(u) * motzkin(u);
    case ClosedFormId::S13XAxis: {
      BigInt s = 0;
      for (unsigned long k = 0; k <= u; ++k) s += binomial(u, k) * dyck_prefix(2 * u - k);
      return catalan(u) * s;
    }
    case ClosedFormId::S15Origin: return catalan(2 * u) * catalan(u);
    case ClosedFormId::PartiallyDirectedSAW: return saw_pd_series(n)[u];
  }
  throw InternalError("unknown closed form");
}

/// Σ binom(n,i)·q(i): walks of the parent with one new step inserted freely.
inline BigInt bootstrap_one(const Series& q, long n) {
  if (n < 0 || static_cast<std::size_t>(n) >= q.size()) throw DomainError("bootstrap_one: q not defined up to n");
  BigInt s = 0;
  for (long i = 0; i <= n; ++i) s += binomial(n, i) * q[i];
  return s;
}

/// Σ binom(n,i)·d(i)·q(n−i): a Dyck prefix of new steps interleaved with a
/// parent walk.
inline BigInt bootstrap_two(const Series& q, long n) {
  if (n < 0 || static_cast<std::size_t>(n) >= q.size()) throw DomainError("bootstrap_two: q not defined up to n");
  BigInt s = 0;
  for (long i = 0; i <= n; ++i) s += binomial(n, i) * dyck_prefix(i) * q[n - i];
  return s;
}

} // namespace qwalks::closedform
