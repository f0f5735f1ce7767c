#pragma once

// Greatest common divisors of bivariate polynomials over Q, used to reduce
// rational functions whose terms blow up under composition.

#include "qwalks/algebra/laurent.hpp"

#include <vector>

namespace qwalks::gcd {

using UPoly = std::vector<BigRational>; // index = degree in y
using BPoly = std::vector<UPoly>;       // index = degree in x

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void trim(BPoly& p) {
  for (auto& c : p) trim(c);
  while (!p.empty() && p.back().empty()) p.pop_back();
}

inline int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
inline int deg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly add(const UPoly& a, const UPoly& b, const BigRational& sb = 1) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += sb * b[k];
  trim(r);
  return r;
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

/// Returns quotient; a is replaced by the remainder.
inline UPoly divmod(UPoly& a, const UPoly& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  UPoly q;
  trim(a);
  if (deg(a) < deg(b)) return q;
  q.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && deg(a) >= deg(b)) {
    int s = deg(a) - deg(b);
    BigRational f = a.back() / b.back();
    q[s] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + s] -= f * b[k];
    trim(a);
  }
  trim(q);
  return q;
}

inline UPoly monic(UPoly p) {
  if (p.empty()) return p;
  BigRational l = p.back();
  for (auto& c : p) c /= l;
  return p;
}

inline UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    divmod(a, b);
    std::swap(a, b);
  }
  return monic(a);
}

inline UPoly exact_div(UPoly a, const UPoly& b) {
  UPoly q = divmod(a, b);
  if (!a.empty()) throw InternalError("inexact univariate division");
  return q;
}

inline UPoly content(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    g = ugcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

inline BPoly div_content(BPoly p, const UPoly& c) {
  for (auto& k : p)
    if (!k.empty()) k = exact_div(k, c);
  return p;
}

/// Pseudo-remainder of a by b with respect to x.
inline BPoly prem(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    int s = deg(a) - deg(b);
    UPoly la = a.back();
    for (auto& c : a) c = mul(c, lb);
    for (std::size_t k = 0; k < b.size(); ++k) a[k + s] = add(a[k + s], mul(la, b[k]), -1);
    trim(a);
  }
  return a;
}

inline BPoly primitive(const BPoly& p) {
  if (p.empty()) return p;
  return div_content(p, content(p));
}

inline BPoly scale(BPoly p, const UPoly& c) {
  for (auto& k : p) k = mul(k, c);
  trim(p);
  return p;
}

inline BPoly bgcd(BPoly a, BPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  UPoly c = ugcd(content(a), content(b));
  a = primitive(a);
  b = primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (true) {
    if (deg(b) == 0) return BPoly{c};
    BPoly r = prem(a, b);
    if (r.empty()) return scale(b, c);
    a = std::move(b);
    b = primitive(r);
  }
}

/// Exact quotient a / g in Q[y][x].
inline BPoly bdiv(BPoly a, const BPoly& g) {
  trim(a);
  if (g.empty()) throw DomainError("polynomial division by zero");
  BPoly q;
  if (deg(a) < deg(g)) {
    if (a.empty()) return q;
    throw InternalError("inexact bivariate division");
  }
  q.assign(a.size() - g.size() + 1, {});
  while (!a.empty() && deg(a) >= deg(g)) {
    int s = deg(a) - deg(g);
    UPoly t = exact_div(a.back(), g.back());
    for (std::size_t k = 0; k < g.size(); ++k) a[k + s] = add(a[k + s], mul(t, g[k]), -1);
    q[s] = std::move(t);
    trim(a);
  }
  if (!a.empty()) throw InternalError("inexact bivariate division");
  trim(q);
  return q;
}

/// p must have nonnegative exponents.
inline BPoly to_bpoly(const LaurentPoly2& p) {
  BPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e.i < 0 || e.j < 0) throw InternalError("to_bpoly: negative exponent");
    if (static_cast<int>(r.size()) <= e.i) r.resize(e.i + 1);
    auto& u = r[e.i];
    if (static_cast<int>(u.size()) <= e.j) u.resize(e.j + 1, 0);
    u[e.j] = c;
  }
  trim(r);
  return r;
}

inline LaurentPoly2 from_bpoly(const BPoly& p) {
  LaurentPoly2 r;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      r.add_term({static_cast<int>(i), static_cast<int>(j)}, p[i][j]);
  return r;
}

} // namespace qwalks::gcd
