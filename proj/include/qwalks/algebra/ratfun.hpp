#pragma once

#include "qwalks/algebra/laurent.hpp"
#include "qwalks/algebra/polygcd.hpp"

#include <string>
#include <vector>

namespace qwalks {

/// num/den with den shifted to have minimum exponents (0,0) and its
/// lexicographically largest coefficient equal to 1.
class RationalFunction2 {
public:
  RationalFunction2() : den_(BigRational(1)) {}
  RationalFunction2(LaurentPoly2 num) : num_(std::move(num)), den_(BigRational(1)) {}
  RationalFunction2(LaurentPoly2 num, LaurentPoly2 den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RationalFunction2 x() { return {mono(1, 0)}; }
  static RationalFunction2 y() { return {mono(0, 1)}; }

  const LaurentPoly2& num() const { return num_; }
  const LaurentPoly2& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.size() == 1; }

  /// The value as a Laurent polynomial; requires is_laurent().
  LaurentPoly2 as_laurent() const {
    if (!is_laurent()) throw DomainError("rational function is not a Laurent polynomial");
    const auto& [e, c] = *den_.terms().begin();
    return num_.shifted({-e.i, -e.j}) * (BigRational(1) / c);
  }

  /// Cancels the full polynomial gcd of numerator and denominator.
  RationalFunction2& reduce() {
    if (num_.is_zero()) return *this;
    Exp2 m = min_exponents(num_);
    gcd::BPoly n = gcd::to_bpoly(num_.shifted({-m.i, -m.j}));
    gcd::BPoly d = gcd::to_bpoly(den_);
    gcd::BPoly g = gcd::bgcd(n, d);
    if (gcd::deg(g) > 0 || (g.size() == 1 && g[0].size() > 1)) {
      n = gcd::bdiv(n, g);
      d = gcd::bdiv(d, g);
    }
    num_ = gcd::from_bpoly(n).shifted(m);
    den_ = gcd::from_bpoly(d);
    normalize();
    return *this;
  }

  RationalFunction2 reduced() const {
    RationalFunction2 r = *this;
    return r.reduce();
  }

  friend RationalFunction2 operator+(const RationalFunction2& a, const RationalFunction2& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction2 operator-(const RationalFunction2& a) { return {-a.num_, a.den_}; }
  friend RationalFunction2 operator-(const RationalFunction2& a, const RationalFunction2& b) { return a + (-b); }
  friend RationalFunction2 operator*(const RationalFunction2& a, const RationalFunction2& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction2 operator/(const RationalFunction2& a, const RationalFunction2& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  /// Exact equality by cross-multiplication.
  friend bool operator==(const RationalFunction2& a, const RationalFunction2& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

private:
  void normalize() {
    if (den_.is_zero()) throw DomainError("division by the zero polynomial");
    if (num_.is_zero()) {
      den_ = LaurentPoly2(BigRational(1));
      return;
    }
    Exp2 m = min_exponents(den_);
    if (m.i != 0 || m.j != 0) {
      den_ = den_.shifted({-m.i, -m.j});
      num_ = num_.shifted({-m.i, -m.j});
    }
    BigRational lc = den_.terms().rbegin()->second;
    if (lc != 1) {
      BigRational inv = BigRational(1) / lc;
      den_ *= inv;
      num_ *= inv;
    }
  }

  LaurentPoly2 num_;
  LaurentPoly2 den_;
};

namespace detail {
inline std::vector<LaurentPoly2> powers(const LaurentPoly2& p, int k) {
  std::vector<LaurentPoly2> r{LaurentPoly2(BigRational(1))};
  for (int e = 1; e <= k; ++e) r.push_back(r.back() * p);
  return r;
}
} // namespace detail

/// p(X, Y) for rational X, Y.
inline RationalFunction2 substitute(const LaurentPoly2& p, const RationalFunction2& X, const RationalFunction2& Y) {
  if (p.is_zero()) return {};
  Exp2 lo = min_exponents(p), hi = max_exponents(p);
  int A = std::max(0, -lo.i), B = std::max(0, hi.i);
  int C = std::max(0, -lo.j), D = std::max(0, hi.j);
  auto pa = detail::powers(X.num(), std::max(hi.i + A, A)), pb = detail::powers(X.den(), std::max(B - lo.i, B));
  auto pc = detail::powers(Y.num(), std::max(hi.j + C, C)), pd = detail::powers(Y.den(), std::max(D - lo.j, D));
  LaurentPoly2 num;
  for (const auto& [e, c] : p.terms())
    num += (pa[e.i + A] * pb[B - e.i]) * (pc[e.j + C] * pd[D - e.j]) * c;
  LaurentPoly2 den = (pa[A] * pb[B]) * (pc[C] * pd[D]);
  return {std::move(num), std::move(den)};
}

inline RationalFunction2 compose(const RationalFunction2& f, const RationalFunction2& X, const RationalFunction2& Y) {
  return substitute(f.num(), X, Y) / substitute(f.den(), X, Y);
}

inline std::string to_string(const RationalFunction2& f) {
  if (f.den().size() == 1 && f.den().terms().begin()->first == Exp2{}) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

} // namespace qwalks
