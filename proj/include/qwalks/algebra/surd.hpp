#pragma once

#include "qwalks/algebra/bigint.hpp"
#include "qwalks/errors.hpp"

#include <cmath>
#include <string>

namespace qwalks {

/// a + b·√d with d square-free, and b = 0 exactly when d = 0.
class QuadraticSurd {
public:
  QuadraticSurd() = default;
  QuadraticSurd(const BigRational& a) : a_(a) {}
  QuadraticSurd(long a) : a_(a) {}
  QuadraticSurd(BigRational a, BigRational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    normalize();
  }

  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }
  const BigInt& d() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  QuadraticSurd& operator+=(const BigRational& q) {
    a_ += q;
    return *this;
  }
  QuadraticSurd& operator*=(const BigRational& q) {
    a_ *= q;
    b_ *= q;
    normalize();
    return *this;
  }
  friend QuadraticSurd operator+(QuadraticSurd s, const BigRational& q) { return s += q; }
  friend QuadraticSurd operator+(const BigRational& q, QuadraticSurd s) { return s += q; }
  friend QuadraticSurd operator*(QuadraticSurd s, const BigRational& q) { return s *= q; }
  friend QuadraticSurd operator*(const BigRational& q, QuadraticSurd s) { return s *= q; }
  friend QuadraticSurd operator-(QuadraticSurd s) { return s *= BigRational(-1); }

  /// Sum of surds sharing a radicand (or with at least one rational side).
  friend QuadraticSurd operator+(const QuadraticSurd& s, const QuadraticSurd& t) {
    if (s.d_ != 0 && t.d_ != 0 && s.d_ != t.d_) throw DomainError("surd sum with distinct radicands");
    BigInt d = s.d_ != 0 ? s.d_ : t.d_;
    return {s.a_ + t.a_, s.b_ + t.b_, d};
  }

  /// 1/(a + b√d) = (a − b√d)/(a² − b²d).
  QuadraticSurd reciprocal() const {
    BigRational n = a_ * a_ - b_ * b_ * BigRational(d_);
    if (n == 0) throw DomainError("surd reciprocal of zero");
    return {a_ / n, -b_ / n, d_};
  }

  /// Exact sign.
  int sign() const;

  double to_float() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

  friend bool operator==(const QuadraticSurd& s, const QuadraticSurd& t) {
    return s.a_ == t.a_ && s.b_ == t.b_ && s.d_ == t.d_;
  }

private:
  void normalize();

  BigRational a_ = 0;
  BigRational b_ = 0;
  BigInt d_ = 0;
};

namespace detail {

inline int sgn_q(const BigRational& q) { return sgn(q); }

/// sign(A + B√p) for p ≥ 0.
inline int sign1(const BigRational& A, const BigRational& B, const BigInt& p) {
  int sA = sgn_q(A), sB = (p == 0) ? 0 : sgn_q(B);
  if (sB == 0) return sA;
  if (sA == 0 || sA == sB) return sB;
  BigRational lhs = A * A, rhs = B * B * BigRational(p);
  if (lhs > rhs) return sA;
  if (lhs < rhs) return sB;
  return 0;
}

/// sign(A + B√p + C√q).
inline int sign2(const BigRational& A, const BigRational& B, const BigInt& p, const BigRational& C, const BigInt& q) {
  // L = A + B√p against R = −C√q; L − R = (L² − R²)/(L + R).
  int sL = sign1(A, B, p);
  int sR = (q == 0) ? 0 : -sgn_q(C);
  if (sL != sR) return sL > sR ? 1 : -1;
  if (sL == 0) return 0;
  BigRational c0 = A * A + B * B * BigRational(p) - C * C * BigRational(q);
  int t = sign1(c0, 2 * A * B, p);
  return sL * t;
}

/// Splits n > 0 as s²·f with f square-free.
inline void square_free(const BigInt& n, BigInt& s, BigInt& f) {
  s = 1;
  f = 1;
  BigInt m = n;
  for (unsigned long p = 2; BigInt(p) * p <= m; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) s *= p;
    if (e % 2) f *= p;
    if (p > 1000000) throw DomainError("radicand too large to factor");
  }
  f *= m;
}

} // namespace detail

inline void QuadraticSurd::normalize() {
  if (sgn(d_) < 0) throw DomainError("negative radicand");
  if (d_ == 0 || b_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  BigInt s, f;
  detail::square_free(d_, s, f);
  b_ *= BigRational(s);
  d_ = f;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

inline int QuadraticSurd::sign() const { return detail::sign1(a_, b_, d_); }

/// Exact three-way comparison, also across different radicands.
inline int compare(const QuadraticSurd& s, const QuadraticSurd& t) {
  return detail::sign2(s.a() - t.a(), s.b(), s.d(), -t.b(), t.d());
}

/// √q as r·√d.
inline QuadraticSurd sqrt_surd(const BigRational& q) {
  if (sgn(q) < 0) throw DomainError("sqrt_surd of a negative number");
  if (q == 0) return {};
  // √(n/m) = √(n·m)/m
  return {0, BigRational(1) / BigRational(q.get_den()), q.get_num() * q.get_den()};
}

inline std::string to_string(const QuadraticSurd& s) {
  if (s.is_rational()) return s.a().get_str();
  std::string r;
  if (s.a() != 0) r = s.a().get_str() + (sgn(s.b()) < 0 ? "-" : "+");
  else if (sgn(s.b()) < 0) r = "-";
  BigRational ab = abs(s.b());
  if (ab.get_num() != 1) r += ab.get_num().get_str();
  r += "√" + s.d().get_str();
  if (ab.get_den() != 1) r += "/" + ab.get_den().get_str();
  return r;
}

} // namespace qwalks
