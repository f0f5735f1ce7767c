#pragma once

#include "qwalks/algebra/bigint.hpp"
#include "qwalks/errors.hpp"

#include <algorithm>
#include <vector>

namespace qwalks {

namespace kronecker {

inline std::size_t max_bits(const std::vector<BigInt>& v) {
  std::size_t b = 0;
  for (const auto& z : v) b = std::max(b, mpz_sizeinbase(z.get_mpz_t(), 2));
  return b;
}

/// Σ v[k]·2^(k·slot), all v[k] ≥ 0.
inline BigInt pack(const BigInt* v, std::size_t n, std::size_t slot) {
  if (n == 0) return 0;
  if (n == 1) return v[0];
  std::size_t h = n / 2;
  BigInt hi = pack(v + h, n - h, slot);
  mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), h * slot);
  return hi + pack(v, h, slot);
}

inline void unpack(const BigInt& z, BigInt* out, std::size_t n, std::size_t slot) {
  if (n == 0) return;
  if (n == 1) {
    out[0] = z;
    return;
  }
  std::size_t h = n / 2;
  BigInt lo, hi;
  mpz_tdiv_r_2exp(lo.get_mpz_t(), z.get_mpz_t(), h * slot);
  mpz_tdiv_q_2exp(hi.get_mpz_t(), z.get_mpz_t(), h * slot);
  unpack(lo, out, h, slot);
  unpack(hi, out + h, n - h, slot);
}

/// Product of nonnegative integer sequences truncated to `len` terms.
inline std::vector<BigInt> mul_nonneg(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t len) {
  std::size_t na = std::min(a.size(), len), nb = std::min(b.size(), len);
  std::vector<BigInt> r(len);
  if (na == 0 || nb == 0) return r;
  std::size_t terms = std::min(na, nb);
  std::size_t slot = max_bits(a) + max_bits(b) + 64 - __builtin_clzll(terms) + 1;
  BigInt p = pack(a.data(), na, slot) * pack(b.data(), nb, slot);
  std::size_t out = std::min(len, na + nb - 1);
  if (out < na + nb - 1) mpz_tdiv_r_2exp(p.get_mpz_t(), p.get_mpz_t(), out * slot);
  unpack(p, r.data(), out, slot);
  return r;
}

inline void split_sign(const std::vector<BigInt>& v, std::vector<BigInt>& pos, std::vector<BigInt>& neg) {
  pos.assign(v.size(), 0);
  neg.assign(v.size(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) (sgn(v[k]) >= 0 ? pos[k] : neg[k]) = abs(v[k]);
}

/// Signed product through four nonnegative products.
inline std::vector<BigInt> mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t len) {
  bool an = std::any_of(a.begin(), a.end(), [](const BigInt& z) { return sgn(z) < 0; });
  bool bn = std::any_of(b.begin(), b.end(), [](const BigInt& z) { return sgn(z) < 0; });
  if (!an && !bn) return mul_nonneg(a, b, len);
  std::vector<BigInt> ap, am, bp, bm;
  split_sign(a, ap, am);
  split_sign(b, bp, bm);
  auto r = mul_nonneg(ap, bp, len);
  auto s = mul_nonneg(am, bm, len);
  auto u = mul_nonneg(ap, bm, len);
  auto w = mul_nonneg(am, bp, len);
  for (std::size_t k = 0; k < len; ++k) r[k] += s[k] - u[k] - w[k];
  return r;
}

} // namespace kronecker

/// Truncated power series c_0 + c_1 t + ... + c_N t^N over Q.
class PowerSeries1 {
public:
  PowerSeries1() = default;
  PowerSeries1(std::size_t order, std::vector<BigRational> c) : coeffs_(std::move(c)), order_(order) {
    coeffs_.resize(order_ + 1, 0);
  }
  explicit PowerSeries1(std::size_t order) : coeffs_(order + 1, 0), order_(order) {}

  static PowerSeries1 from_integers(std::size_t order, const std::vector<BigInt>& c) {
    PowerSeries1 s(order);
    for (std::size_t k = 0; k < std::min(c.size(), order + 1); ++k) s.coeffs_[k] = c[k];
    return s;
  }

  std::size_t order() const { return order_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  const BigRational& operator[](std::size_t k) const { return coeffs_.at(k); }
  BigRational& operator[](std::size_t k) { return coeffs_.at(k); }

  bool all_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& q) { return is_integral(q); });
  }
  std::vector<BigInt> integers() const {
    std::vector<BigInt> r;
    r.reserve(coeffs_.size());
    for (const auto& q : coeffs_) {
      if (!is_integral(q)) throw InternalError("series coefficient is not an integer");
      r.push_back(q.get_num());
    }
    return r;
  }

  PowerSeries1 truncated(std::size_t order) const {
    std::vector<BigRational> c(coeffs_.begin(), coeffs_.begin() + std::min(coeffs_.size(), order + 1));
    return {order, std::move(c)};
  }

  friend PowerSeries1 operator+(const PowerSeries1& a, const PowerSeries1& b) {
    std::size_t o = std::min(a.order_, b.order_);
    PowerSeries1 r(o);
    for (std::size_t k = 0; k <= o; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
  }
  friend PowerSeries1 operator-(const PowerSeries1& a, const PowerSeries1& b) {
    std::size_t o = std::min(a.order_, b.order_);
    PowerSeries1 r(o);
    for (std::size_t k = 0; k <= o; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
  }
  friend PowerSeries1 operator*(const BigRational& s, PowerSeries1 a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }

  friend PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b) {
    std::size_t o = std::min(a.order_, b.order_);
    if (a.all_integral() && b.all_integral()) {
      auto av = a.truncated(o).integers(), bv = b.truncated(o).integers();
      std::vector<BigInt> p;
      if (o < 32) {
        p.assign(o + 1, 0);
        for (std::size_t i = 0; i <= o; ++i)
          if (av[i] != 0)
            for (std::size_t j = 0; i + j <= o; ++j) mpz_addmul(p[i + j].get_mpz_t(), av[i].get_mpz_t(), bv[j].get_mpz_t());
      } else {
        p = kronecker::mul(av, bv, o + 1);
      }
      return from_integers(o, p);
    }
    PowerSeries1 r(o);
    for (std::size_t i = 0; i <= o; ++i)
      if (a.coeffs_[i] != 0)
        for (std::size_t j = 0; i + j <= o; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return r;
  }

  /// Multiplication by t, keeping the order.
  PowerSeries1 times_t() const {
    PowerSeries1 r(order_);
    for (std::size_t k = 0; k < order_; ++k) r.coeffs_[k + 1] = coeffs_[k];
    return r;
  }

  /// 1/self by Newton iteration; requires a nonzero constant term.
  PowerSeries1 inverse() const {
    if (coeffs_[0] == 0) throw DomainError("series inverse: zero constant term");
    PowerSeries1 g(0, {BigRational(1) / coeffs_[0]});
    std::size_t prec = 0;
    while (prec < order_) {
      prec = std::min(order_, 2 * prec + 1);
      PowerSeries1 gg = g.truncated(prec);
      PowerSeries1 two(prec);
      two[0] = 2;
      g = gg * (two - truncated(prec) * gg);
    }
    return g.truncated(order_);
  }

  friend bool operator==(const PowerSeries1&, const PowerSeries1&) = default;

private:
  std::vector<BigRational> coeffs_;
  std::size_t order_ = 0;
};

} // namespace qwalks
