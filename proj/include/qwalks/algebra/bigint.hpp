#pragma once

#include "qwalks/errors.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <cstdint>
#include <string>
#include <vector>

namespace qwalks {

using BigInt = mpz_class;
using BigRational = mpq_class;
using Series = std::vector<BigInt>;

inline BigRational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" with the "/q" dropped when q = 1.
inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline BigRational parse_rational(const std::string& s) {
  BigRational q;
  try {
    q = BigRational(s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline bool is_integral(const BigRational& q) { return q.get_den() == 1; }

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt ipow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline BigRational qpow(const BigRational& b, unsigned long e) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
  return r;
}

/// Natural log of a positive big integer without overflowing a double.
inline double log_big(const BigInt& z) {
  long ex = 0;
  double m = mpz_get_d_2exp(&ex, z.get_mpz_t());
  return std::log(m) + static_cast<double>(ex) * 0.69314718055994530942;
}

} // namespace qwalks
