#pragma once

#include "qwalks/algebra/bigint.hpp"
#include "qwalks/errors.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace qwalks {

struct Exp2 {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Exp2&, const Exp2&) = default;
  friend Exp2 operator+(Exp2 a, Exp2 b) { return {a.i + b.i, a.j + b.j}; }
};

enum class Var { X, Y };

namespace detail {
inline int add_exp(int a, int b) { return a + b; }
inline Exp2 add_exp(Exp2 a, Exp2 b) { return a + b; }
inline int var_exp(int e, Var) { return e; }
inline int var_exp(Exp2 e, Var v) { return v == Var::X ? e.i : e.j; }
} // namespace detail

/// Sparse Laurent polynomial over Q keyed by exponent E (int or Exp2).
/// Zero coefficients are never stored.
template <class E>
class Laurent {
public:
  using Map = std::map<E, BigRational>;

  Laurent() = default;
  explicit Laurent(const BigRational& c) {
    if (c != 0) terms_.emplace(E{}, c);
  }
  static Laurent monomial(E e, const BigRational& c = 1) {
    Laurent p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigRational coeff(E e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  void add_term(E e, const BigRational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const BigRational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) { return a *= BigRational(-1); }
  friend Laurent operator*(Laurent a, const BigRational& s) { return a *= s; }
  friend Laurent operator*(const BigRational& s, Laurent a) { return a *= s; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    BigRational prod;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        prod = ca * cb;
        r.add_term(detail::add_exp(ea, eb), prod);
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  Laurent pow(unsigned e) const {
    Laurent r(BigRational(1)), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// Terms with a negative exponent in v.
  Laurent pole_part(Var v = Var::Y) const {
    Laurent r;
    for (const auto& [e, c] : terms_)
      if (detail::var_exp(e, v) < 0) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
  }

  /// Terms whose exponent in v equals k.
  Laurent section(Var v, int k) const {
    Laurent r;
    for (const auto& [e, c] : terms_)
      if (detail::var_exp(e, v) == k) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
  }

  Laurent shifted(E s) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), detail::add_exp(e, s), c);
    return r;
  }

  bool all_integral() const {
    for (const auto& kv : terms_)
      if (!is_integral(kv.second)) return false;
    return true;
  }

private:
  Map terms_;
};

using LaurentPoly1 = Laurent<int>;
using LaurentPoly2 = Laurent<Exp2>;

inline LaurentPoly2 mono(int i, int j, const BigRational& c = 1) {
  return LaurentPoly2::monomial({i, j}, c);
}
inline LaurentPoly1 mono1(int k, const BigRational& c = 1) { return LaurentPoly1::monomial(k, c); }

/// x -> 1.
inline LaurentPoly1 substitute_x1(const LaurentPoly2& p) {
  LaurentPoly1 r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.j, c);
  return r;
}

inline BigRational evaluate(const LaurentPoly1& p, const BigRational& y) {
  BigRational r = 0;
  for (const auto& [k, c] : p.terms()) {
    BigRational v = qpow(y, static_cast<unsigned long>(k < 0 ? -k : k));
    r += k < 0 ? BigRational(c / v) : BigRational(c * v);
  }
  return r;
}

/// Minimum exponents over the support; (0,0) for the zero polynomial.
inline Exp2 min_exponents(const LaurentPoly2& p) {
  if (p.is_zero()) return {};
  Exp2 m{p.terms().begin()->first.i, p.terms().begin()->first.j};
  for (const auto& kv : p.terms()) {
    m.i = std::min(m.i, kv.first.i);
    m.j = std::min(m.j, kv.first.j);
  }
  return m;
}

inline Exp2 max_exponents(const LaurentPoly2& p) {
  if (p.is_zero()) return {};
  Exp2 m = p.terms().begin()->first;
  for (const auto& kv : p.terms()) {
    m.i = std::max(m.i, kv.first.i);
    m.j = std::max(m.j, kv.first.j);
  }
  return m;
}

/// Swaps the roles of x and y.
inline LaurentPoly2 transpose(const LaurentPoly2& p) {
  LaurentPoly2 r;
  for (const auto& [e, c] : p.terms()) r.add_term({e.j, e.i}, c);
  return r;
}

inline std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    BigRational a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool unit = a == 1 && (e.i != 0 || e.j != 0);
    if (!unit) os << a.get_str();
    auto var = [&](const char* name, int k) {
      if (k == 0) return;
      if (!unit) os << "*";
      unit = false;
      os << name;
      if (k != 1) os << "^" << k;
    };
    var("x", e.i);
    var("y", e.j);
  }
  return os.str();
}

inline std::string to_string(const LaurentPoly1& p) {
  LaurentPoly2 q;
  for (const auto& [k, c] : p.terms()) q.add_term({0, k}, c);
  return to_string(q);
}

} // namespace qwalks
