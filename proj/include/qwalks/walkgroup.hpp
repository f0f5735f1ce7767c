#pragma once

#include "qwalks/algebra/ratfun.hpp"
#include "qwalks/enumerate/count_table.hpp"
#include "qwalks/stepset.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace qwalks::group {

struct BirationalMap {
  RationalFunction2 x_image;
  RationalFunction2 y_image;

  /// self ∘ (X, Y)
  BirationalMap after(const BirationalMap& inner) const {
    return {compose(x_image, inner.x_image, inner.y_image).reduced(),
            compose(y_image, inner.x_image, inner.y_image).reduced()};
  }
  static BirationalMap identity() { return {RationalFunction2::x(), RationalFunction2::y()}; }
  friend bool operator==(const BirationalMap&, const BirationalMap&) = default;
};

struct Generators {
  BirationalMap phi; // moves x
  BirationalMap psi; // moves y
};

namespace detail {

/// Coefficient of v^k in the inventory, as a polynomial in the other variable
/// (kept in its own slot of the exponent pair).
inline LaurentPoly2 section_coeff(const LaurentPoly2& S, Var v, int k) {
  return S.section(v, k).shifted(v == Var::X ? Exp2{-k, 0} : Exp2{0, -k});
}

inline bool preserves(const LaurentPoly2& S, const BirationalMap& g) {
  return substitute(S, g.x_image, g.y_image) == RationalFunction2(S);
}

} // namespace detail

/// Φ: x ↦ B₋(y)/(B₊(y)·x) and Ψ: y ↦ A₋(x)/(A₊(x)·y), where
/// S = B₋(y)/x + B₀(y) + B₊(y)·x = A₋(x)/y + A₀(x) + A₊(x)·y.
inline Generators generators(const StepSet& s) {
  const LaurentPoly2 S = inventory(s);
  const LaurentPoly2 Ap = detail::section_coeff(S, Var::Y, 1), Am = detail::section_coeff(S, Var::Y, -1);
  const LaurentPoly2 Bp = detail::section_coeff(S, Var::X, 1), Bm = detail::section_coeff(S, Var::X, -1);
  if (Ap.is_zero() || Am.is_zero()) throw Inapplicable("group: no y-positive or no y-negative step");
  if (Bp.is_zero() || Bm.is_zero()) throw Inapplicable("group: no x-positive or no x-negative step");
  Generators g;
  g.phi = {RationalFunction2(Bm, Bp * mono(1, 0)), RationalFunction2::y()};
  g.psi = {RationalFunction2::x(), RationalFunction2(Am, Ap * mono(0, 1))};
  if (!detail::preserves(S, g.phi) || !detail::preserves(S, g.psi))
    throw InternalError("generator does not preserve the inventory");
  return g;
}

struct OrbitElement {
  BirationalMap map;
  int sign = 1;
};

enum class OrbitStatus { Finite, ExceededBound };

/// Elements are materialized only for finite orbits.
struct Orbit {
  OrbitStatus status = OrbitStatus::ExceededBound;
  int order = 0;
  std::vector<OrbitElement> elements;
  bool finite() const { return status == OrbitStatus::Finite; }
};

namespace modp {

using u64 = std::uint64_t;
inline constexpr u64 P = (1ull << 61) - 1;

inline u64 mul(u64 a, u64 b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  u64 lo = static_cast<u64>(z & P), hi = static_cast<u64>(z >> 61);
  u64 r = lo + hi;
  return r >= P ? r - P : r;
}
inline u64 add(u64 a, u64 b) {
  u64 r = a + b;
  return r >= P ? r - P : r;
}
inline u64 pow(u64 b, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}
inline std::optional<u64> inv(u64 a) {
  if (a == 0) return std::nullopt;
  return pow(a, P - 2);
}

/// Σ c·t^k for a polynomial in one variable with small integer coefficients.
struct Poly1 {
  std::vector<std::pair<int, u64>> terms;
  std::optional<u64> at(u64 t) const {
    auto ti = inv(t);
    if (!ti) return std::nullopt;
    u64 r = 0;
    for (auto [k, c] : terms) r = add(r, mul(c, pow(k >= 0 ? t : *ti, static_cast<u64>(k >= 0 ? k : -k))));
    return r;
  }
};

inline Poly1 from(const LaurentPoly2& p, Var v) {
  Poly1 r;
  for (const auto& [e, c] : p.terms()) {
    long n = c.get_num().get_si();
    r.terms.push_back({v == Var::X ? e.i : e.j, static_cast<u64>(n)});
  }
  return r;
}

/// Length of the point orbit of a random point, or nullopt if it does not
/// return within max_elements steps.
inline std::optional<int> orbit_length(const StepSet& s, int max_elements) {
  const LaurentPoly2 S = inventory(s);
  auto Ap = from(detail::section_coeff(S, Var::Y, 1), Var::X), Am = from(detail::section_coeff(S, Var::Y, -1), Var::X);
  auto Bp = from(detail::section_coeff(S, Var::X, 1), Var::Y), Bm = from(detail::section_coeff(S, Var::X, -1), Var::Y);
  std::mt19937_64 rng(0x5eed5eedULL);
  for (int attempt = 0; attempt < 16; ++attempt) {
    const u64 x0 = rng() % (P - 2) + 2, y0 = rng() % (P - 2) + 2;
    u64 x = x0, y = y0;
    bool bad = false;
    for (int k = 1; k <= max_elements && !bad; ++k) {
      if (k % 2 == 1) {
        auto bm = Bm.at(y), bp = Bp.at(y);
        auto d = bp ? inv(mul(*bp, x)) : std::nullopt;
        if (!bm || !d) bad = true;
        else x = mul(*bm, *d);
      } else {
        auto am = Am.at(x), ap = Ap.at(x);
        auto d = ap ? inv(mul(*ap, y)) : std::nullopt;
        if (!am || !d) bad = true;
        else y = mul(*am, *d);
      }
      if (!bad && x == x0 && y == y0) return k;
    }
    if (!bad) return std::nullopt;
  }
  throw InternalError("orbit screening hit a pole at every sample point");
}

} // namespace modp

/// Alternately applies Φ, Ψ starting from the identity. A modular image of
/// a random point screens the length first; the exact orbit is then built
/// and checked element by element.
inline Orbit orbit(const StepSet& s, int max_elements = 200) {
  const Generators gens = generators(s);
  Orbit o;
  auto len = modp::orbit_length(s, max_elements);
  if (!len) return o;
  const LaurentPoly2 S = inventory(s);
  const BirationalMap id = BirationalMap::identity();
  o.elements.push_back({id, 1});
  BirationalMap cur = id;
  for (int k = 1; k <= *len; ++k) {
    cur = (k % 2 == 1 ? gens.phi : gens.psi).after(cur);
    if (cur == id) {
      o.status = OrbitStatus::Finite;
      o.order = k;
      return o;
    }
    if (!detail::preserves(S, cur)) throw InternalError("orbit element does not preserve the inventory");
    for (const auto& e : o.elements)
      if (e.map == cur) throw InternalError("orbit revisits a non-identity element");
    o.elements.push_back({cur, k % 2 == 0 ? 1 : -1});
  }
  throw InternalError("exact orbit does not close where its modular image does");
}

struct OrbitSum {
  RationalFunction2 value;
  bool is_laurent = false;
  bool is_zero() const { return value.is_zero(); }
};

/// Σ sgn(g)·g(xy).
inline OrbitSum orbit_sum(const Orbit& o) {
  if (!o.finite()) throw Inapplicable("orbit sum of an orbit that did not close");
  RationalFunction2 sum;
  for (const auto& e : o.elements) {
    RationalFunction2 term = e.map.x_image * e.map.y_image;
    sum = (e.sign > 0 ? sum + term : sum - term).reduced();
  }
  OrbitSum r{sum, false};
  r.is_laurent = sum.is_laurent();
  return r;
}

inline OrbitSum orbit_sum(const StepSet& s) { return orbit_sum(orbit(s)); }

/// q(i,j;n) = [x^(i+1) y^(j+1)] OS(x,y)·S(x,y)^n for all 0 ≤ i,j ≤ n.
inline Layer orbit_sum_layer(const StepSet& s, int n) {
  if (n < 0) throw DomainError("n must be nonnegative");
  OrbitSum os = orbit_sum(s);
  if (os.is_zero()) throw Inapplicable("orbit sum vanishes; coefficient extraction does not apply");
  if (!os.is_laurent) throw Inapplicable("orbit sum is not a Laurent polynomial");
  const LaurentPoly2 prod = os.value.as_laurent() * inventory(s).pow(static_cast<unsigned>(n));
  Layer l(n, 0, 0, n + 1, n + 1);
  for (const auto& [e, c] : prod.terms()) {
    if (e.i < 1 || e.j < 1) continue;
    if (!l.contains(e.i - 1, e.j - 1)) throw InternalError("orbit-sum coefficient outside the reachable window");
    if (!is_integral(c) || sgn(c) < 0) throw InternalError("orbit-sum coefficient is not a count");
    l.ref(e.i - 1, e.j - 1) = c.get_num();
  }
  return l;
}

inline BigInt orbit_sum_counts(const StepSet& s, int n, int i, int j) {
  if (i < 0 || j < 0) throw DomainError("endpoint outside the quarter plane");
  return orbit_sum_layer(s, n).at(i, j);
}

} // namespace qwalks::group
