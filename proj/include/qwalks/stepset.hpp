#pragma once

#include "qwalks/algebra/laurent.hpp"
#include "qwalks/algebra/surd.hpp"
#include "qwalks/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qwalks {

/// Compass order, clockwise from north.
enum class Dir : int { N, NE, E, SE, S, SW, W, NW };

inline constexpr std::array<std::string_view, 8> kDirNames{"N", "NE", "E", "SE", "S", "SW", "W", "NW"};
inline constexpr std::array<int, 8> kDx{0, 1, 1, 1, 0, -1, -1, -1};
inline constexpr std::array<int, 8> kDy{1, 1, 0, -1, -1, -1, 0, 1};

inline int dir_index(int dx, int dy) {
  for (int k = 0; k < 8; ++k)
    if (kDx[k] == dx && kDy[k] == dy) return k;
  throw DomainError("not a small step");
}

struct Step {
  int dx = 0;
  int dy = 0;
  std::uint32_t weight = 1;
  friend bool operator==(const Step&, const Step&) = default;
};

struct DriftVector {
  long dx_total = 0;
  long dy_total = 0;
  friend bool operator==(const DriftVector&, const DriftVector&) = default;
};

enum class Axis { Diagonal, Horizontal, Vertical };

/// Weighted set of small steps, stored as one weight per compass direction.
class StepSet {
public:
  StepSet() = default;

  explicit StepSet(std::vector<Step> steps) {
    for (const auto& s : steps) add(s);
    check_nonempty();
  }
  StepSet(std::initializer_list<Dir> dirs) {
    for (Dir d : dirs) w_[static_cast<int>(d)] += 1;
    check_nonempty();
  }

  static StepSet from_mask(unsigned mask) {
    StepSet s;
    for (int k = 0; k < 8; ++k)
      if (mask & (1u << k)) s.w_[k] = 1;
    s.check_nonempty();
    return s;
  }

  std::uint32_t weight(Dir d) const { return w_[static_cast<int>(d)]; }
  std::uint32_t weight(int k) const { return w_[k]; }
  bool has(Dir d) const { return weight(d) != 0; }

  std::vector<Step> steps() const {
    std::vector<Step> r;
    for (int k = 0; k < 8; ++k)
      if (w_[k]) r.push_back({kDx[k], kDy[k], w_[k]});
    return r;
  }

  std::size_t size() const {
    return static_cast<std::size_t>(std::count_if(w_.begin(), w_.end(), [](auto w) { return w != 0; }));
  }
  std::uint64_t total_weight() const {
    std::uint64_t t = 0;
    for (auto w : w_) t += w;
    return t;
  }
  bool is_unweighted() const {
    return std::all_of(w_.begin(), w_.end(), [](auto w) { return w <= 1; });
  }
  unsigned mask() const {
    unsigned m = 0;
    for (int k = 0; k < 8; ++k)
      if (w_[k]) m |= 1u << k;
    return m;
  }

  /// Canonical string, e.g. "N,E,S*2,W".
  std::string to_string() const {
    std::string r;
    for (int k = 0; k < 8; ++k) {
      if (!w_[k]) continue;
      if (!r.empty()) r += ",";
      r += kDirNames[k];
      if (w_[k] != 1) r += "*" + std::to_string(w_[k]);
    }
    return r;
  }

  friend bool operator==(const StepSet&, const StepSet&) = default;
  friend auto operator<=>(const StepSet&, const StepSet&) = default;

private:
  void add(const Step& s) {
    if (s.weight == 0) throw DomainError("step weight must be positive");
    w_[dir_index(s.dx, s.dy)] += s.weight;
  }
  void check_nonempty() const {
    if (std::all_of(w_.begin(), w_.end(), [](auto w) { return w == 0; })) throw DomainError("empty step set");
  }

  std::array<std::uint32_t, 8> w_{};
};

inline std::string to_string(const StepSet& s) { return s.to_string(); }

/// Parses "N,E,S*2,W" (case-insensitive, duplicates add up).
inline StepSet parse(std::string_view spec) {
  std::vector<Step> steps;
  std::size_t pos = 0;
  auto trim = [](std::string_view t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
  };
  if (trim(spec).empty()) throw ParseError("empty step list");
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view tok = trim(spec.substr(pos, comma - pos));
    pos = comma + 1;
    if (tok.empty()) throw ParseError("empty token in step list");
    std::string_view name = tok;
    unsigned long weight = 1;
    if (auto star = tok.find('*'); star != std::string_view::npos) {
      name = trim(tok.substr(0, star));
      std::string num(trim(tok.substr(star + 1)));
      if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad weight in token '" + std::string(tok) + "'");
      if (num.size() > 9) throw ParseError("weight too large in token '" + std::string(tok) + "'");
      weight = std::stoul(num);
      if (weight == 0) throw ParseError("zero weight in token '" + std::string(tok) + "'");
    }
    std::string up(name);
    for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    auto it = std::find(kDirNames.begin(), kDirNames.end(), up);
    if (it == kDirNames.end()) throw ParseError("unknown step token '" + std::string(tok) + "'");
    int k = static_cast<int>(it - kDirNames.begin());
    steps.push_back({kDx[k], kDy[k], static_cast<std::uint32_t>(weight)});
    if (comma == spec.size()) break;
  }
  return StepSet(std::move(steps));
}

inline LaurentPoly2 inventory(const StepSet& s) {
  LaurentPoly2 p;
  for (const auto& st : s.steps()) p.add_term({st.dx, st.dy}, BigRational(st.weight));
  return p;
}

inline DriftVector drift(const StepSet& s) {
  DriftVector d;
  for (const auto& st : s.steps()) {
    d.dx_total += static_cast<long>(st.weight) * st.dx;
    d.dy_total += static_cast<long>(st.weight) * st.dy;
  }
  return d;
}

inline StepSet reflect(const StepSet& s, Axis axis) {
  std::vector<Step> out;
  for (auto st : s.steps()) {
    switch (axis) {
      case Axis::Diagonal: std::swap(st.dx, st.dy); break;
      case Axis::Horizontal: st.dy = -st.dy; break;
      case Axis::Vertical: st.dx = -st.dx; break;
    }
    out.push_back(st);
  }
  return StepSet(std::move(out));
}

enum class ModelClass { Trivial, OneDimensionalReducible, HalfPlaneReducible, QuarterPlaneProper };

inline std::string_view to_string(ModelClass c) {
  switch (c) {
    case ModelClass::Trivial: return "Trivial";
    case ModelClass::OneDimensionalReducible: return "OneDimensionalReducible";
    case ModelClass::HalfPlaneReducible: return "HalfPlaneReducible";
    case ModelClass::QuarterPlaneProper: return "QuarterPlaneProper";
  }
  return "?";
}

namespace detail {

/// Drops steps that can never be taken inside the quadrant: x-negative
/// steps when no step moves right, y-negative steps when none moves up.
inline unsigned usable_steps(unsigned mask) {
  while (true) {
    bool xpos = false, ypos = false;
    for (int k = 0; k < 8; ++k)
      if (mask & (1u << k)) {
        xpos |= kDx[k] > 0;
        ypos |= kDy[k] > 0;
      }
    unsigned next = mask;
    for (int k = 0; k < 8; ++k) {
      if (!xpos && kDx[k] < 0) next &= ~(1u << k);
      if (!ypos && kDy[k] < 0) next &= ~(1u << k);
    }
    if (next == mask) return mask;
    mask = next;
  }
}

/// Some constraint x ≥ 0 or y ≥ 0 is implied by the other for every walk.
inline bool half_plane_reducible(unsigned mask) {
  for (int c = 0; c <= 1; ++c) {
    bool x_ok = true, y_ok = true;
    for (int k = 0; k < 8; ++k) {
      if (!(mask & (1u << k))) continue;
      if (kDx[k] - c * kDy[k] < 0) x_ok = false;
      if (kDy[k] - c * kDx[k] < 0) y_ok = false;
    }
    if (x_ok || y_ok) return true;
  }
  return false;
}

} // namespace detail

inline ModelClass classify(const StepSet& s) {
  if (!s.is_unweighted()) throw DomainError("classify expects an unweighted step set");
  unsigned m = s.mask();
  constexpr unsigned first_quadrant = (1u << 0) | (1u << 1) | (1u << 2); // N, NE, E
  if (!(m & first_quadrant)) return ModelClass::Trivial;
  unsigned u = detail::usable_steps(m);
  bool all_horizontal = true, all_vertical = true;
  for (int k = 0; k < 8; ++k)
    if (u & (1u << k)) {
      all_horizontal &= kDy[k] == 0;
      all_vertical &= kDx[k] == 0;
    }
  if (all_horizontal || all_vertical) return ModelClass::OneDimensionalReducible;
  if (detail::half_plane_reducible(u)) return ModelClass::HalfPlaneReducible;
  return ModelClass::QuarterPlaneProper;
}

/// Sorted compass indices, the key for choosing between a set and its mirror image.
inline std::vector<int> compass_key(const StepSet& s) {
  std::vector<int> k;
  for (int d = 0; d < 8; ++d)
    if (s.weight(d)) k.push_back(d);
  return k;
}

inline StepSet canonical_representative(const StepSet& s) {
  StepSet r = reflect(s, Axis::Diagonal);
  return compass_key(r) < compass_key(s) ? r : s;
}

/// The quarter-plane models up to diagonal reflection.
inline std::vector<StepSet> enumerate_models() {
  std::vector<StepSet> out;
  for (unsigned m = 1; m < 256; ++m) {
    StepSet s = StepSet::from_mask(m);
    if (classify(s) != ModelClass::QuarterPlaneProper) continue;
    if (canonical_representative(s) == s) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const StepSet& a, const StepSet& b) { return compass_key(a) < compass_key(b); });
  return out;
}

// ---------------------------------------------------------------------------
// Registry of the 23 models with a finite group.

enum class DriftSign { Zero, YPositive, YNegative };
enum class Lemma { BaseCase, OneStep, TwoStep };

inline std::string_view to_string(DriftSign d) {
  switch (d) {
    case DriftSign::Zero: return "zero";
    case DriftSign::YPositive: return "y-positive";
    case DriftSign::YNegative: return "y-negative";
  }
  return "?";
}
inline std::string_view to_string(Lemma l) {
  switch (l) {
    case Lemma::BaseCase: return "BaseCase";
    case Lemma::OneStep: return "OneStep";
    case Lemma::TwoStep: return "TwoStep";
  }
  return "?";
}

/// Where a lower bound comes from: a registry model, a named one-dimensional
/// set such as "{N,S}", or a base-case tag such as "S11".
struct Parent {
  std::optional<int> model;
  std::string name;
};

struct ModelRecord {
  int index = 0;
  StepSet steps;
  DriftSign drift_sign = DriftSign::Zero;
  QuadraticSurd beta;
  BigRational alpha;
  std::string kappa_label;
  Parent parent;
  Lemma lemma = Lemma::BaseCase;
};

inline const std::vector<ModelRecord>& registry() {
  static const std::vector<ModelRecord> table = [] {
    using D = Dir;
    auto q = [](long n, long d = 1) { return make_rational(n, d); };
    auto surd = [](long a, long b, long d) { return QuadraticSurd(BigRational(a), BigRational(b), BigInt(d)); };
    auto base = [](const char* tag) { return Parent{std::nullopt, tag}; };
    auto on = [](int i) { return Parent{i, ""}; };
    auto named = [](const char* n) { return Parent{std::nullopt, n}; };
    const auto Z = DriftSign::Zero, P = DriftSign::YPositive, M = DriftSign::YNegative;
    const auto B = Lemma::BaseCase, O = Lemma::OneStep, T = Lemma::TwoStep;
    std::vector<ModelRecord> r{
        {1, {D::N, D::S, D::E, D::W}, Z, 4, q(-1), "4/pi", named("{N,S}"), T},
        {2, {D::NW, D::SW, D::NE, D::SE}, Z, 4, q(-1), "2/pi", base("S02"), B},
        {3, {D::N, D::S, D::NE, D::NW, D::SW, D::SE}, Z, 6, q(-1), "sqrt(6)/pi", on(2), T},
        {4, {D::N, D::NE, D::E, D::SE, D::S, D::SW, D::W, D::NW}, Z, 8, q(-1), "8/pi", on(3), T},
        {5, {D::S, D::NE, D::NW}, P, 3, q(-1, 2), "sqrt(3)/sqrt(pi)", base("S05"), B},
        {6, {D::S, D::NE, D::NW, D::E, D::W}, P, 5, q(-1, 2), "sqrt(5)/(2*sqrt(2)*sqrt(pi))", on(5), T},
        {7, {D::S, D::NE, D::NW, D::N}, P, 4, q(-1, 2), "4/(3*sqrt(pi))", on(5), O},
        {8, {D::S, D::NE, D::NW, D::N, D::E, D::W}, P, 6, q(-1, 2), "2*sqrt(3)/(3*sqrt(pi))", on(7), T},
        {9, {D::SW, D::SE, D::NE, D::NW, D::N}, P, 5, q(-1, 2), "sqrt(5)/(3*sqrt(2)*sqrt(pi))", on(2), O},
        {10, {D::SW, D::SE, D::NE, D::NW, D::N, D::E, D::W}, P, 7, q(-1, 2), "sqrt(7/3)/(3*sqrt(pi))", on(9), T},
        {11, {D::S, D::SW, D::SE, D::N}, M, surd(0, 2, 3), q(-2), "12*sqrt(3)/pi", base("S11"), B},
        {12, {D::S, D::SW, D::SE, D::N, D::E, D::W}, M, surd(2, 2, 3), q(-2), "sqrt(3)*(1+sqrt(3))^(7/2)/(2*pi)", on(11), T},
        {13, {D::S, D::SW, D::SE, D::NW, D::NE}, M, surd(0, 2, 6), q(-2), "12*sqrt(30)/pi", base("S13"), B},
        {14, {D::S, D::SW, D::SE, D::NW, D::NE, D::E, D::W}, M, surd(2, 2, 6), q(-2),
         "sqrt(6*(376+156*sqrt(6)))*(1+sqrt(6))^(7/2)/(5*sqrt(95)*pi)", on(13), T},
        {15, {D::SW, D::SE, D::N}, M, surd(0, 2, 2), q(-2), "24*sqrt(2)/pi", base("S15"), B},
        {16, {D::SW, D::SE, D::N, D::E, D::W}, M, surd(2, 2, 2), q(-2), "sqrt(8)*(1+sqrt(2))^(7/2)/pi", on(15), T},
        {17, {D::N, D::W, D::SE}, Z, 3, q(-3, 2), "3*sqrt(3)/(2*sqrt(pi))", base("S17"), B},
        {18, {D::N, D::S, D::E, D::W, D::NW, D::SE}, Z, 6, q(-3, 2), "3*sqrt(3)/(2*sqrt(pi))", on(22), T},
        {19, {D::S, D::W, D::NE}, Z, 3, q(-3, 4), "2*sqrt(2)/Gamma(1/4)", base("S19"), B},
        {20, {D::N, D::E, D::SW}, Z, 3, q(-3, 4), "3*sqrt(3)/(sqrt(2)*Gamma(1/4))", base("S20"), B},
        {21, {D::N, D::S, D::E, D::W, D::NE, D::SW}, Z, 6, q(-3, 4), "sqrt(2)*3^(3/4)/Gamma(1/4)", on(1), T},
        {22, {D::NW, D::SE, D::W, D::E}, Z, 4, q(-2), "8/pi", base("S22"), B},
        {23, {D::NE, D::SW, D::W, D::E}, Z, 4, q(-2, 3), "4*sqrt(3)/(3*Gamma(1/3))", named("{E,W}"), T},
    };
    return r;
  }();
  return table;
}

inline const ModelRecord& registry_record(int index) {
  if (index < 1 || index > 23) throw UnscopedModel("registry index out of range: " + std::to_string(index));
  return registry()[index - 1];
}

/// Registry record for s or for its diagonal mirror image.
inline std::optional<std::pair<const ModelRecord*, bool>> find_registry(const StepSet& s) {
  StepSet r = reflect(s, Axis::Diagonal);
  for (const auto& rec : registry()) {
    if (rec.steps == s) return std::pair{&rec, false};
    if (rec.steps == r) return std::pair{&rec, true};
  }
  return std::nullopt;
}

} // namespace qwalks
