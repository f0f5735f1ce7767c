#pragma once

#include "qwalks/algebra/bigint.hpp"
#include "qwalks/stepset.hpp"

#include <string_view>
#include <tuple>
#include <vector>

namespace qwalks {

enum class Region { FullPlane, HalfPlaneY, HalfPlaneX, QuarterPlane };

inline std::string_view to_string(Region r) {
  switch (r) {
    case Region::FullPlane: return "full";
    case Region::HalfPlaneY: return "half-y";
    case Region::HalfPlaneX: return "half-x";
    case Region::QuarterPlane: return "quarter";
  }
  return "?";
}

inline Region parse_region(std::string_view s) {
  if (s == "full") return Region::FullPlane;
  if (s == "half-y" || s == "half") return Region::HalfPlaneY;
  if (s == "half-x") return Region::HalfPlaneX;
  if (s == "quarter") return Region::QuarterPlane;
  throw ParseError("unknown region '" + std::string(s) + "'");
}

inline bool in_region(Region r, long i, long j) {
  switch (r) {
    case Region::FullPlane: return true;
    case Region::HalfPlaneY: return j >= 0;
    case Region::HalfPlaneX: return i >= 0;
    case Region::QuarterPlane: return i >= 0 && j >= 0;
  }
  return false;
}

struct Cell {
  int i = 0;
  int j = 0;
  BigInt c;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Endpoint counts after n steps on the rectangle [i0, i0+w) × [j0, j0+h).
struct Layer {
  int n = 0;
  int i0 = 0, j0 = 0, w = 0, h = 0;
  std::vector<BigInt> cells;

  Layer() = default;
  Layer(int n_, int i0_, int j0_, int w_, int h_)
      : n(n_), i0(i0_), j0(j0_), w(w_), h(h_), cells(static_cast<std::size_t>(w_) * h_) {}

  bool contains(int i, int j) const { return i >= i0 && i < i0 + w && j >= j0 && j < j0 + h; }
  BigInt& ref(int i, int j) { return cells[static_cast<std::size_t>(j - j0) * w + (i - i0)]; }
  BigInt at(int i, int j) const {
    return contains(i, j) ? cells[static_cast<std::size_t>(j - j0) * w + (i - i0)] : BigInt(0);
  }

  /// Nonzero cells ordered by (j, i).
  std::vector<Cell> nonzero() const {
    std::vector<Cell> r;
    for (int j = 0; j < h; ++j)
      for (int i = 0; i < w; ++i) {
        const BigInt& c = cells[static_cast<std::size_t>(j) * w + i];
        if (sgn(c) != 0) r.push_back({i + i0, j + j0, c});
      }
    return r;
  }
};

enum class History { All, Last };

struct CountTable {
  StepSet steps;
  Region region = Region::QuarterPlane;
  int n_max = 0;
  /// All layers 0..n_max, or only layer n_max under History::Last.
  std::vector<Layer> layers;
  Series totals, origin, x_axis, y_axis;

  const Layer& layer(int n) const {
    for (const auto& l : layers)
      if (l.n == n) return l;
    throw DomainError("layer " + std::to_string(n) + " not retained");
  }

  void summarize(const Layer& l) {
    BigInt t = 0, xa = 0, ya = 0;
    for (int j = 0; j < l.h; ++j)
      for (int i = 0; i < l.w; ++i) {
        const BigInt& c = l.cells[static_cast<std::size_t>(j) * l.w + i];
        if (sgn(c) == 0) continue;
        t += c;
        if (j + l.j0 == 0) xa += c;
        if (i + l.i0 == 0) ya += c;
      }
    totals.push_back(t);
    origin.push_back(l.at(0, 0));
    x_axis.push_back(xa);
    y_axis.push_back(ya);
  }
};

enum class Restriction { Origin, XAxis, YAxis };

inline const Series& total_series(const CountTable& t) { return t.totals; }

inline const Series& restricted_series(const CountTable& t, Restriction which) {
  switch (which) {
    case Restriction::Origin: return t.origin;
    case Restriction::XAxis: return t.x_axis;
    case Restriction::YAxis: return t.y_axis;
  }
  return t.totals;
}

} // namespace qwalks
