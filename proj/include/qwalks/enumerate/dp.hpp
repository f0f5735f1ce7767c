#pragma once

#include "qwalks/enumerate/count_table.hpp"

namespace qwalks {

namespace detail {

/// Window reachable after n steps inside the region.
inline Layer window(Region r, int n) {
  switch (r) {
    case Region::QuarterPlane: return Layer(n, 0, 0, n + 1, n + 1);
    case Region::HalfPlaneY: return Layer(n, -n, 0, 2 * n + 1, n + 1);
    case Region::HalfPlaneX: return Layer(n, 0, -n, n + 1, 2 * n + 1);
    case Region::FullPlane: return Layer(n, -n, -n, 2 * n + 1, 2 * n + 1);
  }
  throw InternalError("bad region");
}

inline std::size_t window_cells(Region r, long n) {
  switch (r) {
    case Region::QuarterPlane: return static_cast<std::size_t>((n + 1) * (n + 1));
    case Region::HalfPlaneY:
    case Region::HalfPlaneX: return static_cast<std::size_t>((2 * n + 1) * (n + 1));
    case Region::FullPlane: return static_cast<std::size_t>((2 * n + 1) * (2 * n + 1));
  }
  return 0;
}

} // namespace detail

/// Cells held in memory by count_walks for these arguments.
inline std::size_t count_walks_cells(Region r, int n_max, History h) {
  if (h == History::Last) return 2 * detail::window_cells(r, n_max);
  std::size_t t = 0;
  for (int n = 0; n <= n_max; ++n) t += detail::window_cells(r, n);
  return t;
}

/// Layer-by-layer transfer: count(n+1, p) = Σ_v w(v)·count(n, p − v) over
/// positions inside the region.
inline CountTable count_walks(const StepSet& s, Region region, int n_max, History history = History::All) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  CountTable t;
  t.steps = s;
  t.region = region;
  t.n_max = n_max;
  auto steps = s.steps();

  Layer cur = detail::window(region, 0);
  cur.ref(0, 0) = 1;
  t.summarize(cur);
  if (history == History::All) t.layers.push_back(cur);

  for (int n = 0; n < n_max; ++n) {
    Layer next = detail::window(region, n + 1);
    for (int j = 0; j < cur.h; ++j)
      for (int i = 0; i < cur.w; ++i) {
        const BigInt& c = cur.cells[static_cast<std::size_t>(j) * cur.w + i];
        if (sgn(c) == 0) continue;
        int x = i + cur.i0, y = j + cur.j0;
        for (const auto& st : steps) {
          int tx = x + st.dx, ty = y + st.dy;
          if (!in_region(region, tx, ty)) continue;
          BigInt& d = next.ref(tx, ty);
          if (st.weight == 1) mpz_add(d.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
          else mpz_addmul_ui(d.get_mpz_t(), c.get_mpz_t(), st.weight);
        }
      }
    t.summarize(next);
    if (history == History::All) t.layers.push_back(next);
    cur = std::move(next);
  }
  if (history == History::Last) t.layers.push_back(std::move(cur));
  return t;
}

} // namespace qwalks
