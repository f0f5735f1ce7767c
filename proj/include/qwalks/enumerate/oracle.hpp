#pragma once

#include "qwalks/enumerate/dp.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace qwalks {

inline constexpr double kOracleGuard = 1e8;

/// Brute force: every step sequence of every length up to n_max is replayed
/// from the origin and kept if all of its prefixes stay inside the region.
inline CountTable exhaustive_oracle(const StepSet& s, Region region, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  if (n_max > 10) throw GuardExceeded("exhaustive oracle is limited to n <= 10");
  if (std::pow(static_cast<double>(s.total_weight()), n_max) > kOracleGuard)
    throw GuardExceeded("exhaustive oracle guard: (total weight)^n exceeds 1e8");
  const auto steps = s.steps();
  const int k = static_cast<int>(steps.size());

  CountTable t;
  t.steps = s;
  t.region = region;
  t.n_max = n_max;
  std::vector<int> seq;
  for (int n = 0; n <= n_max; ++n) {
    std::map<std::pair<int, int>, BigInt> tally;
    seq.assign(n, 0);
    while (true) {
      int x = 0, y = 0;
      BigInt weight = 1;
      bool inside = true;
      for (int idx : seq) {
        x += steps[idx].dx;
        y += steps[idx].dy;
        weight *= steps[idx].weight;
        if (!in_region(region, x, y)) {
          inside = false;
          break;
        }
      }
      if (inside) tally[{x, y}] += weight;
      int pos = n - 1;
      while (pos >= 0 && ++seq[pos] == k) seq[pos--] = 0;
      if (pos < 0) break;
    }
    Layer l = detail::window(region, n);
    for (const auto& [p, c] : tally) l.ref(p.first, p.second) = c;
    t.summarize(l);
    t.layers.push_back(std::move(l));
  }
  return t;
}

} // namespace qwalks
