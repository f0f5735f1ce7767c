#pragma once

// Quarter-plane totals by multi-modular arithmetic. For each 31-bit prime
// the walk is run with u32 residues, then the totals are lifted by CRT.
//
// With N steps in total, a cell whose x-coordinate is at least the number of
// remaining steps can never leave the quadrant through the y-axis, so its
// x-coordinate is irrelevant for the final totals. Such cells are merged
// into a 1D array indexed by y (and symmetrically), and cells safe on both
// axes collapse to a single scalar. Only a shrinking square of unsafe
// cells is kept as a grid; its side is at most about N/2.

#include "qwalks/enumerate/count_table.hpp"
#include "qwalks/stepset.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qwalks {

namespace modular {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

/// Deterministic for n < 3.2e9.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7})
    if (n % p == 0) return n == p;
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s && comp; ++r) {
      x = x * x % n;
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

/// Largest primes below `ceiling` whose product exceeds `bound`.
inline std::vector<u32> primes_exceeding(const BigInt& bound, u64 ceiling = 1ull << 31) {
  std::vector<u32> ps;
  BigInt prod = 1;
  for (u64 c = (ceiling - 1) | 1; prod <= bound; c -= 2) {
    if (c < 3) throw InternalError("ran out of primes");
    if (is_prime(c)) {
      ps.push_back(static_cast<u32>(c));
      prod *= static_cast<unsigned long>(c);
    }
  }
  return ps;
}

inline u32 addm(u32 a, u32 b, u32 p) {
  u32 t = a + b;
  return t >= p ? t - p : t;
}

/// Totals q(0..N) mod p. Requires W·p < 2^32 for the total weight W, so
/// one layer's contributions to a cell add up without overflow and are
/// reduced by a few conditional subtractions.
inline std::vector<u32> totals_mod(const std::vector<Step>& steps, int N, u32 p) {
  std::vector<u32> tot(N + 1, 0);
  tot[0] = 1 % p;
  if (N == 0) return tot;

  u32 wdx[3] = {0, 0, 0}, wdy[3] = {0, 0, 0};
  u64 Wsum = 0;
  for (const auto& s : steps) {
    wdx[s.dx + 1] += s.weight;
    wdy[s.dy + 1] += s.weight;
    Wsum += s.weight;
  }
  if (Wsum * p >= (1ull << 32)) throw InternalError("modulus too large for the step weight");
  const u32 W = static_cast<u32>(Wsum % p);
  for (auto& w : wdx) w %= p;
  for (auto& w : wdy) w %= p;
  std::vector<u32> sub; // p·2^k for x < Wsum·p
  for (u64 m = 1; m < Wsum; m *= 2) sub.insert(sub.begin(), static_cast<u32>(m * p));

  // Grid cell (i,j) lives at (j+1)·stride + i + 1; the padding row and
  // column stay zero so the stencil below needs no bounds checks.
  const int stride = N / 2 + 6;
  auto at = [stride](int i, int j) { return static_cast<std::size_t>(j + 1) * stride + (i + 1); };
  // Both buffers stay zero outside the square they currently describe.
  std::vector<u32> G(static_cast<std::size_t>(stride) * stride, 0), H(G.size(), 0);
  std::vector<u32> X(N + 2, 0), Y(N + 2, 0), X2(N + 2), Y2(N + 2);
  u32 F = 0;
  G[at(0, 0)] = 1;
  int g = 1;

  bool unit = true;
  u32 wk[8] = {};
  for (const auto& s : steps) {
    wk[dir_index(s.dx, s.dy)] = s.weight;
    unit &= s.weight == 1;
  }
  u32 mk[8];
  for (int k = 0; k < 8; ++k) mk[k] = wk[k] ? ~0u : 0u;

  for (int m = 0; m < N; ++m) {
    const int T = N - m; // safety threshold before the step
    const int T2 = T - 1; // after the step
    const int gn = std::min(g + 1, stride - 3);
    const int gnew = std::min(gn, T2);

    u32 F2 = static_cast<u32>(static_cast<u64>(F) * W % p);
    std::fill(X2.begin(), X2.end(), 0u);
    std::fill(Y2.begin(), Y2.end(), 0u);
    for (int j = 0; j < T; ++j) {
      if (!X[j]) continue;
      for (int db = -1; db <= 1; ++db) {
        const int jj = j + db;
        if (jj < 0 || !wdy[db + 1]) continue;
        const u32 v = static_cast<u32>(static_cast<u64>(X[j]) * wdy[db + 1] % p);
        if (jj >= T2) F2 = addm(F2, v, p);
        else X2[jj] = addm(X2[jj], v, p);
      }
    }
    for (int i = 0; i < T; ++i) {
      if (!Y[i]) continue;
      for (int da = -1; da <= 1; ++da) {
        const int ii = i + da;
        if (ii < 0 || !wdx[da + 1]) continue;
        const u32 v = static_cast<u32>(static_cast<u64>(Y[i]) * wdx[da + 1] % p);
        if (ii >= T2) F2 = addm(F2, v, p);
        else Y2[ii] = addm(Y2[ii], v, p);
      }
    }

    u64 grid_sum = 0;
    for (int j = 0; j < gn; ++j) {
      u32* __restrict h = &H[at(0, j)];
      // Source of step k is cell (i − dx_k, j − dy_k).
      const u32* src[8];
      for (int k = 0; k < 8; ++k) src[k] = &G[at(-kDx[k], j - kDy[k])];
      const u32 *__restrict s0 = src[0], *__restrict s1 = src[1], *__restrict s2 = src[2], *__restrict s3 = src[3];
      const u32 *__restrict s4 = src[4], *__restrict s5 = src[5], *__restrict s6 = src[6], *__restrict s7 = src[7];
      if (unit) {
        const u32 m0 = mk[0], m1 = mk[1], m2 = mk[2], m3 = mk[3], m4 = mk[4], m5 = mk[5], m6 = mk[6], m7 = mk[7];
        // The sum is below 8p; reduce by 4p, 2p, p (a zero level is a no-op).
        const u32 l4 = Wsum > 4 ? 4 * p : 0, l2 = Wsum > 2 ? 2 * p : 0, l1 = p;
        for (int i = 0; i < gn; ++i) {
          u32 v = ((s0[i] & m0) + (s1[i] & m1)) + ((s2[i] & m2) + (s3[i] & m3)) + ((s4[i] & m4) + (s5[i] & m5)) +
                  ((s6[i] & m6) + (s7[i] & m7));
          v -= v >= l4 ? l4 : 0u;
          v -= v >= l2 ? l2 : 0u;
          v -= v >= l1 ? l1 : 0u;
          h[i] = v;
        }
      } else {
        const u32 w0 = wk[0], w1 = wk[1], w2 = wk[2], w3 = wk[3], w4 = wk[4], w5 = wk[5], w6 = wk[6], w7 = wk[7];
        for (int i = 0; i < gn; ++i)
          h[i] = (w0 * s0[i] + w1 * s1[i]) + (w2 * s2[i] + w3 * s3[i]) + (w4 * s4[i] + w5 * s5[i]) +
                 (w6 * s6[i] + w7 * s7[i]);
        for (u32 mp : sub)
          for (int i = 0; i < gn; ++i) h[i] -= h[i] >= mp ? mp : 0u;
      }

      // Cells that became safe leave the grid.
      if (j >= gnew) {
        const bool ys = j >= T2;
        for (int i = 0; i < gn; ++i) {
          const u32 v = h[i];
          if (!v) continue;
          if (ys && i >= T2) F2 = addm(F2, v, p);
          else if (ys) Y2[i] = addm(Y2[i], v, p);
          else X2[j] = addm(X2[j], v, p);
        }
        std::fill_n(h, gn, 0u);
      } else {
        for (int i = gnew; i < gn; ++i) {
          if (h[i]) X2[j] = addm(X2[j], h[i], p);
          h[i] = 0;
        }
        u64 row = 0;
        for (int i = 0; i < gnew; ++i) row += h[i];
        grid_sum += row % p;
      }
    }
    G.swap(H);
    g = gnew;
    X.swap(X2);
    Y.swap(Y2);
    F = F2;

    u64 sum = F + grid_sum % p;
    for (int k = 0; k < std::max(T2, 0); ++k) sum += static_cast<u64>(X[k]) + Y[k];
    tot[m + 1] = static_cast<u32>(sum % p);
  }
  return tot;
}

/// Mixed-radix reconstruction from residues modulo distinct primes.
inline BigInt garner(const std::vector<u32>& r, const std::vector<u32>& ps, const std::vector<std::vector<u32>>& inv) {
  const std::size_t k = ps.size();
  std::vector<u64> v(k);
  for (std::size_t i = 0; i < k; ++i) {
    u64 x = r[i];
    for (std::size_t j = 0; j < i; ++j) {
      x = (x + ps[i] - v[j] % ps[i]) % ps[i];
      x = x * inv[i][j] % ps[i];
    }
    v[i] = x;
  }
  BigInt z = 0;
  for (std::size_t i = k; i-- > 0;) {
    z *= static_cast<unsigned long>(ps[i]);
    z += static_cast<unsigned long>(v[i]);
  }
  return z;
}

} // namespace modular

/// Worker threads: QWALKS_THREADS if set, else the hardware concurrency.
inline unsigned thread_count() {
  if (const char* e = std::getenv("QWALKS_THREADS")) {
    long v = std::strtol(e, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Exact quarter-plane totals q(0..N).
inline Series quarter_plane_totals(const StepSet& s, int N, unsigned threads = 0) {
  using namespace modular;
  if (N < 0) throw DomainError("n must be nonnegative");
  const auto steps = s.steps();
  const BigInt bound = ipow(BigInt(static_cast<unsigned long>(s.total_weight())), static_cast<unsigned long>(N));
  const u64 W = s.total_weight();
  if (W >= (1ull << 16)) throw DomainError("total step weight too large for the modular engine");
  const auto ps = primes_exceeding(bound, std::min<u64>(1ull << 31, ((1ull << 32) - 1) / W));

  std::vector<std::vector<u32>> res(ps.size());
  if (threads == 0) threads = thread_count();
  threads = std::min<unsigned>(threads, static_cast<unsigned>(ps.size()));
  if (threads <= 1) {
    for (std::size_t k = 0; k < ps.size(); ++k) res[k] = totals_mod(steps, N, ps[k]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < ps.size(); k += threads) res[k] = totals_mod(steps, N, ps[k]);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<std::vector<u32>> inv(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) inv[i].push_back(static_cast<u32>(powmod(ps[j] % ps[i], ps[i] - 2, ps[i])));

  Series out(N + 1);
  std::vector<u32> r(ps.size());
  for (int n = 0; n <= N; ++n) {
    for (std::size_t k = 0; k < ps.size(); ++k) r[k] = res[k][n];
    out[n] = garner(r, ps, inv);
  }
  return out;
}

} // namespace qwalks
