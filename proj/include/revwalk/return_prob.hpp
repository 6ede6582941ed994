#pragma once

// Exact return probability of the G1 walk to the origin, observed just after
// its 2n-th vertical step.
//
// With S the vertical walk and k the number of indices j < 2n with S_j >= 0,
// the horizontal coordinate is G_{2/3,k} - G_{2/3,2n-k} in law (sums of
// independent geometric counts to the right and to the left). So
//   P_0(M_{T_{2n}} = (0,0)) = sum_k P(A_n^+ = k, S_{2n} = 0) P(G_{2/3,k} = G_{2/3,2n-k}).
// The joint law of (A_n^+, S_{2n} = 0) comes from a dynamic programme over
// (time, height, count).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "revwalk/error.hpp"
#include "revwalk/numerics.hpp"

namespace revwalk {

using uint128 = unsigned __int128;

inline constexpr std::int64_t kBridgeExactCap = 64;
inline constexpr std::int64_t kBridgeCap = 256;

struct BridgeOccupationDP {
  std::int64_t n = 0;
  std::vector<double> joint;       // joint[k] = P(A_n^+ = k, S_{2n} = 0), k = 0..2n
  std::vector<uint128> counts;     // path counts, joint[k] = counts[k] / 4^n; empty above the exact cap
};

namespace detail {

// Runs the DP to time 2 n_max and hands each even time 2n with S = 0 to `emit`.
// Cell (y, c) holds the weight of paths with S_t = y and c indices j < t with S_j >= 0.
template <class T, class Emit>
void bridge_dp(std::int64_t n_max, T step_weight, Emit emit) {
  const std::int64_t T_end = 2 * n_max;
  const std::int64_t width = T_end + 1;  // heights -n_max..n_max after pruning
  const std::int64_t off = n_max;
  const std::int64_t cmax = T_end + 1;
  auto idx = [&](std::int64_t y, std::int64_t c) { return static_cast<std::size_t>((y + off) * cmax + c); };
  std::vector<T> cur(static_cast<std::size_t>(width * cmax), T{0}), nxt(cur.size(), T{0});
  cur[idx(0, 0)] = T{1};
  for (std::int64_t t = 0; t < T_end; ++t) {
    std::fill(nxt.begin(), nxt.end(), T{0});
    const std::int64_t ylim = std::min(t, T_end - t);
    for (std::int64_t y = -ylim; y <= ylim; y += 2) {
      const std::int64_t inc = y >= 0 ? 1 : 0;
      for (std::int64_t c = 0; c <= t; ++c) {
        const T w = cur[idx(y, c)];
        if (w == T{0}) continue;
        const T v = w * step_weight;
        const std::int64_t reach = T_end - t - 1;
        if (std::abs(y + 1) <= reach) nxt[idx(y + 1, c + inc)] += v;
        if (std::abs(y - 1) <= reach) nxt[idx(y - 1, c + inc)] += v;
      }
    }
    std::swap(cur, nxt);
    if ((t + 1) % 2 == 0) {
      const std::int64_t n = (t + 1) / 2;
      std::vector<T> row(static_cast<std::size_t>(2 * n + 1));
      for (std::int64_t c = 0; c <= 2 * n; ++c) row[c] = cur[idx(0, c)];
      emit(n, row);
    }
  }
}

inline double to_double_scaled(uint128 v, std::int64_t n) {
  const double hi = static_cast<double>(static_cast<std::uint64_t>(v >> 64));
  const double lo = static_cast<double>(static_cast<std::uint64_t>(v));
  return std::ldexp(hi, 64 - 2 * static_cast<int>(n)) + std::ldexp(lo, -2 * static_cast<int>(n));
}

}  // namespace detail

/// Bridge occupation laws for every n in [1, n_max]; element n - 1 holds n.
/// Exact integer counts up to n = 64, probabilities in double beyond.
inline std::vector<BridgeOccupationDP> bridge_occupation_all(std::int64_t n_max) {
  require(n_max >= 1, "bridge_occupation_dp: n must be >= 1");
  if (n_max > kBridgeCap) throw DomainError("bridge_occupation_dp: n exceeds the supported cap of 256");
  std::vector<BridgeOccupationDP> out(static_cast<std::size_t>(n_max));
  const std::int64_t exact_max = std::min(n_max, kBridgeExactCap);
  detail::bridge_dp<uint128>(exact_max, uint128{1}, [&](std::int64_t n, const std::vector<uint128>& row) {
    BridgeOccupationDP& d = out[n - 1];
    d.n = n;
    d.counts = row;
    d.joint.resize(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) d.joint[k] = detail::to_double_scaled(row[k], n);
  });
  if (n_max > exact_max) {
    detail::bridge_dp<double>(n_max, 0.5, [&](std::int64_t n, const std::vector<double>& row) {
      if (n <= exact_max) return;
      out[n - 1].n = n;
      out[n - 1].joint = row;
    });
  }
  return out;
}

inline BridgeOccupationDP bridge_occupation_dp(std::int64_t n) { return bridge_occupation_all(n).back(); }

/// P(G_{2/3,k} = G_{2/3,j}) for independent negative binomial counts.
inline double xi_difference_at_zero(std::int64_t k, std::int64_t j, double tol = 1e-15) {
  require(k >= 0 && j >= 0 && k + j >= 1, "xi_difference_at_zero: need k, j >= 0 and k + j >= 1");
  constexpr double p = 2.0 / 3.0;
  if (k == 0 || j == 0) return std::pow(p, static_cast<double>(k + j));
  // Cut both laws at the larger count's upper Chernoff point; what is dropped
  // is at most P(G_{p,max(k,j)} > hi) since the other factor is <= 1.
  const std::int64_t big = std::max(k, j);
  const NbWindow win = neg_binomial_window(big, p, tol);
  const std::int64_t hi = win.hi;
  std::vector<double> a, b;
  neg_binomial_run(k, p, 0, hi, a);
  neg_binomial_run(j, p, 0, hi, b);
  KahanSum s;
  for (std::int64_t x = 0; x <= hi; ++x) s += a[x] * b[x];
  return s.value();
}

struct ReturnProbTable {
  std::int64_t n = 0;
  double exact = 0.0;
  double asymptote = 0.0;  // 1 / (2 sqrt(pi) n^{3/2})
  double ratio = 0.0;
};

inline double return_prob_asymptote(std::int64_t n) {
  return 1.0 / (2.0 * std::sqrt(std::numbers::pi) * std::pow(static_cast<double>(n), 1.5));
}

inline ReturnProbTable return_prob_from_dp(const BridgeOccupationDP& dp, double tol) {
  KahanSum s;
  const std::int64_t two_n = 2 * dp.n;
  for (std::int64_t k = 0; k <= two_n; ++k)
    if (dp.joint[k] != 0.0) s += dp.joint[k] * xi_difference_at_zero(k, two_n - k, tol);
  ReturnProbTable t;
  t.n = dp.n;
  t.exact = s.value();
  t.asymptote = return_prob_asymptote(dp.n);
  t.ratio = t.exact / t.asymptote;
  return t;
}

/// P_0(M_{T_{2n}} = (0,0)) on G1 with its ratio to the asymptote.
inline ReturnProbTable return_prob_g1(std::int64_t n, double tol = 1e-15) {
  if (!(tol > 0.0)) throw DomainError("return_prob_g1: tolerance must be positive");
  return return_prob_from_dp(bridge_occupation_dp(n), tol);
}

/// Tables for every n in [1, n_max] from a single DP pass.
inline std::vector<ReturnProbTable> return_prob_g1_all(std::int64_t n_max, double tol = 1e-15) {
  std::vector<ReturnProbTable> out;
  for (const auto& dp : bridge_occupation_all(n_max)) out.push_back(return_prob_from_dp(dp, tol));
  return out;
}

/// Brute force for small n: every +-1 path of length 2n is enumerated; for
/// each bridge the law of the horizontal coordinate is built by convolving
/// the 2n signed geometric laws explicitly on a truncated support.
inline double return_prob_g1_bruteforce(std::int64_t n) {
  require(n >= 1 && n <= 8, "return_prob_g1_bruteforce: n must be in [1, 8]");
  const std::int64_t len = 2 * n;
  constexpr std::int64_t kCut = 120;  // (1/3)^120 is far below double resolution
  std::vector<double> geo(kCut + 1);
  for (std::int64_t a = 0; a <= kCut; ++a) geo[a] = (2.0 / 3.0) * std::pow(1.0 / 3.0, static_cast<double>(a));
  KahanSum total;
  const std::int64_t span = len * kCut;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
    std::int64_t s = 0;
    std::vector<int> signs;
    for (std::int64_t i = 0; i < len; ++i) {
      signs.push_back(s >= 0 ? 1 : -1);
      s += ((bits >> i) & 1u) ? 1 : -1;
    }
    if (s != 0) continue;
    // Law of the signed sum, indexed from -span.
    std::vector<double> law(static_cast<std::size_t>(2 * span + 1), 0.0);
    law[span] = 1.0;
    for (int sg : signs) {
      std::vector<double> next(law.size(), 0.0);
      for (std::int64_t x = 0; x <= 2 * span; ++x) {
        if (law[x] == 0.0) continue;
        for (std::int64_t a = 0; a <= kCut; ++a) {
          const std::int64_t y = x + sg * a;
          if (y < 0 || y > 2 * span) break;
          next[y] += law[x] * geo[a];
        }
      }
      law.swap(next);
    }
    total += law[span] * std::ldexp(1.0, -static_cast<int>(len));
  }
  return total.value();
}

}  // namespace revwalk
