#pragma once

// Hitting kernels of the ladder decomposition.
//
//   p_{m,h}: from (-m, 0), the walk first meets the y-axis at height h.
//   q_{h,l}: from (0, h), the walk first meets the x-axis at abscissa l.
//
// Both are series over the number n of vertical steps taken before the
// relevant horizontal count is exhausted, weighted by negative binomial laws.
// Truncation of n is certified by Chernoff bounds on those laws.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "revwalk/error.hpp"
#include "revwalk/numerics.hpp"

namespace revwalk {

/// Finite-support probability vector; `tail_bound` bounds the mass not listed.
struct TruncatedPmf {
  std::int64_t support_lo = 0;
  std::int64_t support_hi = -1;
  std::vector<double> mass;
  double tail_bound = 0.0;

  double at(std::int64_t k) const {
    return (k < support_lo || k > support_hi) ? 0.0 : mass[static_cast<std::size_t>(k - support_lo)];
  }

  double total() const {
    KahanSum s;
    for (double v : mass) s += v;
    return s.value();
  }

  /// Normalisation with tail: entries nonnegative, listed mass <= 1 and
  /// listed mass plus tail bound >= 1, both up to `slack`.
  bool satisfies_invariant(double slack = 1e-12) const {
    for (double v : mass)
      if (!(v >= 0.0)) return false;
    const double s = total();
    return s <= 1.0 + slack && s + tail_bound >= 1.0 - slack;
  }
};

namespace detail {

inline constexpr double kThird = 1.0 / 3.0;

// Rounding bound for a sum of `terms` products built from ratio runs.
inline double series_rounding(std::int64_t terms, double magnitude) {
  return 4.0 * static_cast<double>(terms + 8) * kUnitRoundoff * magnitude;
}

// Sum over n in [lo, hi] with n = j (mod 2), n >= |j|, of P_0(S_n = j) * w[n - lo].
inline double srw_weighted(std::int64_t j, std::int64_t lo, std::int64_t hi, const std::vector<double>& w) {
  const std::int64_t aj = std::abs(j);
  std::int64_t n0 = std::max(lo, aj);
  if (((n0 + aj) & 1) != 0) ++n0;
  if (n0 > hi) return 0.0;
  const std::int64_t count = (hi - n0) / 2 + 1;
  std::vector<double> pm;
  srw_point_mass_run(n0, aj, count, pm);
  KahanSum s;
  for (std::int64_t i = 0; i < count; ++i) s += pm[i] * w[n0 + 2 * i - lo];
  return s.value();
}

inline void check_tol(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

}  // namespace detail

namespace detail {

// p_{m,h} with Chernoff budget `budget` for the discarded negative binomial mass.
inline CertifiedValue p_series(std::int64_t m, std::int64_t h, double budget) {
  if (h == 0) return {0.0, 0.0};
  const NbWindow win = neg_binomial_window(m, kThird, budget);
  std::vector<double> w;
  neg_binomial_run(m, kThird, win.lo, win.hi, w);
  const double v = srw_weighted(h, win.lo, win.hi, w) + srw_weighted(h - 1, win.lo, win.hi, w);
  return {v, win.discarded + series_rounding(win.hi - win.lo + 1, v)};
}

// q_{h,l} with Chernoff (or geometric) budget `budget` for the discarded terms.
inline CertifiedValue q_series(std::int64_t h, std::int64_t l, double budget) {
  const double hd = static_cast<double>(h);
  if (l == 0) {
    // Sum over n >= h, n = h (mod 2), of (h/n) P_0(S_n = h) (2/3)^n; terms are below (2/3)^n.
    std::int64_t n_max = h;
    while (3.0 * std::pow(2.0 / 3.0, static_cast<double>(n_max + 1)) > budget) n_max += 2;
    const std::int64_t count = (n_max - h) / 2 + 1;
    std::vector<double> pm;
    srw_point_mass_run(h, h, count, pm);
    KahanSum s;
    for (std::int64_t i = 0; i < count; ++i) {
      const double n = static_cast<double>(h + 2 * i);
      s += hd / n * pm[i] * std::exp(n * std::log(2.0 / 3.0));
    }
    return {s.value(), 3.0 * std::pow(2.0 / 3.0, static_cast<double>(n_max + 1)) + series_rounding(count, s.value())};
  }
  const double scale = hd / static_cast<double>(l);
  const NbWindow win = neg_binomial_window(l, kThird, std::min(0.5, budget / scale));
  std::vector<double> w;
  neg_binomial_run(l, kThird, win.lo, win.hi, w);
  const double v = scale * srw_weighted(h, win.lo, win.hi, w);
  return {v, scale * win.discarded + series_rounding(win.hi - win.lo + 1, v)};
}

}  // namespace detail

/// p_{m,h} with a certified error bound; p_{m,0} = 0 by convention.
inline CertifiedValue p_mh(std::int64_t m, std::int64_t h, double tol) {
  detail::check_tol(tol);
  require(m >= 1, "p_mh: m must be >= 1");
  require(h >= 0, "p_mh: h must be >= 0");
  const CertifiedValue v = detail::p_series(m, h, tol / 2);
  if (v.error > tol) throw CertificationError("p_mh: cannot certify requested tolerance");
  return v;
}

/// q_{h,l} with a certified error bound.
inline CertifiedValue q_hl(std::int64_t h, std::int64_t l, double tol) {
  detail::check_tol(tol);
  require(h >= 1, "q_hl: h must be >= 1");
  require(l >= 0, "q_hl: l must be >= 0");
  const CertifiedValue v = detail::q_series(h, l, tol / 2);
  if (v.error > tol) throw CertificationError("q_hl: cannot certify requested tolerance");
  return v;
}

namespace detail {

// Mass left beyond a listed prefix of a proper law, certified from the
// normalisation identity and the per-entry error bounds.
inline double tail_from_normalisation(const std::vector<double>& mass, double entry_errors) {
  KahanSum s;
  for (double v : mass) s += v;
  return std::max(0.0, 1.0 - s.value()) + entry_errors;
}

}  // namespace detail

/// Default h cut for p_row: the Gaussian profile has decayed below tol, with
/// an extra log(1/tol) margin for small m where the tail is still geometric.
inline std::int64_t p_row_cut(std::int64_t m, double tol) {
  const double L = std::log(1.0 / tol) + 8.0;
  return static_cast<std::int64_t>(std::ceil(std::sqrt(4.0 * m * L) + L)) + 8;
}

/// The law of V_1 under P_m, listed on h in [1, h_max]. With h_max <= 0 the
/// cut is p_row_cut(m, tol).
inline TruncatedPmf p_row(std::int64_t m, double tol, std::int64_t h_max = 0) {
  detail::check_tol(tol);
  require(m >= 1, "p_row: m must be >= 1");
  if (h_max <= 0) h_max = p_row_cut(m, tol);
  const double budget = tol / 4.0;
  const NbWindow win = neg_binomial_window(m, detail::kThird, budget);
  std::vector<double> w;
  neg_binomial_run(m, detail::kThird, win.lo, win.hi, w);
  TruncatedPmf pmf;
  pmf.support_lo = 1;
  pmf.support_hi = h_max;
  pmf.mass.resize(static_cast<std::size_t>(h_max));
  // Over all h the bracketed point masses sum to 1 for each n, so the
  // discarded window mass is charged once.
  double errors = win.discarded;
  for (std::int64_t h = 1; h <= h_max; ++h) {
    const double v = detail::srw_weighted(h, win.lo, win.hi, w) + detail::srw_weighted(h - 1, win.lo, win.hi, w);
    pmf.mass[h - 1] = v;
    errors += detail::series_rounding(win.hi - win.lo + 1, v);
  }
  pmf.tail_bound = detail::tail_from_normalisation(pmf.mass, errors);
  return pmf;
}

/// The law of H_1 under P_h (start (0, h)) on l in [0, l_max], term by term
/// from the series. Cost grows like l_max^{3/2}; the batch engine in
/// ladder_law.hpp is the fast route.
inline TruncatedPmf q_row(std::int64_t h, std::int64_t l_max, double tol) {
  detail::check_tol(tol);
  require(h >= 1 && l_max >= 0, "q_row: need h >= 1 and l_max >= 0");
  TruncatedPmf pmf;
  pmf.support_lo = 0;
  pmf.support_hi = l_max;
  pmf.mass.resize(static_cast<std::size_t>(l_max + 1));
  const double each = tol / static_cast<double>(l_max + 1);
  double errors = 0.0;
  for (std::int64_t l = 0; l <= l_max; ++l) {
    const CertifiedValue v = detail::q_series(h, l, each);
    pmf.mass[l] = v.value;
    errors += v.error;
  }
  pmf.tail_bound = detail::tail_from_normalisation(pmf.mass, errors);
  if (errors > tol) throw CertificationError("q_row: cannot certify requested tolerance");
  return pmf;
}

}  // namespace revwalk
