#pragma once

// Point masses of the walk and of negative binomial counts, Chernoff windows
// that certify how much of a negative binomial law a truncated sum discards,
// and compensated summation.

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/negative_binomial.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "revwalk/error.hpp"

namespace revwalk {

/// Neumaier's variant of Kahan summation.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  KahanSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// A value together with a proven bound on its absolute error.
struct CertifiedValue {
  double value = 0.0;
  double error = 0.0;
};

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

/// P_0(S_n = j) for the simple random walk.
inline double srw_point_mass(std::int64_t n, std::int64_t j) {
  require(n >= 0, "srw_point_mass: n must be >= 0");
  if (j < -n || j > n || ((n + j) & 1) != 0) return 0.0;
  if (n == 0) return 1.0;
  const boost::math::binomial_distribution<double> law(static_cast<double>(n), 0.5);
  return boost::math::pdf(law, static_cast<double>((n + j) / 2));
}

/// P(G_{p,m} = k): failures before the m-th success, success probability p.
inline double neg_binomial_pmf(std::int64_t m, double p, std::int64_t k) {
  require(m >= 1, "neg_binomial_pmf: m must be >= 1");
  require(p > 0.0 && p < 1.0, "neg_binomial_pmf: p must lie in (0,1)");
  if (k < 0) return 0.0;
  const boost::math::negative_binomial_distribution<double> law(static_cast<double>(m), p);
  return boost::math::pdf(law, static_cast<double>(k));
}

/// Chernoff bound on P(G_{p,m} >= a) for a above the mean, or on
/// P(G_{p,m} <= a) for a below it. Returns 1 when a is on the wrong side.
inline double neg_binomial_chernoff(std::int64_t m, double p, double a) {
  const double q = 1.0 - p;
  const double mean = m * q / p;
  if (a <= 0.0) return a < 0.0 ? 0.0 : std::pow(p, static_cast<double>(m));
  if (a == mean) return 1.0;
  // Optimal tilt e^t = a / (q (m + a)).
  const double et = a / (q * (static_cast<double>(m) + a));
  const double log_bound = m * (std::log(p) - std::log1p(-q * et)) - a * std::log(et);
  return std::min(1.0, std::exp(log_bound));
}

/// Index range [lo, hi] outside which G_{p,m} puts at most `budget` mass in
/// total, certified by Chernoff bounds on both tails.
struct NbWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  double discarded = 0.0;  // certified upper bound on P(G < lo) + P(G > hi)
};

inline NbWindow neg_binomial_window(std::int64_t m, double p, double budget) {
  require(budget > 0.0, "neg_binomial_window: budget must be positive");
  const double mean = m * (1.0 - p) / p;
  const double sd = std::sqrt(m * (1.0 - p)) / p;
  const double half = budget / 2;
  NbWindow w;
  // Upper tail: smallest hi with P(G >= hi + 1) <= half.
  double step = std::max(1.0, sd);
  std::int64_t hi = static_cast<std::int64_t>(std::ceil(mean + step));
  while (neg_binomial_chernoff(m, p, static_cast<double>(hi + 1)) > half) hi += static_cast<std::int64_t>(step);
  std::int64_t a = static_cast<std::int64_t>(std::ceil(mean)), b = hi;
  while (b - a > 1) {
    const std::int64_t mid = a + (b - a) / 2;
    (neg_binomial_chernoff(m, p, static_cast<double>(mid + 1)) > half ? a : b) = mid;
  }
  w.hi = b;
  // Lower tail: largest lo with P(G <= lo - 1) <= half.
  std::int64_t lo = 0;
  if (neg_binomial_chernoff(m, p, 0.0) <= half) {
    std::int64_t x = 0, y = static_cast<std::int64_t>(std::floor(mean));
    while (y - x > 1) {
      const std::int64_t mid = x + (y - x) / 2;
      (neg_binomial_chernoff(m, p, static_cast<double>(mid - 1)) <= half ? x : y) = mid;
    }
    lo = x;
  }
  w.lo = lo;
  w.discarded = neg_binomial_chernoff(m, p, static_cast<double>(w.hi + 1)) +
                (w.lo > 0 ? neg_binomial_chernoff(m, p, static_cast<double>(w.lo - 1)) : 0.0);
  return w;
}

/// Fills out[i] = P(G_{p,m} = lo + i) for i in [0, hi - lo] from one anchor
/// value near the mode and the ratio recurrence in both directions.
template <class Vec>
void neg_binomial_run(std::int64_t m, double p, std::int64_t lo, std::int64_t hi, Vec& out) {
  const std::int64_t len = hi - lo + 1;
  out.assign(static_cast<std::size_t>(len), 0.0);
  if (len <= 0) return;
  const double q = 1.0 - p;
  const std::int64_t mode = std::clamp<std::int64_t>(
      static_cast<std::int64_t>(std::floor((m - 1) * q / p)), lo, hi);
  out[mode - lo] = neg_binomial_pmf(m, p, mode);
  for (std::int64_t k = mode; k < hi; ++k)
    out[k + 1 - lo] = out[k - lo] * q * static_cast<double>(m + k) / static_cast<double>(k + 1);
  for (std::int64_t k = mode; k > lo; --k)
    out[k - 1 - lo] = out[k - lo] * static_cast<double>(k) / (q * static_cast<double>(m + k - 1));
}

/// Fills out[i] = P_0(S_{n_i} = j) for n_i = n0 + 2i, i in [0, count), with
/// n0 + j even and n0 >= |j|. Anchored at the middle of the run.
template <class Vec>
void srw_point_mass_run(std::int64_t n0, std::int64_t j, std::int64_t count, Vec& out) {
  out.assign(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)), 0.0);
  if (count <= 0) return;
  const std::int64_t aj = std::abs(j);
  const std::int64_t mid = count / 2;
  out[mid] = srw_point_mass(n0 + 2 * mid, aj);
  // C(n+2, a+1) / C(n, a) / 4 with a = (n + j)/2, b = (n - j)/2.
  for (std::int64_t i = mid; i + 1 < count; ++i) {
    const double n = static_cast<double>(n0 + 2 * i);
    const double a = (n + aj) / 2, b = (n - aj) / 2;
    out[i + 1] = out[i] * (n + 2) * (n + 1) / (4 * (a + 1) * (b + 1));
  }
  for (std::int64_t i = mid; i > 0; --i) {
    const double n = static_cast<double>(n0 + 2 * i);
    const double a = (n + aj) / 2, b = (n - aj) / 2;
    out[i - 1] = out[i] * 4 * a * b / (n * (n - 1));
  }
}

}  // namespace revwalk
