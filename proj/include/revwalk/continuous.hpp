#pragma once

// The continuous ladder: heights H_k = m * prod_{i<=k} eta_i with log eta
// symmetric of variance pi^2, the winding clock T_n = sum_{i<2n} (H_i + H_{i+1}),
// and the winding counters N_t, N_t^*, N_t^b. Also the two limit laws the
// counters are compared with.

#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "revwalk/error.hpp"
#include "revwalk/rng.hpp"

namespace revwalk::continuous {

/// Var(log eta). log Z^2 has variance trigamma(1/2) = pi^2/2 and eta is a
/// ratio of two independent such squares.
inline constexpr double kLogEtaVariance = std::numbers::pi * std::numbers::pi;

/// Variance of log-height per completed winding (two ladder increments); the
/// normalising constant of the winding limit laws.
inline constexpr double kWindingVariance = 2.0 * kLogEtaVariance;

/// log eta = log(Z^2 / Z'^2) for independent standard normals. For a
/// Box-Muller pair (r cos theta, r sin theta) the radius cancels, so only
/// the angle is drawn.
inline double sample_log_eta(RngStream& rng) {
  const double theta = 2.0 * std::numbers::pi * rng.uniform_open0();
  return 2.0 * (std::log(std::abs(std::cos(theta))) - std::log(std::abs(std::sin(theta))));
}

inline double sample_eta(RngStream& rng) { return std::exp(sample_log_eta(rng)); }

struct LadderPathB {
  double m = 1.0;
  std::vector<double> log_increments;  // log eta_1 .. log eta_{2n}
  std::vector<double> log_heights;     // log H_0 .. log H_{2n}
  std::vector<double> heights;         // exp of the above

  std::int64_t windings() const { return static_cast<std::int64_t>(log_increments.size() / 2); }
};

/// Builds a path from given increments (also a test hook for forced eta).
inline LadderPathB ladder_path_from_increments(double m, std::vector<double> log_increments) {
  require(m > 0.0, "ladder_path_b: m must be positive");
  LadderPathB p;
  p.m = m;
  p.log_increments = std::move(log_increments);
  p.log_heights.resize(p.log_increments.size() + 1);
  p.log_heights[0] = std::log(m);
  for (std::size_t i = 0; i < p.log_increments.size(); ++i) p.log_heights[i + 1] = p.log_heights[i] + p.log_increments[i];
  p.heights.resize(p.log_heights.size());
  std::transform(p.log_heights.begin(), p.log_heights.end(), p.heights.begin(), [](double v) { return std::exp(v); });
  return p;
}

/// Samples 2n increments from H_0 = m.
inline LadderPathB ladder_path_b(double m, std::int64_t n, RngStream& rng) {
  require(m > 0.0, "ladder_path_b: m must be positive");
  require(n >= 1, "ladder_path_b: n must be >= 1");
  std::vector<double> inc(static_cast<std::size_t>(2 * n));
  for (double& v : inc) v = sample_log_eta(rng);
  return ladder_path_from_increments(m, std::move(inc));
}

inline double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

/// Completion times and running maxima, both in log space.
struct WindingClock {
  std::vector<double> log_t_completion;  // log T_1 .. log T_n
  std::vector<double> log_mu;            // log mu_1 .. log mu_n, mu_n = max_{j<=2n} H_j

  /// log mu_n <= log T_n <= log(4n) + log mu_n; `slack` absorbs rounding.
  bool sandwich_holds(double slack = 1e-12) const {
    for (std::size_t i = 0; i < log_t_completion.size(); ++i) {
      const double n = static_cast<double>(i + 1);
      const double lt = log_t_completion[i], lm = log_mu[i];
      if (!(lm <= lt + slack && lt <= std::log(4.0 * n) + lm + slack)) return false;
    }
    return true;
  }
};

inline WindingClock winding_clock(const LadderPathB& path) {
  WindingClock c;
  const std::size_t n = path.log_increments.size() / 2;
  c.log_t_completion.reserve(n);
  c.log_mu.reserve(n);
  const auto& lh = path.log_heights;
  double log_t = -std::numeric_limits<double>::infinity();
  double log_mu = lh[0];
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t i = 2 * w; i < 2 * w + 2; ++i) {
      log_t = log_add(log_t, log_add(lh[i], lh[i + 1]));
      log_mu = std::max(log_mu, lh[i + 1]);
    }
    c.log_t_completion.push_back(log_t);
    c.log_mu.push_back(log_mu);
  }
  return c;
}

struct WindingCounts {
  std::int64_t n_t = 0;     // max{n : T_n <= t}
  std::int64_t n_star = 0;  // min{n : log mu_n > log t}
  double n_b = 0.0;         // half the number of k < 2 N_t with H_k > eps
};

/// Counters at time t = exp(log_t). The path must reach past t both in T and
/// in mu, otherwise InsufficientPathError.
inline WindingCounts winding_counts_log(const LadderPathB& path, double log_t, double eps) {
  require(eps > 0.0, "winding_counts: eps must be positive");
  const WindingClock c = winding_clock(path);
  const auto n = static_cast<std::int64_t>(c.log_t_completion.size());
  WindingCounts r;
  std::int64_t k = 0;
  while (k < n && c.log_t_completion[k] <= log_t) ++k;
  if (k == n) throw InsufficientPathError("winding_counts: path ends before T_n exceeds t; sample a longer path");
  r.n_t = k;
  std::int64_t s = 0;
  while (s < n && !(c.log_mu[s] > log_t)) ++s;
  if (s == n) throw InsufficientPathError("winding_counts: path ends before mu_n exceeds t; sample a longer path");
  r.n_star = s + 1;
  const double log_eps = std::log(eps);
  std::int64_t big = 0;
  for (std::int64_t i = 0; i < 2 * r.n_t; ++i) big += path.log_heights[i] > log_eps;
  r.n_b = 0.5 * static_cast<double>(big);
  return r;
}

inline WindingCounts winding_counts(const LadderPathB& path, double t, double eps) {
  require(t > 0.0, "winding_counts: t must be positive");
  return winding_counts_log(path, std::log(t), eps);
}

/// Counters of one freshly sampled path, generated increment by increment
/// and stopped as soon as they are determined or `max_windings` windings
/// have been used. Censored counters hold lower bounds.
struct StreamedWinding {
  WindingCounts counts;
  bool censored_t = false;     // N_t (and N_t^b) not determined within the cap
  bool censored_star = false;  // N_t^* not determined within the cap
  bool sandwich_ok = true;     // log mu_n <= log T_n <= log(4n) + log mu_n at every completed n
  std::int64_t windings_used = 0;
};

inline StreamedWinding stream_winding(double m, double log_t, double eps, RngStream& rng, std::int64_t max_windings,
                                      bool need_star = true) {
  require(m > 0.0 && eps > 0.0, "stream_winding: m and eps must be positive");
  require(max_windings >= 1, "stream_winding: max_windings must be >= 1");
  StreamedWinding out;
  const double log_eps = std::log(eps);
  double lh = std::log(m);
  double log_t_clock = -std::numeric_limits<double>::infinity();
  double log_mu = lh;
  std::int64_t big = 0;
  bool have_t = false, have_star = false;
  std::int64_t w = 0;
  while (w < max_windings && !(have_t && (have_star || !need_star))) {
    std::int64_t big_here = 0;
    for (int i = 0; i < 2; ++i) {
      big_here += lh > log_eps;
      const double next = lh + sample_log_eta(rng);
      log_t_clock = log_add(log_t_clock, log_add(lh, next));
      log_mu = std::max(log_mu, next);
      lh = next;
    }
    ++w;
    const double n = static_cast<double>(w);
    const double slack = 1e-12 * (1.0 + std::abs(log_t_clock));
    if (!(log_mu <= log_t_clock + slack && log_t_clock <= std::log(4.0 * n) + log_mu + slack)) out.sandwich_ok = false;
    if (!have_t) {
      if (log_t_clock > log_t) {
        have_t = true;
        out.counts.n_t = w - 1;
      } else {
        big += big_here;
      }
    }
    if (!have_star && log_mu > log_t) {
      have_star = true;
      out.counts.n_star = w;
    }
  }
  out.windings_used = w;
  if (!have_t) {
    out.censored_t = true;
    out.counts.n_t = w;
  }
  if (!have_star) {
    out.censored_star = true;
    out.counts.n_star = w + 1;
  }
  out.counts.n_b = 0.5 * static_cast<double>(big);
  return out;
}

/// P(T_1 <= x) for the first hitting time of level 1 by standard Brownian motion.
inline double levy_cdf(double x) {
  if (!(x > 0.0)) throw DomainError("levy_cdf: x must be positive");
  return boost::math::erfc(1.0 / std::sqrt(2.0 * x));
}

enum class LimitKind { levy_T1, occupation_T1 };

struct LimitLawSample {
  LimitKind kind = LimitKind::occupation_T1;
  double value = 0.0;
};

/// Exit time of a simple random walk from (-resolution, resolution), divided
/// by resolution^2: a sample of T_1 ^ T_{-1} up to O(resolution^-2). Words of
/// 64 steps are taken at once while the barrier is out of their reach.
inline LimitLawSample sample_occupation_t1(RngStream& rng, std::int64_t resolution) {
  require(resolution >= 1000, "sample_occupation_t1: resolution must be >= 1000");
  BitSource bits(rng);
  std::int64_t s = 0, steps = 0;
  while (s < resolution && s > -resolution) {
    if (bits.aligned() && s + 64 < resolution && s - 64 > -resolution) {
      s += bits.block64();
      steps += 64;
    } else {
      s += bits.step();
      ++steps;
    }
  }
  const double r = static_cast<double>(resolution);
  return {LimitKind::occupation_T1, static_cast<double>(steps) / (r * r)};
}

}  // namespace revwalk::continuous
