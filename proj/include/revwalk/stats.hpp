#pragma once

// Distribution comparison and growth-rate fitting for the acceptance checks.

#include <boost/math/distributions/chi_squared.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revwalk/error.hpp"
#include "revwalk/parallel.hpp"
#include "revwalk/rng.hpp"

namespace revwalk::stats {

/// Empirical distribution function of an uncensored sample.
class Ecdf {
 public:
  Ecdf() = default;
  explicit Ecdf(std::vector<double> values) : v_(std::move(values)) {
    for (double x : v_)
      if (std::isnan(x)) throw DomainError("Ecdf: NaN in sample");
    std::sort(v_.begin(), v_.end());
  }

  /// Refuses samples in which any value is only a lower bound.
  static Ecdf from_flagged(std::vector<double> values, const std::vector<bool>& censored) {
    require(values.size() == censored.size(), "Ecdf: flags do not match values");
    if (std::find(censored.begin(), censored.end(), true) != censored.end())
      throw CensoredInputError("Ecdf: sample contains right-censored values; use the censored KS bounds");
    return Ecdf(std::move(values));
  }

  std::size_t size() const { return v_.size(); }
  const std::vector<double>& values() const { return v_; }

  /// F_n(x) = #{values <= x} / n.
  double operator()(double x) const {
    return static_cast<double>(std::upper_bound(v_.begin(), v_.end(), x) - v_.begin()) / static_cast<double>(v_.size());
  }
  /// F_n(x-) = #{values < x} / n.
  double left(double x) const {
    return static_cast<double>(std::lower_bound(v_.begin(), v_.end(), x) - v_.begin()) / static_cast<double>(v_.size());
  }

 private:
  std::vector<double> v_;
};

namespace detail {
inline double below(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
}  // namespace detail

/// sup_x |F_n(x) - F(x)|, checked at every jump point from both sides.
template <class Cdf>
double ks_distance(const Ecdf& sample, Cdf&& cdf) {
  require(sample.size() >= 1, "ks_distance: empty sample");
  double d = 0.0;
  const auto& v = sample.values();
  const double n = static_cast<double>(v.size());
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    const double x = v[i];
    d = std::max(d, std::abs(static_cast<double>(j) / n - cdf(x)));
    d = std::max(d, std::abs(static_cast<double>(i) / n - cdf(detail::below(x))));
    i = j;
  }
  return d;
}

/// sup_x |F_a(x) - F_b(x)|.
inline double two_sample_ks(const Ecdf& a, const Ecdf& b) {
  require(a.size() >= 1 && b.size() >= 1, "two_sample_ks: empty sample");
  const auto& x = a.values();
  const auto& y = b.values();
  const double na = static_cast<double>(x.size()), nb = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() || j < y.size()) {
    double t;
    if (j == y.size() || (i < x.size() && x[i] <= y[j]))
      t = x[i];
    else
      t = y[j];
    while (i < x.size() && x[i] == t) ++i;
    while (j < y.size() && y[j] == t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

/// A sample whose censored members are only known to exceed their censor points.
struct CensoredSample {
  std::vector<double> exact;
  std::vector<double> censor_points;

  std::size_t size() const { return exact.size() + censor_points.size(); }
  double censored_fraction() const {
    return size() ? static_cast<double>(censor_points.size()) / static_cast<double>(size()) : 0.0;
  }
};

/// Upper bound on sup_x |F_n(x) - F(x)| over every completion of the censored
/// values, where the true cdf F is only known to lie in [cdf_lo, cdf_hi].
/// Between its bounds F_n(x) ranges over [#exact <= x, #exact <= x + #censor <= x] / n.
template <class Lo, class Hi>
double ks_censored_upper(const CensoredSample& s, Lo&& cdf_lo, Hi&& cdf_hi) {
  require(s.size() >= 1, "ks_censored_upper: empty sample");
  std::vector<double> ex = s.exact, cp = s.censor_points;
  std::sort(ex.begin(), ex.end());
  std::sort(cp.begin(), cp.end());
  const double n = static_cast<double>(s.size());
  auto count_le = [](const std::vector<double>& v, double x) {
    return static_cast<double>(std::upper_bound(v.begin(), v.end(), x) - v.begin());
  };
  auto count_lt = [](const std::vector<double>& v, double x) {
    return static_cast<double>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  double d = 0.0;
  auto probe = [&](double x) {
    const double lo = count_le(ex, x) / n;
    const double hi = (count_le(ex, x) + count_le(cp, x)) / n;
    d = std::max({d, hi - cdf_lo(x), cdf_hi(x) - lo});
    const double xm = detail::below(x);
    const double lo_m = count_lt(ex, x) / n;
    const double hi_m = (count_lt(ex, x) + count_lt(cp, x)) / n;
    d = std::max({d, hi_m - cdf_lo(xm), cdf_hi(xm) - lo_m});
  };
  for (double x : ex) probe(x);
  for (double x : cp) probe(x);
  // As x grows without bound F tends to 1 while the lower envelope stays at the exact fraction.
  d = std::max(d, 1.0 - static_cast<double>(ex.size()) / n);
  return std::min(d, 1.0);
}

template <class Cdf>
double ks_censored_upper(const CensoredSample& s, Cdf&& cdf) {
  return ks_censored_upper(s, cdf, cdf);
}

/// Upper bound on the two-sample distance when `a` carries censored values
/// and `b` is exact.
inline double two_sample_ks_censored_upper(const CensoredSample& a, const Ecdf& b) {
  const Ecdf& ref = b;
  return ks_censored_upper(
      a, [&](double x) { return ref(x); }, [&](double x) { return ref(x); });
}

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least-squares line through (x, y) pairs, typically x = log n.
inline SlopeFit slope_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw DomainError("slope_fit: at least 3 points are required");
  const double k = static_cast<double>(points.size());
  double mx = 0, my = 0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) throw DomainError("slope_fit: all abscissae coincide");
  SlopeFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  return f;
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Percentile bootstrap interval of `statistic` over `resamples` resamples;
/// resample r draws from rng.substream(r).
template <class Stat>
Interval bootstrap_ci(const std::vector<double>& sample, Stat&& statistic, const RngStream& rng,
                      std::size_t resamples = 1000, double level = 0.95, unsigned workers = 1) {
  require(!sample.empty(), "bootstrap_ci: empty sample");
  require(resamples >= 2 && level > 0.0 && level < 1.0, "bootstrap_ci: bad parameters");
  std::vector<double> stats = run_replicas(resamples, workers, [&](std::size_t r) {
    RngStream local = rng.substream(r);
    std::vector<double> draw(sample.size());
    for (double& v : draw) v = sample[static_cast<std::size_t>(local.next_u64() % sample.size())];
    return static_cast<double>(statistic(draw));
  });
  std::sort(stats.begin(), stats.end());
  const double a = (1.0 - level) / 2;
  auto at = [&](double q) {
    const double pos = q * static_cast<double>(stats.size() - 1);
    const auto i = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(i);
    return i + 1 < stats.size() ? stats[i] * (1 - frac) + stats[i + 1] * frac : stats[i];
  };
  return {at(a), at(1.0 - a)};
}

struct ChiSquare {
  double statistic = 0.0;
  std::int64_t dof = 0;
  double p_value = 1.0;
};

/// Pearson goodness of fit of observed counts to probabilities, pooling
/// adjacent cells until each expected count reaches `min_expected`. The mass
/// missing from `probs` is pooled into a final cell.
inline ChiSquare chi_square_gof(const std::vector<std::int64_t>& counts, const std::vector<double>& probs,
                                double min_expected = 5.0) {
  require(counts.size() == probs.size() + 1, "chi_square_gof: counts must have one overflow cell");
  double n = 0;
  for (auto c : counts) n += static_cast<double>(c);
  require(n > 0, "chi_square_gof: no observations");
  double listed = 0;
  for (double p : probs) listed += p;
  std::vector<std::pair<double, double>> cells;  // (observed, expected)
  double obs = 0, exp = 0;
  for (std::size_t i = 0; i <= probs.size(); ++i) {
    obs += static_cast<double>(counts[i]);
    exp += n * (i < probs.size() ? probs[i] : std::max(0.0, 1.0 - listed));
    if (exp >= min_expected) {
      cells.emplace_back(obs, exp);
      obs = exp = 0;
    }
  }
  if (!cells.empty()) {
    cells.back().first += obs;
    cells.back().second += exp;
  }
  ChiSquare r;
  for (const auto& [o, e] : cells) r.statistic += (o - e) * (o - e) / e;
  r.dof = static_cast<std::int64_t>(cells.size()) - 1;
  if (r.dof >= 1) {
    const boost::math::chi_squared_distribution<double> law(static_cast<double>(r.dof));
    r.p_value = boost::math::cdf(boost::math::complement(law, r.statistic));
  }
  return r;
}

/// One line of an acceptance report.
struct CheckReport {
  std::string statistic;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["statistic"] = r.statistic;
  j["value"] = r.value;
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  return j;
}

}  // namespace revwalk::stats
