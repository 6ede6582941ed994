#pragma once

// Laws and log-moments of the first ladder height H_1 of the G2 walk.
//
// By the strong Markov property, passing from (0, h) to the x-axis is h
// independent passages from height 1 to height 0, so q_{h,.} is the h-fold
// convolution of q_{1,.}. The generating function of q_{1,.} is
//   E_1[z^H] = (3 - z - sqrt((1 - z)(5 - z))) / 2,
// whose coefficients obey a stable three-term recurrence. Convolutions are
// linear (zero padded to twice the length), so every listed entry is exact
// up to rounding. The law of H_1 under P_m is sum_h p_{m,h} q_{h,.}.

#include <fftw3.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <vector>

#include "revwalk/error.hpp"
#include "revwalk/kernels.hpp"
#include "revwalk/numerics.hpp"

namespace revwalk::ladder {

/// q_{1,l} for l in [0, length).
inline std::vector<double> q1_closed_form(std::int64_t length) {
  require(length >= 2, "q1_closed_form: length must be >= 2");
  const double r5 = std::sqrt(5.0);
  std::vector<double> a(static_cast<std::size_t>(length));
  a[0] = r5;
  a[1] = -3.0 / r5;
  // Coefficients a_n of sqrt((1-z)(5-z)).
  for (std::int64_t n = 1; n + 1 < length; ++n)
    a[n + 1] = ((6.0 * n - 3.0) * a[n] - (n - 2.0) * a[n - 1]) / (5.0 * (n + 1));
  std::vector<double> q(a.size());
  q[0] = (3.0 - r5) / 2;
  q[1] = (-1.0 + 3.0 / r5) / 2;
  for (std::size_t n = 2; n < q.size(); ++n) q[n] = -a[n] / 2;
  return q;
}

/// Bound on the summed absolute rounding error of q1_closed_form. Each step
/// of the recurrence contributes a few ulps relative; errors are carried
/// along linearly.
inline double q1_rounding_bound(const std::vector<double>& q) {
  KahanSum s;
  for (std::size_t n = 0; n < q.size(); ++n) s += 8.0 * kUnitRoundoff * static_cast<double>(n + 1) * std::abs(q[n]);
  return s.value();
}

namespace detail {

inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

inline double norm2(const std::vector<double>& v) {
  long double s = 0;
  for (double x : v) s += static_cast<long double>(x) * x;
  return static_cast<double>(std::sqrt(s));
}

}  // namespace detail

/// Truncated linear convolution on [0, length) by zero-padded real FFTs.
class FftConvolver {
 public:
  explicit FftConvolver(std::int64_t length) : length_(length), padded_(2 * length) {
    require(length >= 1, "FftConvolver: length must be >= 1");
    const std::size_t bins = static_cast<std::size_t>(padded_ / 2 + 1);
    real_ = fftw_alloc_real(static_cast<std::size_t>(padded_));
    spec_ = fftw_alloc_complex(bins);
    kernel_ = fftw_alloc_complex(bins);
    std::lock_guard lock(detail::fftw_planner_mutex());
    // Estimated plans are chosen deterministically, which keeps reruns bit-identical.
    forward_ = fftw_plan_dft_r2c_1d(static_cast<int>(padded_), real_, spec_, FFTW_ESTIMATE);
    inverse_ = fftw_plan_dft_c2r_1d(static_cast<int>(padded_), spec_, real_, FFTW_ESTIMATE);
  }
  FftConvolver(const FftConvolver&) = delete;
  FftConvolver& operator=(const FftConvolver&) = delete;
  ~FftConvolver() {
    std::lock_guard lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(inverse_);
    fftw_free(real_);
    fftw_free(spec_);
    fftw_free(kernel_);
  }

  std::int64_t length() const { return length_; }

  void set_kernel(const std::vector<double>& k) {
    load(k);
    fftw_execute(forward_);
    std::memcpy(kernel_, spec_, sizeof(fftw_complex) * static_cast<std::size_t>(padded_ / 2 + 1));
    kernel_norm_ = detail::norm2(k);
  }

  /// a <- (a * kernel) restricted to [0, length). Returns a bound on the sum
  /// of absolute rounding errors over the listed entries.
  double apply(std::vector<double>& a) {
    const double a_norm = detail::norm2(a);
    load(a);
    fftw_execute(forward_);
    const std::size_t bins = static_cast<std::size_t>(padded_ / 2 + 1);
    for (std::size_t i = 0; i < bins; ++i) {
      const double re = spec_[i][0] * kernel_[i][0] - spec_[i][1] * kernel_[i][1];
      const double im = spec_[i][0] * kernel_[i][1] + spec_[i][1] * kernel_[i][0];
      spec_[i][0] = re;
      spec_[i][1] = im;
    }
    fftw_execute(inverse_);
    const double inv = 1.0 / static_cast<double>(padded_);
    a.resize(static_cast<std::size_t>(length_));
    for (std::int64_t i = 0; i < length_; ++i) a[i] = real_[i] * inv;
    // Componentwise l2 error of an FFT convolution is O(u log N) |a|_2 |k|_2;
    // Cauchy-Schwarz turns it into an l1 bound over the listed entries.
    return 5.0 * kUnitRoundoff * std::log2(static_cast<double>(padded_)) * a_norm * kernel_norm_ *
           std::sqrt(static_cast<double>(length_));
  }

 private:
  void load(const std::vector<double>& v) {
    const std::int64_t n = std::min<std::int64_t>(length_, static_cast<std::int64_t>(v.size()));
    std::copy(v.begin(), v.begin() + n, real_);
    std::fill(real_ + n, real_ + padded_, 0.0);
  }

  std::int64_t length_;
  std::int64_t padded_;
  double* real_ = nullptr;
  fftw_complex* spec_ = nullptr;
  fftw_complex* kernel_ = nullptr;
  fftw_plan forward_{};
  fftw_plan inverse_{};
  double kernel_norm_ = 0.0;
};

/// Listed law of H_1 from (0, h) on [0, length), by repeated squaring.
struct QRow {
  std::vector<double> mass;
  double numeric_error = 0.0;  // bound on the summed absolute error of the entries
};

inline QRow q_power(std::int64_t h, std::int64_t length) {
  require(h >= 1, "q_power: h must be >= 1");
  const std::vector<double> q1 = q1_closed_form(std::max<std::int64_t>(length, 2));
  const double q1_err = q1_rounding_bound(q1);
  FftConvolver conv(length);
  QRow base{q1, q1_err}, acc;
  base.mass.resize(static_cast<std::size_t>(length));
  bool have = false;
  for (std::int64_t e = h; e > 0; e >>= 1) {
    if (e & 1) {
      if (!have) {
        acc = base;
        have = true;
      } else {
        conv.set_kernel(base.mass);
        acc.numeric_error += base.numeric_error + conv.apply(acc.mass);
      }
    }
    if (e > 1) {
      conv.set_kernel(base.mass);
      base.numeric_error = 2 * base.numeric_error + conv.apply(base.mass);
    }
  }
  return acc;
}

/// Law of H_1 under P_m listed on [0, l_max]. The unlisted mass is bounded by
/// tail_bound. Throws CertificationError when the kernel-side error (the h cut
/// of p_{m,.}, series and FFT rounding) exceeds tol.
inline TruncatedPmf h1_law(std::int64_t m, std::int64_t l_max, double tol) {
  if (!(tol > 0.0)) throw DomainError("h1_law: tolerance must be positive");
  require(m >= 1, "h1_law: m must be >= 1");
  require(l_max >= 1, "h1_law: l_max must be >= 1");
  const std::int64_t length = l_max + 1;
  const TruncatedPmf p = p_row(m, tol / 4);
  const std::vector<double> q1 = q1_closed_form(std::max<std::int64_t>(length, 2));
  const double q1_err = q1_rounding_bound(q1);
  FftConvolver conv(length);
  conv.set_kernel(q1);
  // Horner in the generating function: sum_h p_h Q^h = Q (p_1 + Q (p_2 + ...)).
  std::vector<double> r(static_cast<std::size_t>(length), 0.0);
  r[0] = p.at(p.support_hi);
  double fft_err = 0.0, mean_v = 0.0;
  for (std::int64_t h = p.support_hi - 1; h >= 1; --h) {
    fft_err += conv.apply(r);
    r[0] += p.at(h);
  }
  fft_err += conv.apply(r);
  for (std::int64_t h = 1; h <= p.support_hi; ++h) mean_v += static_cast<double>(h) * p.at(h);
  const double kernel_err = p.tail_bound + mean_v * q1_err + fft_err;
  if (kernel_err > tol) throw CertificationError("h1_law: truncation and rounding error exceeds tolerance");
  for (double& v : r) v = std::max(v, 0.0);
  TruncatedPmf out;
  out.support_lo = 0;
  out.support_hi = l_max;
  out.mass = std::move(r);
  out.tail_bound = std::max(0.0, 1.0 - out.total()) + kernel_err;
  return out;
}

// ---------------------------------------------------------------------------
// Log-moments with a modelled tail.

/// Leading-order (Levy) profile of q_{h,l} for large l.
inline double levy_profile(double h, double l) {
  return h / (2.0 * std::sqrt(std::numbers::pi)) * std::pow(l, -1.5) * std::exp(-h * h / (4.0 * l));
}

/// Integrals over [A, inf) of the Levy profile times 1, log x, log^2 x and
/// sqrt(log x), with x = A/u^2 to map the heavy tail onto (0, 1].
struct TailIntegrals {
  double mass = 0.0, log1 = 0.0, log2 = 0.0, sqrt_log = 0.0;
};

inline TailIntegrals levy_tail_integrals(double h, double A) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double pre = 2.0 / std::sqrt(A) * h / (2.0 * std::sqrt(std::numbers::pi));
  const double la = std::log(A);
  auto integrate = [&](auto k) {
    return pre * ts.integrate([&](double u) { return std::exp(-h * h * u * u / (4.0 * A)) * k(la - 2.0 * std::log(u)); },
                              0.0, 1.0);
  };
  TailIntegrals t;
  t.mass = integrate([](double) { return 1.0; });
  t.log1 = integrate([](double lx) { return lx; });
  t.log2 = integrate([](double lx) { return lx * lx; });
  t.sqrt_log = integrate([](double lx) { return std::sqrt(lx); });
  return t;
}

struct HeightMoments {
  double log1 = 0.0;      // E_h[log H_1]
  double log2 = 0.0;      // E_h[log^2 H_1]
  double sqrt_log = 0.0;  // E_h[sqrt(log H_1)]
  double listed_mass = 0.0;
  double tail_mass = 0.0;        // 1 - listed_mass
  double model_tail_mass = 0.0;  // Levy-profile mass beyond the listed range, before rescaling
};

struct PartialMoments {
  double mass = 0.0, log1 = 0.0, log2 = 0.0;  // restricted to H_1 <= cutoff
};

struct MomentTable {
  std::int64_t length = 0;
  std::vector<std::int64_t> cutoffs;
  std::vector<HeightMoments> full;                  // indexed by h; entry 0 unused
  std::vector<std::vector<PartialMoments>> partial; // [h][cutoff index]
  double numeric_error = 0.0;                       // summed l1 error of the listed rows
};

/// Streams q_{h,.} for h = 1..h_max on [0, length) and records log-moments of
/// H_1 under P_h. Beyond the listed range the Levy profile, rescaled to the
/// exactly known missing mass, supplies the tail of the full moments. Partial
/// moments at each cutoff c < length are exact sums over l <= c. Logs of 0 and
/// 1 are taken as 0.
inline MomentTable ladder_moments(std::int64_t h_max, std::int64_t length, std::vector<std::int64_t> cutoffs,
                                  const std::function<void(std::int64_t)>& progress = {}) {
  require(h_max >= 1, "ladder_moments: h_max must be >= 1");
  require(length >= 4, "ladder_moments: length must be >= 4");
  std::sort(cutoffs.begin(), cutoffs.end());
  cutoffs.erase(std::unique(cutoffs.begin(), cutoffs.end()), cutoffs.end());
  for (auto c : cutoffs) require(c >= 0 && c < length, "ladder_moments: cutoff outside listed range");
  MomentTable t;
  t.length = length;
  t.cutoffs = cutoffs;
  t.full.resize(static_cast<std::size_t>(h_max + 1));
  t.partial.assign(static_cast<std::size_t>(h_max + 1), std::vector<PartialMoments>(cutoffs.size()));
  std::vector<double> lg(static_cast<std::size_t>(length), 0.0), lg2(lg.size(), 0.0), slg(lg.size(), 0.0);
  for (std::int64_t l = 2; l < length; ++l) {
    lg[l] = std::log(static_cast<double>(l));
    lg2[l] = lg[l] * lg[l];
    slg[l] = std::sqrt(lg[l]);
  }
  const std::vector<double> q1 = q1_closed_form(length);
  const double q1_err = q1_rounding_bound(q1);
  FftConvolver conv(length);
  conv.set_kernel(q1);
  std::vector<double> row = q1;
  double row_err = q1_err;
  const double A = static_cast<double>(length) - 0.5;
  for (std::int64_t h = 1; h <= h_max; ++h) {
    if (h > 1) row_err += q1_err + conv.apply(row);
    KahanSum mass, s1, s2, ss;
    std::size_t ci = 0;
    for (std::int64_t l = 0; l < length; ++l) {
      const double v = row[l];
      mass += v;
      s1 += v * lg[l];
      s2 += v * lg2[l];
      ss += v * slg[l];
      while (ci < cutoffs.size() && cutoffs[ci] == l) {
        t.partial[h][ci] = {mass.value(), s1.value(), s2.value()};
        ++ci;
      }
    }
    HeightMoments& hm = t.full[h];
    hm.listed_mass = mass.value();
    hm.tail_mass = std::max(0.0, 1.0 - hm.listed_mass);
    const TailIntegrals tail = levy_tail_integrals(static_cast<double>(h), A);
    hm.model_tail_mass = tail.mass;
    const double scale = tail.mass > 0.0 ? hm.tail_mass / tail.mass : 0.0;
    hm.log1 = s1.value() + scale * tail.log1;
    hm.log2 = s2.value() + scale * tail.log2;
    hm.sqrt_log = ss.value() + scale * tail.sqrt_log;
    if (progress) progress(h);
  }
  t.numeric_error = row_err;
  return t;
}

// ---------------------------------------------------------------------------
// Drift ledger.

struct DriftReport {
  std::int64_t m = 0;
  double e_log_h1 = 0.0;
  double e_sqrt_log_h1 = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  double eps3 = 0.0;
  double drift = 0.0;
  double delta = 0.1;
  double tol = 1e-10;
};

inline nlohmann::ordered_json to_json(const DriftReport& r) {
  nlohmann::ordered_json j;
  j["m"] = r.m;
  j["e_log_h1"] = r.e_log_h1;
  j["e_sqrt_log_h1"] = r.e_sqrt_log_h1;
  j["eps1"] = r.eps1;
  j["eps2"] = r.eps2;
  j["eps3"] = r.eps3;
  j["drift"] = r.drift;
  j["delta"] = r.delta;
  j["tol"] = r.tol;
  return j;
}

inline constexpr std::int64_t kDefaultMomentLength = std::int64_t{1} << 20;

/// Drift ledger for every m in `ms` from one pass of the moment engine.
inline std::vector<DriftReport> drift_reports(const std::vector<std::int64_t>& ms, double delta, double tol,
                                              std::int64_t length = kDefaultMomentLength,
                                              const std::function<void(std::int64_t)>& progress = {}) {
  if (!(tol > 0.0)) throw DomainError("drift_report: tolerance must be positive");
  std::int64_t h_max = 1;
  std::vector<std::int64_t> cutoffs;
  for (auto m : ms) {
    require(m >= 3, "drift_report: m must be >= 3");
    require(m * m < length, "drift_report: m^2 must lie inside the listed range");
    h_max = std::max(h_max, p_row_cut(m, tol));
    cutoffs.push_back(m * m);
  }
  const MomentTable table = ladder_moments(h_max, length, cutoffs, progress);
  std::vector<DriftReport> out;
  for (auto m : ms) {
    const TruncatedPmf p = p_row(m, tol);
    if (p.tail_bound > tol) throw CertificationError("drift_report: p_{m,.} cut cannot certify tolerance");
    const std::size_t ci = static_cast<std::size_t>(
        std::lower_bound(table.cutoffs.begin(), table.cutoffs.end(), m * m) - table.cutoffs.begin());
    KahanSum e1, e2, es, p0, p1, p2;
    for (std::int64_t h = 1; h <= p.support_hi; ++h) {
      const double w = p.at(h);
      const HeightMoments& hm = table.full[h];
      const PartialMoments& pm = table.partial[h][ci];
      e1 += w * hm.log1;
      e2 += w * hm.log2;
      es += w * hm.sqrt_log;
      p0 += w * pm.mass;
      p1 += w * pm.log1;
      p2 += w * pm.log2;
    }
    const double lm = std::log(static_cast<double>(m));
    DriftReport r;
    r.m = m;
    r.delta = delta;
    r.tol = tol;
    r.e_log_h1 = e1.value();
    r.e_sqrt_log_h1 = es.value();
    r.eps1 = (r.e_log_h1 - lm) / (2.0 * std::sqrt(lm));
    r.eps2 = std::max(0.0, p2.value() - 2.0 * lm * p1.value() + lm * lm * p0.value()) / (16.0 * std::pow(lm, 1.5));
    r.eps3 = std::max(0.0, 2.0 * (e2.value() - p2.value()));
    r.drift = r.e_sqrt_log_h1 - std::sqrt(lm);
    out.push_back(r);
  }
  return out;
}

inline DriftReport drift_report(std::int64_t m, double delta = 0.1, double tol = 1e-10,
                                std::int64_t length = kDefaultMomentLength) {
  return drift_reports({m}, delta, tol, length).front();
}

// ---------------------------------------------------------------------------
// Reference integrals and the sum-minus-integral errors R_f, R_g.

/// f_m(x) = log(x) exp(-x^2 / 4m) / sqrt(pi m).
inline double f_m(double m, double x) {
  return std::log(x) * std::exp(-x * x / (4.0 * m)) / std::sqrt(std::numbers::pi * m);
}

/// g_h(x) = log(x) h exp(-h^2 / 4x) / (2 sqrt(pi) x^{3/2}).
inline double g_h(double h, double x) { return std::log(x) * levy_profile(h, x); }

namespace detail {

// Integral of (2/sqrt(pi)) e^{-v^2} k(v) over (0, v1], or over (0, inf) when v1 is infinite.
template <class K>
double gaussian_weighted(K k, double v1) {
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  const double c = 2.0 / std::sqrt(std::numbers::pi);
  auto f = [&](double v) { return c * std::exp(-v * v) * k(v); };
  if (std::isinf(v1)) return ts.integrate(f, 0.0, 1.0) + es.integrate(f, 1.0, std::numeric_limits<double>::infinity());
  if (v1 <= 1.0) return ts.integrate(f, 0.0, v1);
  return ts.integrate(f, 0.0, 1.0) + ts.integrate(f, 1.0, v1);
}

// Integral of f_m over [a, b] (b may be infinite), via x = 2 sqrt(m) v.
inline double integral_f(double m, double a, double b) {
  const double s = 2.0 * std::sqrt(m);
  auto k = [&](double v) { return std::log(s) + std::log(v); };
  const double upper = std::isinf(b) ? gaussian_weighted(k, b) : gaussian_weighted(k, b / s);
  return upper - (a > 0.0 ? gaussian_weighted(k, a / s) : 0.0);
}

// Integral of g_h over [c, inf), via x = h^2 / (4 v^2).
inline double integral_g_above(double h, double c) {
  auto k = [&](double v) { return 2.0 * std::log(h) - std::log(4.0) - 2.0 * std::log(v); };
  return gaussian_weighted(k, c > 0.0 ? h / (2.0 * std::sqrt(c)) : std::numeric_limits<double>::infinity());
}

}  // namespace detail

struct ReferenceIntegral {
  double scale = 0.0;
  double value = 0.0;        // by quadrature
  double closed_form = 0.0;  // (log m)/2 - gamma/2, or 2 log h + gamma
  double euler_gamma = kEulerGamma;
};

inline ReferenceIntegral reference_integral_f(double m) {
  require(m > 0.0, "reference_integral_f: m must be positive");
  return {m, detail::integral_f(m, 0.0, std::numeric_limits<double>::infinity()), 0.5 * std::log(m) - kEulerGamma / 2};
}

inline ReferenceIntegral reference_integral_g(double h) {
  require(h > 0.0, "reference_integral_g: h must be positive");
  return {h, detail::integral_g_above(h, 0.0), 2.0 * std::log(h) + kEulerGamma};
}

/// R = sum - integral together with its four-way diagnostic split.
struct ErrorSplit {
  char kind = 'f';  // 'f' for R_f(m), 'g' for R_g(h)
  std::int64_t argument = 0;
  double value = 0.0;
  double sum = 0.0;       // sum of log(k) times the kernel
  double integral = 0.0;  // reference integral by quadrature
  double cutoff = 0.0;    // m^{1/2+delta} or h^{2-delta}
  std::array<double, 4> parts{};
};

/// R_f(m) = sum_h log(h) p_{m,h} - int_0^inf f_m. Parts:
/// I1 = sum_h [log h p_{m,h} - f_m(h)], I2 = sum_{h > c} f_m(h),
/// I3 = sum_{h <= c} f_m(h) - int_1^c f_m, I4 = int_1^c f_m - int_0^inf f_m.
inline ErrorSplit rf(std::int64_t m, double delta = 0.1, double tol = 1e-10) {
  require(m >= 2, "rf: m must be >= 2");
  const TruncatedPmf p = p_row(m, tol);
  const double md = static_cast<double>(m);
  ErrorSplit r;
  r.kind = 'f';
  r.argument = m;
  r.cutoff = std::pow(md, 0.5 + delta);
  KahanSum sum, f_all, f_above, f_below;
  const std::int64_t h_end = std::max(p.support_hi, static_cast<std::int64_t>(std::ceil(std::sqrt(4.0 * md * 800.0))));
  for (std::int64_t h = 1; h <= h_end; ++h) {
    const double hd = static_cast<double>(h);
    sum += std::log(hd) * p.at(h);
    const double f = f_m(md, hd);
    f_all += f;
    (hd > r.cutoff ? f_above : f_below) += f;
  }
  r.sum = sum.value();
  r.integral = detail::integral_f(md, 0.0, std::numeric_limits<double>::infinity());
  r.value = r.sum - r.integral;
  const double inner = detail::integral_f(md, 1.0, r.cutoff);
  r.parts = {r.sum - f_all.value(), f_above.value(), f_below.value() - inner, inner - r.integral};
  return r;
}

/// R_g(h) = sum_l log(l) q_{h,l} - int_0^inf g_h. The sum is listed exactly on
/// [0, length) and completed by the mass-matched Levy tail. Parts:
/// J1 = sum_l [log l q_{h,l} - g_h(l)], J2 = sum_{l < c} g_h(l),
/// J3 = sum_{l >= c} g_h(l) - int_c^inf g_h, J4 = int_c^inf g_h - int_0^inf g_h.
inline ErrorSplit rg(std::int64_t h, double delta = 0.1, double tol = 1e-10,
                     std::int64_t length = kDefaultMomentLength) {
  require(h >= 2, "rg: h must be >= 2");
  (void)tol;
  const QRow row = q_power(h, length);
  const double hd = static_cast<double>(h);
  ErrorSplit r;
  r.kind = 'g';
  r.argument = h;
  r.cutoff = std::pow(hd, 2.0 - delta);
  KahanSum listed, s_log, g_below, g_above;
  for (std::int64_t l = 0; l < length; ++l) {
    listed += row.mass[l];
    if (l >= 2) s_log += row.mass[l] * std::log(static_cast<double>(l));
    if (l >= 1) {
      const double g = g_h(hd, static_cast<double>(l));
      (static_cast<double>(l) < r.cutoff ? g_below : g_above) += g;
    }
  }
  const double A = static_cast<double>(length) - 0.5;
  const TailIntegrals tail = levy_tail_integrals(hd, A);
  const double missing = std::max(0.0, 1.0 - listed.value());
  r.sum = s_log.value() + (tail.mass > 0.0 ? missing / tail.mass * tail.log1 : 0.0);
  // Sum of g_h over l >= length by Euler-Maclaurin.
  const double Ld = static_cast<double>(length);
  const double dg = (g_h(hd, Ld + 0.5) - g_h(hd, Ld - 0.5));
  const double g_tail = detail::integral_g_above(hd, Ld) + g_h(hd, Ld) / 2 - dg / 12;
  const double g_all = g_below.value() + g_above.value() + g_tail;
  r.integral = detail::integral_g_above(hd, 0.0);
  r.value = r.sum - r.integral;
  const double above = detail::integral_g_above(hd, r.cutoff);
  r.parts = {r.sum - g_all, g_below.value(), g_above.value() + g_tail - above, above - r.integral};
  return r;
}

}  // namespace revwalk::ladder
