#pragma once

// The acceptance suite: nine criteria, each a list of checks comparing a value
// against its threshold. Shared by the acceptance test binary and the
// `report` command. Every random quantity is drawn from RngStream(seed, c)
// where c identifies the criterion and purpose, and replicas use substreams,
// so results do not depend on the worker count.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "revwalk/continuous.hpp"
#include "revwalk/enumerate.hpp"
#include "revwalk/kernels.hpp"
#include "revwalk/ladder_law.hpp"
#include "revwalk/parallel.hpp"
#include "revwalk/return_prob.hpp"
#include "revwalk/rng.hpp"
#include "revwalk/stats.hpp"
#include "revwalk/walk_sim.hpp"

namespace revwalk::acceptance {

using Json = nlohmann::ordered_json;
using stats::CheckReport;

struct Config {
  std::uint64_t seed = 20240917;
  unsigned workers = 1;
  std::function<void(const std::string&)> progress;  // free-form progress notes, never part of results
};

struct CriterionResult {
  std::string id;
  std::string title;
  std::vector<CheckReport> checks;
  Json data = Json::object();
  double seconds = 0.0;  // wall time; reported on stderr only

  bool pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
  }
};

inline Json to_json(const CriterionResult& r) {
  Json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["pass"] = r.pass();
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(stats::to_json(c));
  j["data"] = r.data;
  return j;
}

namespace detail {

inline CriterionResult start(std::string id, std::string title) {
  CriterionResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  return r;
}

inline void note(const Config& cfg, const std::string& s) {
  if (cfg.progress) cfg.progress(s);
}

inline CheckReport at_most(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, value <= threshold};
}
inline CheckReport below(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, value < threshold};
}
inline CheckReport at_least(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, value >= threshold};
}

// Largest ratio between consecutive magnitudes; below 1 means strictly decreasing.
inline double max_step_ratio(const std::vector<double>& v) {
  double r = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) r = std::max(r, std::abs(v[i]) / std::abs(v[i - 1]));
  return r;
}

// Stream identifiers per criterion and purpose.
enum Stream : std::uint64_t {
  kC5LogEta = 501,
  kC5Paths = 502,
  kC6Paths = 601,
  kC6Oracle = 602,
  kC7Growth = 701,
  kC7Event = 702,
  kC9Ladder = 901,
  kC9G1 = 902,
  kC9Sg = 903,
  kC9Continuous = 904,
  kC9Traces = 905,
};

}  // namespace detail

// ---------------------------------------------------------------------------

inline CriterionResult criterion1(const Config& cfg) {
  CriterionResult r = detail::start("c1", "Return-probability local limit theorem on G1");
  const auto table = return_prob_g1_all(128);
  Json rows = Json::array();
  std::vector<double> dev;
  for (std::int64_t n : {4, 8, 16, 32, 64, 128}) {
    const auto& t = table[n - 1];
    rows.push_back({{"n", n}, {"exact", t.exact}, {"asymptote", t.asymptote}, {"ratio", t.ratio}});
    if (n >= 16) dev.push_back(t.ratio - 1.0);
  }
  double brute = 0.0;
  for (std::int64_t n = 1; n <= 6; ++n) brute = std::max(brute, std::abs(table[n - 1].exact - return_prob_g1_bruteforce(n)));
  r.data["table"] = rows;
  const double r128 = table[127].ratio;
  r.checks.push_back({"ratio_at_n128_within_[0.85,1.15]", r128, 0.15, std::abs(r128 - 1.0) <= 0.15});
  r.checks.push_back(detail::below("abs_ratio_minus_1_step_ratio_n16_to_n128", detail::max_step_ratio(dev), 1.0));
  r.checks.push_back(detail::at_most("max_abs_diff_vs_bruteforce_n_le_6", brute, 1e-12));
  detail::note(cfg, "c1 done");
  return r;
}

inline CriterionResult criterion2(const Config& cfg) {
  CriterionResult r = detail::start("c2", "Hitting-kernel local limit theorems");
  const double tol = 1e-10;
  auto p_err = [&](std::int64_t m) {
    const TruncatedPmf p = p_row(m, tol);
    double e = 0.0;
    for (std::int64_t h = 1; h <= p.support_hi; ++h) {
      const double lead = std::exp(-static_cast<double>(h * h) / (4.0 * m)) / std::sqrt(std::numbers::pi * m);
      e = std::max(e, std::abs(p.at(h) - lead));
    }
    return e;
  };
  auto q_err = [&](std::int64_t h) {
    const std::int64_t l_max = 16 * h * h;
    const TruncatedPmf q = q_row(h, l_max, tol);
    double e = 0.0;
    for (std::int64_t l = 1; l <= l_max; ++l)
      e = std::max(e, std::abs(q.at(l) - ladder::levy_profile(static_cast<double>(h), static_cast<double>(l))));
    return e;
  };
  const double p100 = p_err(100), p400 = p_err(400);
  detail::note(cfg, "c2 p kernel done");
  const double q16 = q_err(16), q32 = q_err(32);
  r.data["p_max_error"] = {{"m100", p100}, {"m400", p400}, {"shrink", p100 / p400}};
  r.data["q_max_error"] = {{"h16", q16}, {"h32", q32}, {"shrink", q16 / q32}};
  const double ps = p100 / p400, qs = q16 / q32;
  r.checks.push_back({"p_error_shrink_m100_to_m400_in_[2.5,6]", ps, 6.0, ps >= 2.5 && ps <= 6.0});
  r.checks.push_back({"q_error_shrink_h16_to_h32_in_[6.25,36]", qs, 36.0, qs >= 6.25 && qs <= 36.0});
  detail::note(cfg, "c2 done");
  return r;
}

inline CriterionResult criterion3(const Config& cfg) {
  CriterionResult r = detail::start("c3", "Lyapunov drift of sqrt(log H)");
  std::vector<std::int64_t> ms;
  for (std::int64_t m = 3; m <= 512; ++m) ms.push_back(m);
  const auto reports = ladder::drift_reports(ms, 0.1, 1e-10, ladder::kDefaultMomentLength, [&](std::int64_t h) {
    if (h % 50 == 0) detail::note(cfg, "c3 ladder moments h=" + std::to_string(h));
  });
  auto at = [&](std::int64_t m) -> const ladder::DriftReport& { return reports[m - 3]; };
  std::int64_t m0 = 513;
  for (std::int64_t m = 512; m >= 3 && at(m).drift < 0.0; --m) m0 = m;
  double worst_eps_ratio = 0.0, eps2_floor = 1e300;
  for (std::int64_t m = std::min<std::int64_t>(m0, 512); m <= 512; ++m)
    worst_eps_ratio = std::max(worst_eps_ratio, (at(m).eps1 + at(m).eps3) / at(m).eps2);
  for (std::int64_t m = 64; m <= 512; ++m) eps2_floor = std::min(eps2_floor, at(m).eps2);
  std::vector<double> eps3;
  Json rows = Json::array();
  for (std::int64_t m = 16; m <= 512; m *= 2) {
    eps3.push_back(at(m).eps3);
    rows.push_back(ladder::to_json(at(m)));
  }
  r.data["m0"] = m0;
  r.data["reports"] = rows;
  r.checks.push_back(detail::at_most("m0_drift_negative_on_[m0,512]", static_cast<double>(m0), 64.0));
  r.checks.push_back(detail::below("max_(eps1+eps3)/eps2_on_[m0,512]", worst_eps_ratio, 1.0));
  r.checks.push_back(detail::below("eps3_step_ratio_m16_to_m512", detail::max_step_ratio(eps3), 1.0));
  r.checks.push_back(detail::at_least("min_eps2_on_[64,512]", eps2_floor, 0.005));
  detail::note(cfg, "c3 done");
  return r;
}

inline CriterionResult criterion4(const Config& cfg) {
  CriterionResult r = detail::start("c4", "Sum-minus-integral errors R_f and R_g");
  std::vector<double> rf, rg;
  double f_dev = 0.0, g_dev = 0.0;
  Json rows = Json::array();
  for (std::int64_t m : {64, 256, 1024}) {
    const auto e = ladder::rf(m);
    rf.push_back(e.value);
    const auto ref = ladder::reference_integral_f(static_cast<double>(m));
    f_dev = std::max(f_dev, std::abs(ref.value - ref.closed_form));
    rows.push_back({{"kind", "f"}, {"arg", m}, {"R", e.value}, {"I1", e.parts[0]}, {"I2", e.parts[1]}, {"I3", e.parts[2]}, {"I4", e.parts[3]}});
  }
  for (std::int64_t h : {8, 32, 128}) {
    const auto e = ladder::rg(h);
    rg.push_back(e.value);
    const auto ref = ladder::reference_integral_g(static_cast<double>(h));
    g_dev = std::max(g_dev, std::abs(ref.value - ref.closed_form));
    rows.push_back({{"kind", "g"}, {"arg", h}, {"R", e.value}, {"J1", e.parts[0]}, {"J2", e.parts[1]}, {"J3", e.parts[2]}, {"J4", e.parts[3]}});
  }
  r.data["errors"] = rows;
  r.checks.push_back(detail::below("abs_Rf_step_ratio_m64_m256_m1024", detail::max_step_ratio(rf), 1.0));
  r.checks.push_back(detail::below("abs_Rg_step_ratio_h8_h32_h128", detail::max_step_ratio(rg), 1.0));
  r.checks.push_back(detail::at_most("max_abs_integral_f_minus_closed_form", f_dev, 1e-10));
  r.checks.push_back(detail::at_most("max_abs_integral_g_minus_closed_form", g_dev, 1e-10));
  detail::note(cfg, "c4 done");
  return r;
}

namespace detail {

struct ContinuousSample {
  stats::CensoredSample n_t;  // sigma^2 N_t / log^2 t
  stats::CensoredSample n_b;  // sigma^2 N_t^b / log^2 t
  bool sandwich_ok = true;
};

// Paths from H_0 = m; a path is cut after the number of windings at which the
// normalised statistic would exceed `censor_at`.
inline ContinuousSample continuous_sample(const Config& cfg, std::uint64_t stream, double log_t, std::int64_t paths,
                                          double eps, double censor_at = 4000.0) {
  const double scale = continuous::kWindingVariance / (log_t * log_t);
  const auto cap = static_cast<std::int64_t>(std::ceil(censor_at / scale)) + 1;
  const RngStream base(cfg.seed, stream);
  const auto runs = run_replicas(static_cast<std::size_t>(paths), cfg.workers, [&](std::size_t i) {
    RngStream rng = base.substream(i);
    return continuous::stream_winding(1.0, log_t, eps, rng, cap, false);
  });
  ContinuousSample s;
  for (const auto& w : runs) {
    const double x = scale * static_cast<double>(w.counts.n_t);
    const double b = scale * w.counts.n_b;
    (w.censored_t ? s.n_t.censor_points : s.n_t.exact).push_back(x);
    (w.censored_t ? s.n_b.censor_points : s.n_b.exact).push_back(b);
    s.sandwich_ok = s.sandwich_ok && w.sandwich_ok;
  }
  return s;
}

inline double levy_cdf_or_zero(double x) { return x > 0.0 ? continuous::levy_cdf(x) : 0.0; }

}  // namespace detail

inline CriterionResult criterion5(const Config& cfg) {
  CriterionResult r = detail::start("c5", "Continuous winding limit (Levy law)");
  const std::int64_t draws = 1000000;
  RngStream eta_rng(cfg.seed, detail::kC5LogEta);
  KahanSum s1, s2;
  for (std::int64_t i = 0; i < draws; ++i) {
    const double v = continuous::sample_log_eta(eta_rng);
    s1 += v;
    s2 += v * v;
  }
  const double mean = s1.value() / draws;
  const double var = s2.value() / draws - mean * mean;
  const double var_rel = std::abs(var / continuous::kLogEtaVariance - 1.0);
  const auto s25 = detail::continuous_sample(cfg, detail::kC5Paths, 25.0, 10000, 1.0);
  detail::note(cfg, "c5 log t = 25 done");
  const auto s50 = detail::continuous_sample(cfg, detail::kC5Paths + 1000, 50.0, 10000, 1.0);
  const double ks25 = stats::ks_censored_upper(s25.n_t, detail::levy_cdf_or_zero);
  const double ks50 = stats::ks_censored_upper(s50.n_t, detail::levy_cdf_or_zero);
  r.data["sigma2"] = continuous::kWindingVariance;
  r.data["ks_logt25"] = ks25;
  r.data["ks_logt50"] = ks50;
  r.data["censored_fraction_logt25"] = s25.n_t.censored_fraction();
  r.data["censored_fraction_logt50"] = s50.n_t.censored_fraction();
  r.data["log_eta_mean"] = mean;
  r.data["log_eta_variance"] = var;
  r.checks.push_back(detail::at_most("ks_upper_bound_logt50", ks50, 0.05));
  r.checks.push_back(detail::below("ks_logt50_minus_ks_logt25", ks50 - ks25, 0.0));
  r.checks.push_back(detail::at_most("rel_dev_var_log_eta_from_pi2", var_rel, 0.02));
  detail::note(cfg, "c5 done");
  return r;
}

inline CriterionResult criterion6(const Config& cfg) {
  CriterionResult r = detail::start("c6", "Big-winding limit (occupation time law)");
  const auto s50 = detail::continuous_sample(cfg, detail::kC6Paths, 50.0, 10000, 1.0);
  detail::note(cfg, "c6 paths done");
  const std::int64_t oracle_n = 100000;
  const RngStream base(cfg.seed, detail::kC6Oracle);
  const auto occ = run_replicas(static_cast<std::size_t>(oracle_n), cfg.workers, [&](std::size_t i) {
    RngStream rng = base.substream(i);
    return continuous::sample_occupation_t1(rng, 1000).value;
  });
  KahanSum l1, l2;
  for (double v : occ) {
    const double e = std::exp(-v);
    l1 += e;
    l2 += e * e;
  }
  const double lap = l1.value() / oracle_n;
  const double se = std::sqrt(std::max(0.0, l2.value() / oracle_n - lap * lap) / oracle_n);
  const double target = 1.0 / std::cosh(std::sqrt(2.0));
  const double ks = stats::two_sample_ks_censored_upper(s50.n_b, stats::Ecdf(occ));
  r.data["laplace_mean"] = lap;
  r.data["laplace_target"] = target;
  r.data["laplace_se"] = se;
  r.data["two_sample_ks_upper"] = ks;
  r.data["censored_fraction"] = s50.n_b.censored_fraction();
  r.checks.push_back(detail::at_most("two_sample_ks_upper_bound_logt50", ks, 0.08));
  r.checks.push_back(detail::at_most("laplace_deviation_in_standard_errors", std::abs(lap - target) / se, 3.0));
  detail::note(cfg, "c6 done");
  return r;
}

inline CriterionResult criterion7(const Config& cfg) {
  CriterionResult r = detail::start("c7", "Winding law of large numbers for the associated time process");
  const double target = 1.0 / (2.0 * std::numbers::pi);
  const std::vector<std::int64_t> grid = {1000, 10000, 100000, 1000000};
  const std::int64_t reps = 200;
  const RngStream growth(cfg.seed, detail::kC7Growth);
  const auto runs = run_replicas(static_cast<std::size_t>(reps), cfg.workers, [&](std::size_t i) {
    RngStream rng = growth.substream(i);
    return walk::sg_winding_stream(grid.back(), 0, rng, grid);
  });
  std::vector<std::pair<double, double>> pts;
  Json means = Json::array();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    KahanSum s;
    for (const auto& w : runs) s += 0.5 * static_cast<double>(w.events_at[k]);
    const double mean = s.value() / reps;
    pts.emplace_back(std::log(static_cast<double>(grid[k])), mean);
    means.push_back({{"n", grid[k]}, {"mean_N", mean}});
  }
  const auto fit = stats::slope_fit(pts);
  KahanSum per;
  for (const auto& w : runs) per += 0.5 * static_cast<double>(w.events) / std::log(static_cast<double>(grid.back()));
  const double per_path = per.value() / reps;
  const std::int64_t i = 512;
  const auto exact = walk::exact_event_probability(i, 0);
  const std::int64_t mc_reps = 1000000;
  const RngStream ev(cfg.seed, detail::kC7Event);
  const auto hits = run_replicas(static_cast<std::size_t>(mc_reps), cfg.workers, [&](std::size_t k) {
    RngStream rng = ev.substream(k);
    return static_cast<std::int64_t>(walk::sg_winding_stream(2 * i, 0, rng).event_at_end);
  });
  std::int64_t h = 0;
  for (auto v : hits) h += v;
  const double mc = static_cast<double>(i) * static_cast<double>(h) / static_cast<double>(mc_reps);
  const double inv_pi = 1.0 / std::numbers::pi;
  r.data["means"] = means;
  r.data["slope"] = fit.slope;
  r.data["intercept"] = fit.intercept;
  r.data["r_squared"] = fit.r_squared;
  r.data["per_path_mean_N_over_log_n"] = per_path;
  r.data["i_P_A_exact"] = static_cast<double>(i) * exact.a;
  r.data["i_P_A_monte_carlo"] = mc;
  r.checks.push_back(detail::at_most("rel_dev_slope_from_1/(2pi)", std::abs(fit.slope / target - 1.0), 0.10));
  r.checks.push_back(detail::at_most("rel_dev_per_path_N/log_n_from_1/(2pi)", std::abs(per_path / target - 1.0), 0.15));
  r.checks.push_back(detail::at_most("rel_dev_exact_i_P(A_2i)_from_1/pi", std::abs(i * exact.a / inv_pi - 1.0), 0.10));
  r.checks.push_back(detail::at_most("rel_dev_monte_carlo_i_P(A_2i)_from_1/pi", std::abs(mc / inv_pi - 1.0), 0.10));
  detail::note(cfg, "c7 done");
  return r;
}

inline CriterionResult criterion8(const Config& cfg) {
  CriterionResult r = detail::start("c8", "Exhaustive combinatorial oracles");
  Json rows = Json::array();
  for (const auto& o : enumerate::all_oracles()) {
    rows.push_back({{"name", o.name}, {"cases", o.cases}, {"failures", o.failures}});
    r.checks.push_back({o.name + "_failures", static_cast<double>(o.failures), 0.0, o.pass()});
  }
  r.data["oracles"] = rows;
  detail::note(cfg, "c8 done");
  return r;
}

inline CriterionResult criterion9(const Config& cfg) {
  CriterionResult r = detail::start("c9", "Cross-validation of simulation against exact laws");
  const std::int64_t m = 32;
  const std::int64_t reps = 1000000;
  const std::int64_t cap = std::int64_t{1} << 21;
  const std::int64_t l_max = std::int64_t{1} << 20;
  struct FirstEpoch {
    std::int64_t v = 0, h = 0;
    bool v_known = false, h_known = false;
  };
  const RngStream base(cfg.seed, detail::kC9Ladder);
  const auto runs = run_replicas(static_cast<std::size_t>(reps), cfg.workers, [&](std::size_t i) {
    RngStream rng = base.substream(i);
    const auto tr = walk::simulate_g2_ladder(m, cap, rng, 1);
    FirstEpoch e;
    if (!tr.entries.empty()) {
      e = {tr.entries[0].v, tr.entries[0].h, true, true};
    } else if (tr.open_sigma_reached) {
      e.v = tr.open_v;
      e.v_known = true;
      e.h = std::llabs(tr.last_site.x);
    }
    return e;
  });
  detail::note(cfg, "c9 ladder simulation done");
  stats::CensoredSample v_sample, h_sample;
  for (const auto& e : runs) {
    (e.v_known ? v_sample.exact : v_sample.censor_points).push_back(e.v_known ? static_cast<double>(e.v) : 1.0);
    (e.h_known ? h_sample.exact : h_sample.censor_points).push_back(static_cast<double>(e.h));
  }
  const TruncatedPmf p = p_row(m, 1e-12);
  std::vector<double> p_cdf(p.mass.size() + 1, 0.0);
  for (std::size_t k = 0; k < p.mass.size(); ++k) p_cdf[k + 1] = p_cdf[k] + p.mass[k];
  auto v_lo = [&](double x) {
    if (x < 1.0) return 0.0;
    const auto k = static_cast<std::size_t>(std::min<double>(std::floor(x), static_cast<double>(p.support_hi)));
    return p_cdf[k];
  };
  auto v_hi = [&](double x) { return std::min(1.0, v_lo(x) + (x >= 1.0 ? p.tail_bound : 0.0)); };
  const double ks_v = stats::ks_censored_upper(v_sample, v_lo, v_hi);
  const double law_tol = 1e-9;
  const TruncatedPmf h1 = ladder::h1_law(m, l_max, law_tol);
  std::vector<double> h_cdf(h1.mass.size(), 0.0);
  {
    KahanSum s;
    for (std::size_t k = 0; k < h1.mass.size(); ++k) {
      s += h1.mass[k];
      h_cdf[k] = s.value();
    }
  }
  auto h_lo = [&](double x) {
    if (x < 0.0) return 0.0;
    const auto k = static_cast<std::size_t>(std::min<double>(std::floor(x), static_cast<double>(l_max)));
    return std::max(0.0, h_cdf[k] - law_tol);
  };
  auto h_hi = [&](double x) {
    if (x < 0.0) return 0.0;
    if (x > static_cast<double>(l_max)) return 1.0;
    return std::min(1.0, h_cdf[static_cast<std::size_t>(std::floor(x))] + law_tol);
  };
  const double ks_h = stats::ks_censored_upper(h_sample, h_lo, h_hi);
  detail::note(cfg, "c9 kernels compared");

  // Sandwiches and ladder invariants on independent paths.
  const RngStream g1(cfg.seed, detail::kC9G1), sg(cfg.seed, detail::kC9Sg), cont(cfg.seed, detail::kC9Continuous),
      traces(cfg.seed, detail::kC9Traces);
  const auto g1_ok = run_replicas(200, cfg.workers, [&](std::size_t i) {
    RngStream rng = g1.substream(i);
    return static_cast<int>(walk::count_half_windings_g1(walk::simulate_g1(100000, rng)).sandwich_holds());
  });
  const auto sg_ok = run_replicas(200, cfg.workers, [&](std::size_t i) {
    RngStream rng = sg.substream(i);
    return static_cast<int>(walk::count_windings_sg(walk::simulate_sg(100000, 0, rng)).sandwich_holds());
  });
  const auto mu_ok = run_replicas(1000, cfg.workers, [&](std::size_t i) {
    RngStream rng = cont.substream(i);
    return static_cast<int>(continuous::winding_clock(continuous::ladder_path_b(1.0, 2000, rng)).sandwich_holds());
  });
  const auto trace_ok = run_replicas(200, cfg.workers, [&](std::size_t i) {
    RngStream rng = traces.substream(i);
    return static_cast<int>(walk::ladder_trace_consistent(walk::simulate_g2_ladder(1 + static_cast<std::int64_t>(i % 50), 1 << 20, rng, 50)));
  });
  auto fraction = [](const std::vector<int>& v) {
    double s = 0;
    for (int x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  r.data["ks_v1_upper"] = ks_v;
  r.data["ks_h1_upper"] = ks_h;
  r.data["h1_censored_fraction"] = h_sample.censored_fraction();
  r.data["h1_law_tail_bound"] = h1.tail_bound;
  r.checks.push_back(detail::at_most("ks_upper_bound_V1_m32", ks_v, 0.01));
  r.checks.push_back(detail::at_most("ks_upper_bound_H1_m32", ks_h, 0.01));
  const double started = std::min(fraction(g1_ok), fraction(sg_ok));
  r.checks.push_back(detail::at_least("fraction_paths_started_windings_sandwich", started, 1.0));
  r.checks.push_back(detail::at_least("fraction_paths_mu_T_sandwich", fraction(mu_ok), 1.0));
  r.checks.push_back(detail::at_least("fraction_ladder_traces_consistent", fraction(trace_ok), 1.0));
  detail::note(cfg, "c9 done");
  return r;
}

inline const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = {"c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9"};
  return ids;
}

inline CriterionResult run_criterion(const std::string& id, const Config& cfg) {
  using Fn = CriterionResult (*)(const Config&);
  static const Fn table[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                             criterion6, criterion7, criterion8, criterion9};
  const auto& ids = criterion_ids();
  const auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw DomainError("unknown acceptance criterion: " + id);
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r = table[it - ids.begin()](cfg);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace revwalk::acceptance
