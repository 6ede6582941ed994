#pragma once

// Trajectory simulation on the oriented lattices and the stopping-time
// skeletons extracted from it. The G2 ladder records (tau_n, H_n, sigma_n, V_n).
// The G1 embedded chain (Xi_n, S_n) is sampled just after vertical steps.
// The simple random walk S carries its associated time process G, the time
// spent above the axis minus the time spent below it.

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <span>
#include <vector>

#include "revwalk/error.hpp"
#include "revwalk/lattice.hpp"
#include "revwalk/parallel.hpp"
#include "revwalk/rng.hpp"

namespace revwalk::walk {

using lattice::Model;
using lattice::Site;

inline int sgn(std::int64_t v) { return (v > 0) - (v < 0); }

struct LadderEntry {
  std::int64_t tau = 0;    // step index of the n-th alternating axis return
  std::int64_t h = 0;      // |X_tau|
  std::int64_t sigma = 0;  // first step after tau_{n-1} with X = 0
  std::int64_t v = 0;      // |Y_sigma|
  std::int64_t x = 0;      // X_tau (signed)
};

struct LadderTrace {
  std::int64_t start_m = 0;
  std::vector<LadderEntry> entries;
  bool truncated = false;
  std::int64_t step_cap = 0;
  std::int64_t steps_taken = 0;
  // State of the open epoch when the run stopped.
  Site last_site;
  bool open_sigma_reached = false;
  std::int64_t open_v = 0;
  std::int64_t open_sigma = 0;
};

/// Runs the G2 walk from (-m, 0) and records ladder epochs until `max_steps`
/// steps or `max_epochs` completed epochs, whichever comes first. When the step
/// cap is hit the trace is flagged truncated; while the open epoch is past its
/// crossing, |X| of `last_site` is a lower bound on the unobserved H.
inline LadderTrace simulate_g2_ladder(std::int64_t m, std::int64_t max_steps, RngStream& rng,
                                      std::int64_t max_epochs = std::numeric_limits<std::int64_t>::max()) {
  require(m >= 1, "simulate_g2_ladder: m must be >= 1");
  require(max_steps >= 1, "simulate_g2_ladder: max_steps must be >= 1");
  LadderTrace tr;
  tr.start_m = m;
  tr.step_cap = max_steps;
  std::int64_t x = -m, y = 0, x_ref = -m;
  bool sigma_found = false;
  std::int64_t sigma = 0, v = 0;
  std::int64_t i = 0;
  while (i < max_steps && static_cast<std::int64_t>(tr.entries.size()) < max_epochs) {
    const Site next = lattice::step(Model::G2, {x, y}, rng.uniform32());
    x = next.x;
    y = next.y;
    ++i;
    if (!sigma_found && x == 0) {
      sigma_found = true;
      sigma = i;
      v = std::llabs(y);
    }
    if (y == 0 && sgn(x) * sgn(x_ref) <= 0) {
      tr.entries.push_back({i, std::llabs(x), sigma, v, x});
      x_ref = x;
      sigma_found = false;
    }
  }
  tr.steps_taken = i;
  tr.truncated = static_cast<std::int64_t>(tr.entries.size()) < max_epochs;
  tr.last_site = {x, y};
  tr.open_sigma_reached = sigma_found;
  tr.open_sigma = sigma_found ? sigma : 0;
  tr.open_v = sigma_found ? v : 0;
  return tr;
}

/// Ladder invariants: tau_{n-1} < sigma_n <= tau_n, V_n >= 1, H_n >= 0 and
/// X_{tau_n} X_{tau_{n-1}} <= 0 with X_{tau_0} = -m.
inline bool ladder_trace_consistent(const LadderTrace& tr) {
  std::int64_t prev_tau = 0, prev_x = -tr.start_m;
  for (const auto& e : tr.entries) {
    if (!(prev_tau < e.sigma && e.sigma <= e.tau)) return false;
    if (e.v < 1 || e.h < 0 || e.h != std::llabs(e.x)) return false;
    if (sgn(e.x) * sgn(prev_x) > 0) return false;
    prev_tau = e.tau;
    prev_x = e.x;
  }
  return true;
}

struct G1Skeleton {
  std::vector<std::int64_t> xi;                  // Xi_0 .. Xi_N
  std::vector<std::int64_t> s;                   // S_0 .. S_N
  std::vector<std::int64_t> vertical_step_times; // T_1 .. T_N
};

/// Simulates the G1 walk from the origin up to its `n_vertical`-th vertical step.
inline G1Skeleton simulate_g1(std::int64_t n_vertical, RngStream& rng) {
  require(n_vertical >= 1, "simulate_g1: n_vertical must be >= 1");
  G1Skeleton sk;
  sk.xi.reserve(n_vertical + 1);
  sk.s.reserve(n_vertical + 1);
  sk.vertical_step_times.reserve(n_vertical);
  sk.xi.push_back(0);
  sk.s.push_back(0);
  Site site{0, 0};
  std::int64_t t = 0;
  for (std::int64_t n = 0; n < n_vertical; ++n) {
    for (;;) {
      const Site next = lattice::step(Model::G1, site, rng.uniform32());
      ++t;
      const bool vertical = next.x == site.x;
      site = next;
      if (vertical) break;
    }
    sk.xi.push_back(site.x);
    sk.s.push_back(site.y);
    sk.vertical_step_times.push_back(t);
  }
  return sk;
}

/// Half windings of a planar chain observed at its axis visits.
struct WindingRecord {
  std::int64_t half_windings_started = 0;      // N*
  std::int64_t completed_windings = 0;         // N = floor(N*/2)
  std::vector<std::int64_t> start_indices;     // index of the axis visit opening each half winding
  std::vector<std::int64_t> completion_indices;
  std::int64_t widened_events = 0;             // sign product <= 0 (associated time process only)

  /// Winding number counted in halves, N*/2.
  double winding_number() const { return 0.5 * static_cast<double>(half_windings_started); }

  /// N*/2 - 1 <= N <= N*/2.
  bool sandwich_holds() const {
    return half_windings_started - 2 <= 2 * completed_windings && 2 * completed_windings <= half_windings_started;
  }
};

namespace detail {

// Walks the axis visits (index k with level[k] == 0) and records a half winding
// between consecutive visits whose horizontal coordinates have strictly
// opposite signs. A visit at horizontal coordinate 0 closes the pending half
// winding without opening one.
inline WindingRecord count_axis_sign_changes(std::span<const std::int64_t> horizontal,
                                             std::span<const std::int64_t> level) {
  WindingRecord rec;
  std::int64_t prev = -1;
  for (std::size_t k = 0; k < level.size(); ++k) {
    if (level[k] != 0) continue;
    if (prev >= 0) {
      const std::int64_t a = horizontal[prev], b = horizontal[k];
      if (a != 0 && sgn(b) == -sgn(a)) {
        rec.start_indices.push_back(prev);
        rec.completion_indices.push_back(static_cast<std::int64_t>(k));
      }
      if (sgn(a) * sgn(b) <= 0) ++rec.widened_events;
    }
    prev = static_cast<std::int64_t>(k);
  }
  rec.half_windings_started = static_cast<std::int64_t>(rec.start_indices.size());
  rec.completed_windings = rec.half_windings_started / 2;
  return rec;
}

}  // namespace detail

/// Half windings of the G1 skeleton (Xi, S). Only half windings whose next axis
/// visit lies inside the skeleton are counted.
inline WindingRecord count_half_windings_g1(const G1Skeleton& sk) {
  require(sk.xi.size() == sk.s.size(), "count_half_windings_g1: ragged skeleton");
  return detail::count_axis_sign_changes(sk.xi, sk.s);
}

struct SGPath {
  std::vector<std::int64_t> s;  // S_0 .. S_n
  std::vector<std::int64_t> g;  // G_0 .. G_n
  std::int64_t g0 = 0;          // 2z
};

/// Side of the edge (a, b) of the walk graph: +1 above, -1 below. An edge
/// touching the axis takes the side of its other endpoint.
inline int edge_side(std::int64_t a, std::int64_t b) { return sgn(a + b); }

inline SGPath simulate_sg(std::int64_t n, std::int64_t z, RngStream& rng) {
  require(n >= 1, "simulate_sg: n must be >= 1");
  SGPath p;
  p.g0 = 2 * z;
  p.s.resize(n + 1);
  p.g.resize(n + 1);
  p.s[0] = 0;
  p.g[0] = p.g0;
  BitSource bits(rng);
  for (std::int64_t i = 0; i < n; ++i) {
    p.s[i + 1] = p.s[i] + bits.step();
    p.g[i + 1] = p.g[i] + edge_side(p.s[i], p.s[i + 1]);
  }
  return p;
}

/// Builds the (S, G) path of a given +-1 step sequence.
inline SGPath sg_from_steps(std::span<const int> steps, std::int64_t z) {
  SGPath p;
  p.g0 = 2 * z;
  p.s.assign(steps.size() + 1, 0);
  p.g.assign(steps.size() + 1, p.g0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    p.s[i + 1] = p.s[i] + steps[i];
    p.g[i + 1] = p.g[i] + edge_side(p.s[i], p.s[i + 1]);
  }
  return p;
}

/// Counts the events A_{2i} (S returns to 0 and G changed sign strictly since
/// the previous zero of S) and the widened events (sign product <= 0). The
/// reference for the first excursion is G_0.
inline WindingRecord count_windings_sg(const SGPath& p) {
  require(p.s.size() == p.g.size() && !p.s.empty(), "count_windings_sg: malformed path");
  WindingRecord rec;
  std::size_t last_zero = 0;
  for (std::size_t k = 2; k < p.s.size(); k += 2) {
    if (p.s[k] != 0) continue;
    const std::int64_t prod = sgn(p.g[last_zero]) * sgn(p.g[k]);
    if (prod < 0) {
      rec.start_indices.push_back(static_cast<std::int64_t>(last_zero));
      rec.completion_indices.push_back(static_cast<std::int64_t>(k));
    }
    if (prod <= 0) ++rec.widened_events;
    last_zero = k;
  }
  rec.half_windings_started = static_cast<std::int64_t>(rec.start_indices.size());
  rec.completed_windings = rec.half_windings_started / 2;
  return rec;
}

/// Exact P_{2z}(A_{2i}) and P_{2z}(A~_{2i}) by renewal over the zeros of S.
/// u[t][g] = P(S_{2t} = 0, G_{2t} = g); an excursion of length 2l has
/// probability f_l = C(2l, l) / ((2l - 1) 4^l) and moves G by +-2l.
struct EventProbability {
  double a = 0.0;
  double a_tilde = 0.0;
};

inline EventProbability exact_event_probability(std::int64_t i, std::int64_t z) {
  require(i >= 1 && i <= 4096, "exact_event_probability: i must be in [1, 4096]");
  const std::int64_t g0 = 2 * z;
  const std::int64_t reach = std::llabs(g0) + 2 * i;
  const std::int64_t width = 2 * reach + 1;
  std::vector<double> f(static_cast<std::size_t>(i + 1), 0.0);
  f[1] = 0.5;
  for (std::int64_t l = 1; l < i; ++l) f[l + 1] = f[l] * static_cast<double>(2 * l - 1) / static_cast<double>(2 * (l + 1));
  std::vector<std::vector<double>> u(static_cast<std::size_t>(i), std::vector<double>(static_cast<std::size_t>(width), 0.0));
  u[0][g0 + reach] = 1.0;
  for (std::int64_t t = 1; t < i; ++t)
    for (std::int64_t l = 1; l <= t; ++l) {
      const auto& src = u[t - l];
      auto& dst = u[t];
      const double w = 0.5 * f[l];
      for (std::int64_t x = 0; x < width; ++x) {
        if (src[x] == 0.0) continue;
        if (x + 2 * l < width) dst[x + 2 * l] += w * src[x];
        if (x - 2 * l >= 0) dst[x - 2 * l] += w * src[x];
      }
    }
  EventProbability r;
  for (std::int64_t tau = 0; tau < i; ++tau) {
    const std::int64_t l = i - tau;
    const double w = 0.5 * f[l];
    for (std::int64_t x = 0; x < width; ++x) {
      const double v = u[tau][x];
      if (v == 0.0) continue;
      const std::int64_t g = x - reach;
      for (const std::int64_t d : {2 * l, -2 * l}) {
        const int prod = sgn(g) * sgn(g + d);
        if (prod < 0) r.a += w * v;
        if (prod <= 0) r.a_tilde += w * v;
      }
    }
  }
  return r;
}

/// Event counts of the (S, G) process without storing the path.
struct SgStreamResult {
  std::vector<std::int64_t> events_at;  // #A up to each checkpoint
  std::int64_t events = 0;              // #A up to n
  std::int64_t widened_events = 0;      // #A~ up to n
  bool event_at_end = false;            // A_n occurred
};

/// Same walk and the same bit consumption as simulate_sg + count_windings_sg,
/// but whole 64-step words are applied at once while |S| > 64 (no zero and no
/// change of side can happen inside such a word).
inline SgStreamResult sg_winding_stream(std::int64_t n, std::int64_t z, RngStream& rng,
                                        std::span<const std::int64_t> checkpoints = {}) {
  require(n >= 1, "sg_winding_stream: n must be >= 1");
  SgStreamResult r;
  r.events_at.assign(checkpoints.size(), 0);
  BitSource bits(rng);
  std::int64_t s = 0, g = 2 * z, t = 0, g_ref = 2 * z;
  std::size_t next_cp = 0;
  auto flush = [&] {
    while (next_cp < checkpoints.size() && checkpoints[next_cp] <= t) r.events_at[next_cp++] = r.events;
  };
  while (t < n) {
    if (bits.aligned() && (s > 64 || s < -64) && t + 64 <= n) {
      g += 64 * sgn(s);
      s += bits.block64();
      t += 64;
      flush();
      continue;
    }
    const std::int64_t s_next = s + bits.step();
    g += edge_side(s, s_next);
    s = s_next;
    ++t;
    if (s == 0) {
      const int prod = sgn(g_ref) * sgn(g);
      if (prod < 0) ++r.events;
      if (prod <= 0) ++r.widened_events;
      if (t == n) r.event_at_end = prod < 0;
      g_ref = g;
    }
    flush();
  }
  return r;
}

/// Visits to `start` (time 0 excluded) of `replicas` independent walks of
/// `steps` steps; replica r uses rng.substream(r).
inline std::vector<std::int64_t> return_census(Model model, const Site& start, std::int64_t steps,
                                               std::int64_t replicas, const RngStream& rng, unsigned workers = 1) {
  require(model == Model::G1 || model == Model::G2, "return_census: model must be G1 or G2");
  require(steps >= 0 && replicas >= 0, "return_census: negative size");
  return run_replicas(static_cast<std::size_t>(replicas), workers, [&](std::size_t r) {
    RngStream local = rng.substream(r);
    Site site = start;
    std::int64_t visits = 0;
    for (std::int64_t i = 0; i < steps; ++i) {
      site = lattice::step(model, site, local.uniform32());
      visits += site == start;
    }
    return visits;
  });
}

/// Step indices (1-based) of the visits to `start` of one walk; for tests.
inline std::vector<std::int64_t> return_times(Model model, const Site& start, std::int64_t steps, RngStream& rng) {
  std::vector<std::int64_t> out;
  Site site = start;
  for (std::int64_t i = 1; i <= steps; ++i) {
    site = lattice::step(model, site, rng.uniform32());
    if (site == start) out.push_back(i);
  }
  return out;
}

}  // namespace revwalk::walk
