#pragma once

// The three oriented lattices and their one-step laws.
//
// G1: vertical edges everywhere; horizontal edges point right on and above
//     the x-axis and left below it.
// G2: as G1 off the axis. Axis sites only step vertically: up for x < 0,
//     down for x > 0, either way (1/2 each) at the origin.
// G2Prime: the axis is removed. Horizontal steps always go right, and a
//     vertical step from ordinate +-1 towards the axis jumps over it.

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "revwalk/error.hpp"

namespace revwalk::lattice {

struct Site {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend constexpr auto operator<=>(const Site&, const Site&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Site& s) { return os << '(' << s.x << ',' << s.y << ')'; }

enum class Model { G1, G2, G2Prime };

inline std::string_view to_string(Model m) {
  switch (m) {
    case Model::G1: return "g1";
    case Model::G2: return "g2";
    case Model::G2Prime: return "g2prime";
  }
  return "?";
}

struct Displacement {
  int dx = 0;
  int dy = 0;
  friend constexpr bool operator==(const Displacement&, const Displacement&) = default;
};

using Probability = boost::rational<std::int64_t>;

struct Edge {
  Displacement d;
  Probability p;
};

/// Out-edges in declared sampling order: up, down, horizontal.
struct StepDistribution {
  std::vector<Edge> edges;

  Probability total() const {
    Probability s{0};
    for (const auto& e : edges) s += e.p;
    return s;
  }

  /// Probability of `d`, zero when it is not an out-edge.
  Probability probability_of(Displacement d) const {
    for (const auto& e : edges)
      if (e.d == d) return e.p;
    return Probability{0};
  }

  std::size_t degree() const { return edges.size(); }
};

namespace detail {

inline void check_site(Model model, const Site& s) {
  if (model == Model::G2Prime && s.y == 0) throw DomainError("G2Prime has no vertices on the x-axis");
}

inline int horizontal_dx(Model model, const Site& s) {
  if (model == Model::G2Prime) return 1;
  return s.y >= 0 ? 1 : -1;
}

inline int up_dy(Model model, const Site& s) { return (model == Model::G2Prime && s.y == -1) ? 2 : 1; }
inline int down_dy(Model model, const Site& s) { return (model == Model::G2Prime && s.y == 1) ? -2 : -1; }

}  // namespace detail

inline StepDistribution out_edges(Model model, const Site& site) {
  detail::check_site(model, site);
  const Probability third{1, 3};
  if (model == Model::G2 && site.y == 0) {
    if (site.x < 0) return {{{{0, 1}, Probability{1}}}};
    if (site.x > 0) return {{{{0, -1}, Probability{1}}}};
    return {{{{0, 1}, Probability{1, 2}}, {{0, -1}, Probability{1, 2}}}};
  }
  return {{{{0, detail::up_dy(model, site)}, third},
           {{0, detail::down_dy(model, site)}, third},
           {{detail::horizontal_dx(model, site), 0}, third}}};
}

/// Samples one step by cumulative probability in declared order; `u` in [0,1).
inline Site step(Model model, const Site& site, double u) {
  detail::check_site(model, site);
  if (model == Model::G2 && site.y == 0) {
    if (site.x < 0) return {site.x, 1};
    if (site.x > 0) return {site.x, -1};
    return {0, u < 0.5 ? 1 : -1};
  }
  if (u < 1.0 / 3.0) return {site.x, site.y + detail::up_dy(model, site)};
  if (u < 2.0 / 3.0) return {site.x, site.y + detail::down_dy(model, site)};
  return {site.x + detail::horizontal_dx(model, site), site.y};
}

inline Model parse_model(std::string_view name) {
  if (name == "g1") return Model::G1;
  if (name == "g2") return Model::G2;
  if (name == "g2prime") return Model::G2Prime;
  throw DomainError("unknown lattice model: " + std::string(name));
}

}  // namespace revwalk::lattice
