#pragma once

// Exhaustive small-size checks of the combinatorial facts the walk relies on.
// Everything here is integer or rational arithmetic; a check passes only with
// exact equality or exact inequality.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "revwalk/error.hpp"
#include "revwalk/walk_sim.hpp"

namespace revwalk::enumerate {

struct OracleResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  bool pass() const { return cases > 0 && failures == 0; }
};

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline cpp_int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {

inline std::vector<int> steps_of(std::uint64_t bits, std::int64_t len) {
  std::vector<int> s(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) s[i] = ((bits >> i) & 1u) ? 1 : -1;
  return s;
}

}  // namespace detail

/// #{paths: S_n = h, S_k > 0 for 1 <= k <= n} * n == h * C(n, (n+h)/2), n <= n_max.
inline OracleResult ballot(std::int64_t n_max = 16) {
  require(n_max >= 1 && n_max <= 24, "ballot: n_max must be in [1, 24]");
  OracleResult r{"ballot"};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::vector<std::int64_t> positive(static_cast<std::size_t>(n + 1), 0);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::int64_t s = 0;
      bool ok = true;
      for (std::int64_t k = 0; k < n && ok; ++k) {
        s += ((bits >> k) & 1u) ? 1 : -1;
        ok = s > 0;
      }
      if (ok) ++positive[s];
    }
    for (std::int64_t h = 1; h <= n; ++h) {
      ++r.cases;
      const cpp_int expected = ((n + h) % 2 == 0) ? h * binomial(n, (n + h) / 2) : cpp_int(0);
      if (cpp_int(positive[h]) * n != expected) ++r.failures;
    }
  }
  return r;
}

/// Given S_{2k} = 0 and G_0 = 0, G_{2k} is uniform on {-2k, -2k+4, ..., 2k}, k <= k_max.
inline OracleResult chung_feller(std::int64_t k_max = 8) {
  require(k_max >= 1 && k_max <= 12, "chung_feller: k_max must be in [1, 12]");
  OracleResult r{"chung_feller"};
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const std::int64_t len = 2 * k;
    std::vector<std::int64_t> hist(static_cast<std::size_t>(2 * len + 1), 0);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const auto steps = detail::steps_of(bits, len);
      const walk::SGPath p = walk::sg_from_steps(steps, 0);
      if (p.s.back() != 0) continue;
      ++hist[p.g.back() + len];
    }
    const cpp_int bridges = binomial(len, k);
    for (std::int64_t g = -len; g <= len; ++g) {
      ++r.cases;
      const bool in_support = (g + len) % 4 == 0;
      const cpp_int expected = in_support ? bridges / (k + 1) : cpp_int(0);
      if (in_support && bridges % (k + 1) != 0) ++r.failures;
      if (cpp_int(hist[g + len]) != expected) ++r.failures;
    }
  }
  return r;
}

/// |(-i, i) cap (z + U_k) minus {0}| <= |[-i, i] cap U_k| with U_k = {-k, -k+2, ..., k}.
inline OracleResult cardinality_lemma(std::int64_t z_abs = 20, std::int64_t i_max = 20, std::int64_t k_max = 20) {
  OracleResult r{"cardinality_lemma"};
  for (std::int64_t z = -z_abs; z <= z_abs; ++z)
    for (std::int64_t i = 1; i <= i_max; ++i)
      for (std::int64_t k = 1; k <= k_max; ++k) {
        std::int64_t lhs = 0, rhs = 0;
        for (std::int64_t u = -k; u <= k; u += 2) {
          const std::int64_t v = z + u;
          if (v != 0 && -i < v && v < i) ++lhs;
          if (-i <= u && u <= i) ++rhs;
        }
        ++r.cases;
        if (lhs > rhs) ++r.failures;
      }
  return r;
}

/// Numbers of paths of length 2i (out of 4^i) on which A_{2i}, resp. the
/// widened event, occurs when G_0 = 2z.
struct EventCounts {
  std::int64_t paths = 0;
  std::int64_t a = 0;
  std::int64_t a_tilde = 0;
};

inline EventCounts sg_event_counts(std::int64_t i, std::int64_t z) {
  require(i >= 1 && i <= 12, "sg_event_counts: i must be in [1, 12]");
  const std::int64_t len = 2 * i;
  EventCounts c;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
    ++c.paths;
    const auto steps = detail::steps_of(bits, len);
    const walk::SGPath p = walk::sg_from_steps(steps, z);
    if (p.s[len] != 0) continue;
    std::int64_t tau = 0;
    for (std::int64_t t = len - 2; t > 0; t -= 2)
      if (p.s[t] == 0) {
        tau = t;
        break;
      }
    const std::int64_t prod = walk::sgn(p.g[tau]) * walk::sgn(p.g[len]);
    c.a += prod < 0;
    c.a_tilde += prod <= 0;
  }
  return c;
}

/// P_{2z}(A_{2i}) <= P_0(A~_{2i}) for 1 <= i <= i_max and |z| <= z_abs.
inline OracleResult almost_optimality(std::int64_t i_max = 8, std::int64_t z_abs = 8) {
  OracleResult r{"almost_optimality"};
  for (std::int64_t i = 1; i <= i_max; ++i) {
    const EventCounts widened = sg_event_counts(i, 0);
    for (std::int64_t z = -z_abs; z <= z_abs; ++z) {
      ++r.cases;
      if (sg_event_counts(i, z).a > widened.a_tilde) ++r.failures;
    }
  }
  return r;
}

/// Exact P(G_{p,m} = k) = C(m+k-1, k) p^m (1-p)^k.
inline cpp_rational neg_binomial_exact(std::int64_t m, const cpp_rational& p, std::int64_t k) {
  cpp_rational v = cpp_rational(binomial(m + k - 1, k));
  for (std::int64_t i = 0; i < m; ++i) v *= p;
  for (std::int64_t i = 0; i < k; ++i) v *= (1 - p);
  return v;
}

/// P(G_{2/3,n} = l) = (n/l) P(G_{1/3,l} = n) for 1 <= n, l <= bound.
inline OracleResult negative_binomial_identity(std::int64_t bound = 50) {
  OracleResult r{"negative_binomial_identity"};
  const cpp_rational two_thirds(2, 3), third(1, 3);
  for (std::int64_t n = 1; n <= bound; ++n)
    for (std::int64_t l = 1; l <= bound; ++l) {
      ++r.cases;
      const cpp_rational lhs = neg_binomial_exact(n, two_thirds, l);
      const cpp_rational rhs = cpp_rational(n, l) * neg_binomial_exact(l, third, n);
      if (lhs != rhs) ++r.failures;
    }
  return r;
}

inline std::vector<OracleResult> all_oracles() {
  return {ballot(), chung_feller(), cardinality_lemma(), almost_optimality(), negative_binomial_identity()};
}

}  // namespace revwalk::enumerate
