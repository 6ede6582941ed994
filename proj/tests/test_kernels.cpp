#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "revwalk/kernels.hpp"
#include "revwalk/ladder_law.hpp"

using namespace revwalk;

namespace {

const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;  // 0.618...

// Exact law of V_1 under P_m by propagating the G2 walk step by step from
// (-m, 0) until the column x = 0 is reached: an oracle independent of the
// negative binomial series.
std::vector<double> v1_law_by_propagation(std::int64_t m, std::int64_t y_max, double leftover) {
  std::vector<std::vector<double>> cur(m, std::vector<double>(y_max + 2, 0.0)), nxt = cur;
  std::vector<double> law(y_max + 2, 0.0);
  cur[0][0] = 1.0;  // column index c = x + m
  double alive = 1.0;
  while (alive > leftover) {
    for (auto& col : nxt) std::fill(col.begin(), col.end(), 0.0);
    for (std::int64_t c = 0; c < m; ++c)
      for (std::int64_t y = 0; y <= y_max; ++y) {
        const double w = cur[c][y];
        if (w == 0.0) continue;
        if (y == 0) {
          nxt[c][1] += w;
          continue;
        }
        nxt[c][y + 1] += w / 3.0;
        nxt[c][y - 1] += w / 3.0;
        if (c + 1 == m) law[y] += w / 3.0;
        else nxt[c + 1][y] += w / 3.0;
      }
    std::swap(cur, nxt);
    alive = 0.0;
    for (const auto& col : cur)
      for (double v : col) alive += v;
  }
  return law;
}

// Exact law of H_1 under P_h on l in [0, l_max], propagating the walk from
// (0, h) in the upper half plane until it hits the axis.
std::vector<double> h1_from_height_by_propagation(std::int64_t h, std::int64_t l_max, std::int64_t y_max) {
  std::vector<std::vector<double>> cur(l_max + 1, std::vector<double>(y_max + 2, 0.0)), nxt = cur;
  std::vector<double> law(l_max + 1, 0.0);
  cur[0][h] = 1.0;
  for (int it = 0; it < 20000; ++it) {
    for (auto& col : nxt) std::fill(col.begin(), col.end(), 0.0);
    for (std::int64_t l = 0; l <= l_max; ++l)
      for (std::int64_t y = 1; y <= y_max; ++y) {
        const double w = cur[l][y];
        if (w == 0.0) continue;
        nxt[l][y + 1] += w / 3.0;
        if (y - 1 == 0) law[l] += w / 3.0;
        else nxt[l][y - 1] += w / 3.0;
        if (l < l_max) nxt[l + 1][y] += w / 3.0;
      }
    std::swap(cur, nxt);
  }
  return law;
}

}  // namespace

TEST(SrwPointMass, Examples) {
  EXPECT_DOUBLE_EQ(srw_point_mass(2, 0), 0.5);
  EXPECT_DOUBLE_EQ(srw_point_mass(3, 1), 3.0 / 8.0);
  EXPECT_EQ(srw_point_mass(2, 1), 0.0);
  EXPECT_EQ(srw_point_mass(3, 5), 0.0);
}

TEST(NegBinomialPmf, Examples) {
  EXPECT_NEAR(neg_binomial_pmf(1, 1.0 / 3.0, 0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(neg_binomial_pmf(2, 2.0 / 3.0, 1), 8.0 / 27.0, 1e-15);
}

TEST(NegBinomialPmf, ReciprocityIdentityInDoubles) {
  for (std::int64_t n = 1; n <= 50; ++n)
    for (std::int64_t l = 1; l <= 50; ++l) {
      const double lhs = neg_binomial_pmf(n, 2.0 / 3.0, l);
      const double rhs = static_cast<double>(n) / static_cast<double>(l) * neg_binomial_pmf(l, 1.0 / 3.0, n);
      EXPECT_NEAR(lhs, rhs, 1e-13 * std::max(lhs, 1e-300)) << n << "," << l;
    }
}

TEST(NegBinomialWindow, DiscardedMassIsCertified) {
  for (std::int64_t m : {1, 10, 400}) {
    const NbWindow w = neg_binomial_window(m, 1.0 / 3.0, 1e-12);
    double outside = 0.0;
    for (std::int64_t k = 0; k < w.lo; ++k) outside += neg_binomial_pmf(m, 1.0 / 3.0, k);
    double inside = 0.0;
    for (std::int64_t k = w.lo; k <= w.hi; ++k) inside += neg_binomial_pmf(m, 1.0 / 3.0, k);
    outside += std::max(0.0, 1.0 - inside - outside);
    EXPECT_LE(outside, w.discarded + 1e-14);
    EXPECT_LE(w.discarded, 1e-12);
  }
}

TEST(PKernel, ZeroHeightByConvention) {
  for (std::int64_t m : {1, 7, 100}) EXPECT_EQ(p_mh(m, 0, 1e-10).value, 0.0);
}

TEST(PKernel, SmallCaseBounds) {
  const auto p11 = p_mh(1, 1, 1e-12);
  EXPECT_GE(p11.value, 14.0 / 27.0);
  EXPECT_LE(p11.error, 1e-12);
  // First-step analysis at height 1: a = 1/3 + a/3 + (r/3) a with r = q_{1,0},
  // so a = 1 / (2 - r), the inverse golden ratio.
  EXPECT_NEAR(p11.value, kGolden, 1e-12);
}

TEST(PKernel, RowNormalisedAndMatchesPropagation) {
  const TruncatedPmf row100 = p_row(100, 1e-10);
  EXPECT_TRUE(row100.satisfies_invariant());
  EXPECT_NEAR(row100.total(), 1.0, 1e-10 + row100.tail_bound);
  for (std::int64_t m : {1, 3, 8}) {
    const auto oracle = v1_law_by_propagation(m, 400, 1e-15);
    const TruncatedPmf row = p_row(m, 1e-12);
    EXPECT_TRUE(row.satisfies_invariant());
    for (std::int64_t h = 1; h <= 40; ++h) EXPECT_NEAR(row.at(h), oracle[h], 1e-12) << "m=" << m << " h=" << h;
  }
}

TEST(PKernel, SingleValuesAgreeWithRow) {
  const TruncatedPmf row = p_row(50, 1e-11);
  for (std::int64_t h : {1, 5, 20, 40}) EXPECT_NEAR(p_mh(50, h, 1e-11).value, row.at(h), 1e-11);
}

TEST(PKernel, LeadingTermErrorScalesLikeInverseM) {
  auto max_err = [](std::int64_t m) {
    double e = 0;
    for (std::int64_t h = 1; h <= 4 * static_cast<std::int64_t>(std::sqrt(m)); ++h) {
      const double lead = std::exp(-static_cast<double>(h * h) / (4.0 * m)) / std::sqrt(std::numbers::pi * m);
      e = std::max(e, std::abs(p_mh(m, h, 1e-12).value - lead));
    }
    return e;
  };
  const double c100 = 100 * max_err(100), c400 = 400 * max_err(400);
  EXPECT_GT(c100 / c400, 0.5);
  EXPECT_LT(c100 / c400, 2.0);
  const double shrink = max_err(100) / max_err(400);
  EXPECT_GE(shrink, 2.5);
  EXPECT_LE(shrink, 6.0);
}

TEST(QKernel, ClosedFormAtOrigin) {
  const auto q10 = q_hl(1, 0, 1e-12);
  EXPECT_NEAR(q10.value, (3.0 - std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_GE(q10.value, 1.0 / 3.0 + 1.0 / 27.0 + 2.0 / 243.0);
}

TEST(QKernel, RowsNormalised) {
  for (std::int64_t h : {1, 5, 20}) {
    const TruncatedPmf row = q_row(h, 2000, 1e-10);
    EXPECT_TRUE(row.satisfies_invariant()) << h;
    // The listed range carries all but the Levy tail ~ h / sqrt(pi l_max).
    EXPECT_GT(row.total(), 1.0 - 2.0 * h / std::sqrt(std::numbers::pi * 2000.0));
  }
}

TEST(QKernel, MatchesPropagation) {
  const auto oracle = h1_from_height_by_propagation(2, 12, 600);
  for (std::int64_t l = 0; l <= 12; ++l) EXPECT_NEAR(q_hl(2, l, 1e-12).value, oracle[l], 1e-11) << l;
}

TEST(QKernel, LevyLeadingTerm) {
  const double h = 50, l = 625;
  const double lead = h / (2.0 * std::sqrt(std::numbers::pi) * std::pow(l, 1.5)) * std::exp(-h * h / (4.0 * l));
  EXPECT_NEAR(ladder::levy_profile(h, l), lead, 1e-18);
  EXPECT_LE(std::abs(q_hl(50, 625, 1e-12).value - lead), h / (l * l));
}

TEST(QKernel, SeriesAgreesWithConvolutionPowers) {
  const auto row = ladder::q_power(16, 4096);
  for (std::int64_t l : {0, 1, 10, 50, 256, 1000, 4000}) EXPECT_NEAR(q_hl(16, l, 1e-12).value, row.mass[l], 2e-12) << l;
  const auto q1 = ladder::q1_closed_form(64);
  for (std::int64_t l = 0; l < 64; ++l) EXPECT_NEAR(q_hl(1, l, 1e-12).value, q1[l], 1e-12) << l;
}

TEST(Kernels, ToleranceErrors) {
  EXPECT_THROW(p_mh(10, 3, 0.0), DomainError);
  EXPECT_THROW(q_hl(10, 3, -1.0), DomainError);
  EXPECT_THROW(p_row(10, 0.0), DomainError);
  EXPECT_THROW(p_mh(10, 3, 1e-300), CertificationError);
  EXPECT_THROW(q_hl(10, 3, 1e-300), CertificationError);
}
