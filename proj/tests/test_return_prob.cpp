#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <map>

#include "revwalk/enumerate.hpp"
#include "revwalk/return_prob.hpp"

using namespace revwalk;

TEST(BridgeDP, SingleStepExample) {
  const auto dp = bridge_occupation_dp(1);
  ASSERT_EQ(dp.joint.size(), 3u);
  EXPECT_EQ(dp.joint[0], 0.0);
  EXPECT_EQ(dp.joint[1], 0.25);
  EXPECT_EQ(dp.joint[2], 0.25);
}

TEST(BridgeDP, MatchesEnumeration) {
  for (std::int64_t n = 1; n <= 6; ++n) {
    std::map<std::int64_t, std::int64_t> counts;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * n)); ++bits) {
      std::int64_t s = 0, nonneg = 0;
      for (std::int64_t j = 0; j < 2 * n; ++j) {
        nonneg += s >= 0;
        s += (bits >> j) & 1 ? 1 : -1;
      }
      if (s == 0) ++counts[nonneg];
    }
    const auto dp = bridge_occupation_dp(n);
    for (std::int64_t k = 0; k <= 2 * n; ++k) {
      const std::int64_t want = counts.count(k) ? counts[k] : 0;
      EXPECT_EQ(static_cast<std::int64_t>(dp.counts[k]), want) << "n=" << n << " k=" << k;
    }
  }
}

TEST(BridgeDP, ExactNormalisation) {
  const auto all = bridge_occupation_all(kBridgeExactCap);
  for (const auto& dp : all) {
    uint128 total = 0;
    for (auto c : dp.counts) total += c;
    const auto want = enumerate::binomial(2 * dp.n, dp.n);
    EXPECT_EQ(boost::multiprecision::cpp_int(static_cast<std::uint64_t>(total >> 64)) << 64 |
                  boost::multiprecision::cpp_int(static_cast<std::uint64_t>(total)),
              want)
        << dp.n;
  }
}

TEST(XiDifference, Examples) {
  for (std::int64_t k : {1, 2, 5}) EXPECT_NEAR(xi_difference_at_zero(k, 0), std::pow(2.0 / 3.0, k), 1e-15);
  EXPECT_NEAR(xi_difference_at_zero(1, 1), 0.5, 1e-15);
  for (std::int64_t k = 1; k <= 8; ++k)
    for (std::int64_t j = 1; j <= 8; ++j) EXPECT_NEAR(xi_difference_at_zero(k, j), xi_difference_at_zero(j, k), 1e-15);
}

TEST(ReturnProb, MatchesBruteForce) {
  for (std::int64_t n = 1; n <= 6; ++n) EXPECT_NEAR(return_prob_g1(n).exact, return_prob_g1_bruteforce(n), 1e-12) << n;
  EXPECT_NEAR(return_prob_g1(1).exact, 17.0 / 72.0, 1e-15);
}

TEST(ReturnProb, LocalLimitTrend) {
  const auto t = return_prob_g1_all(128);
  EXPECT_GE(t[63].ratio, 0.9);
  EXPECT_LE(t[63].ratio, 1.1);
  EXPECT_LT(std::abs(t[63].ratio - 1.0), std::abs(t[15].ratio - 1.0));
  EXPECT_GE(t[127].ratio, 0.85);
  EXPECT_LE(t[127].ratio, 1.15);
}

TEST(ReturnProb, Asymptote) { EXPECT_NEAR(return_prob_asymptote(100), 2.8209479177387814e-4, 1e-15); }

TEST(ReturnProb, SummabilityDiagnostic) {
  const auto t = return_prob_g1_all(kBridgeCap);
  double s = 0.0;
  for (const auto& r : t) s += r.exact;
  // Tail beyond the cap from the asymptote: sum_{n > N} n^{-3/2} / (2 sqrt(pi)) ~ 1 / sqrt(pi N).
  const double tail = 1.0 / std::sqrt(std::numbers::pi * kBridgeCap);
  EXPECT_LT(s + tail, 1.0);
}

TEST(ReturnProb, RejectsBadArguments) {
  EXPECT_THROW(return_prob_g1(4, 0.0), DomainError);
  EXPECT_THROW(bridge_occupation_dp(kBridgeCap + 1), DomainError);
}
