#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "revwalk/continuous.hpp"

using namespace revwalk;
namespace cont = revwalk::continuous;

TEST(LogEta, MomentsAndSymmetry) {
  RngStream rng(1, 100);
  const int n = 1000000;
  double s = 0, s2 = 0;
  std::vector<double> etas;
  etas.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double v = cont::sample_log_eta(rng);
    s += v;
    s2 += v * v;
    etas.push_back(std::exp(v));
  }
  const double mean = s / n, var = s2 / n - mean * mean;
  EXPECT_NEAR(mean, 0.0, 3.0 * std::sqrt(var / n));
  EXPECT_NEAR(var / cont::kLogEtaVariance, 1.0, 0.02);
  std::nth_element(etas.begin(), etas.begin() + n / 2, etas.end());
  EXPECT_NEAR(etas[n / 2], 1.0, 0.01);
  for (int i = 0; i < 1000; ++i) EXPECT_GT(cont::sample_eta(rng), 0.0);
}

TEST(LadderPathB, ForcedUnitIncrementsGiveConstantPath) {
  const auto p = cont::ladder_path_from_increments(3.5, std::vector<double>(20, 0.0));
  for (double h : p.heights) EXPECT_DOUBLE_EQ(h, 3.5);
  EXPECT_EQ(p.windings(), 10);
}

TEST(LadderPathB, EndpointVarianceGrowsLinearly) {
  const RngStream base(2, 1);
  const int paths = 20000, n = 500;
  double s = 0, s2 = 0;
  for (int r = 0; r < paths; ++r) {
    RngStream rng = base.substream(r);
    const auto p = cont::ladder_path_b(2.0, n, rng);
    const double d = p.log_heights.back() - std::log(2.0);
    s += d;
    s2 += d * d;
  }
  const double mean = s / paths, var = s2 / paths - mean * mean;
  EXPECT_NEAR(mean, 0.0, 3.0 * std::sqrt(var / paths));
  EXPECT_NEAR(var / (2.0 * n * cont::kLogEtaVariance), 1.0, 0.03);
}

TEST(WindingClock, SandwichOnEveryPath) {
  const RngStream base(3, 1);
  for (int r = 0; r < 500; ++r) {
    RngStream rng = base.substream(r);
    ASSERT_TRUE(cont::winding_clock(cont::ladder_path_b(1.0, 300, rng)).sandwich_holds()) << r;
  }
}

TEST(WindingCounts, SmallTimesAndTinyThreshold) {
  RngStream rng(4, 1);
  const auto p = cont::ladder_path_b(1.0, 4000, rng);
  const auto clock = cont::winding_clock(p);
  const double t1 = std::exp(clock.log_t_completion[0]);
  EXPECT_EQ(cont::winding_counts(p, 0.5 * t1, 1.0).n_t, 0);
  const double log_t = clock.log_t_completion[10] + 1e-9;
  const auto c = cont::winding_counts_log(p, log_t, 1e-300);
  EXPECT_EQ(c.n_t, 11);
  EXPECT_DOUBLE_EQ(c.n_b, static_cast<double>(c.n_t));
  const auto big = cont::winding_counts_log(p, log_t, 1.0);
  EXPECT_LE(big.n_b, static_cast<double>(big.n_t));
  EXPECT_THROW(cont::winding_counts_log(p, 1e6, 1.0), InsufficientPathError);
}

TEST(WindingCounts, StreamAgreesWithStoredPath) {
  const RngStream base(5, 1);
  for (int r = 0; r < 50; ++r) {
    RngStream a = base.substream(r), b = base.substream(r);
    const auto streamed = cont::stream_winding(1.0, 12.0, 1.0, a, 200000);
    if (streamed.censored_t || streamed.censored_star) continue;
    const auto path = cont::ladder_path_b(1.0, streamed.windings_used, b);
    const auto c = cont::winding_counts_log(path, 12.0, 1.0);
    EXPECT_EQ(c.n_t, streamed.counts.n_t);
    EXPECT_EQ(c.n_star, streamed.counts.n_star);
    EXPECT_DOUBLE_EQ(c.n_b, streamed.counts.n_b);
  }
}

TEST(WindingCounts, StarAndPlainCountsMerge) {
  auto gap = [](double log_t, std::uint64_t stream) {
    const RngStream base(6, stream);
    double s = 0;
    int used = 0;
    for (int r = 0; r < 1000; ++r) {
      RngStream rng = base.substream(r);
      const auto w = cont::stream_winding(1.0, log_t, 1.0, rng, 2000000);
      if (w.censored_t || w.censored_star) continue;
      s += std::abs(static_cast<double>(w.counts.n_t - w.counts.n_star)) / (log_t * log_t);
      ++used;
    }
    return s / used;
  };
  EXPECT_LT(gap(50.0, 2), gap(25.0, 1));
}

TEST(LevyCdf, Values) {
  EXPECT_NEAR(cont::levy_cdf(1.0), 0.31731050786291415, 1e-14);
  EXPECT_NEAR(cont::levy_cdf(2.198109338), 0.5, 1e-8);
  EXPECT_LT(cont::levy_cdf(1e-3), 1e-100);
  EXPECT_GT(cont::levy_cdf(1e12), 1.0 - 1e-5);
  EXPECT_THROW(cont::levy_cdf(0.0), DomainError);
}

TEST(Occupation, PositiveMeanOneAndLaplace) {
  const RngStream base(7, 1);
  const int n = 100000;
  double s = 0, s2 = 0, l = 0, l2 = 0;
  for (int r = 0; r < n; ++r) {
    RngStream rng = base.substream(r);
    const double v = cont::sample_occupation_t1(rng, 1000).value;
    ASSERT_GT(v, 0.0);
    s += v;
    s2 += v * v;
    l += std::exp(-v);
    l2 += std::exp(-2 * v);
  }
  const double mean = s / n, se = std::sqrt((s2 / n - mean * mean) / n);
  EXPECT_NEAR(mean, 1.0, 3.0 * se);
  const double lap = l / n, lse = std::sqrt((l2 / n - lap * lap) / n);
  EXPECT_NEAR(lap, 1.0 / std::cosh(std::sqrt(2.0)), 3.0 * lse);
  RngStream rng(7, 2);
  EXPECT_THROW(cont::sample_occupation_t1(rng, 10), DomainError);
}
