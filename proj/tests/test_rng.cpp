#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "revwalk/parallel.hpp"
#include "revwalk/rng.hpp"

using namespace revwalk;

TEST(Philox, MatchesReferenceVectors) {
  // Known-answer vectors of the Random123 reference implementation.
  auto zero = philox::philox4x32_10({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(zero[0], 0x6627e8d5u);
  EXPECT_EQ(zero[1], 0xe169c58du);
  EXPECT_EQ(zero[2], 0xbc57ac4cu);
  EXPECT_EQ(zero[3], 0x9b00dbd8u);
  auto ones = philox::philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu});
  EXPECT_EQ(ones[0], 0x408f276du);
  EXPECT_EQ(ones[1], 0x41c83b0eu);
  EXPECT_EQ(ones[2], 0xa20bc7c6u);
  EXPECT_EQ(ones[3], 0x6d5451fdu);
}

TEST(RngStream, IdenticalSeedAndStreamGiveIdenticalDraws) {
  RngStream a(123, 7), b(123, 7), c(123, 8), d(124, 7);
  bool differs_c = false, differs_d = false;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs_c |= x != c.next_u64();
    differs_d |= x != d.next_u64();
  }
  EXPECT_TRUE(differs_c);
  EXPECT_TRUE(differs_d);
}

TEST(RngStream, SubstreamsAreDistinctAndReproducible) {
  const RngStream base(5, 1);
  std::set<std::uint64_t> first;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    RngStream s = base.substream(k);
    first.insert(s.next_u64());
  }
  EXPECT_EQ(first.size(), 1000u);
  RngStream x = base.substream(17), y = base.substream(17);
  EXPECT_EQ(x.next_u64(), y.next_u64());
}

TEST(RngStream, UniformRangesAndMoments) {
  RngStream r(1, 0);
  double s = 0, s2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double v = r.uniform_open0();
    ASSERT_GT(v, 0.0);
    ASSERT_LE(v, 1.0);
    const double z = r.normal();
    s += z;
    s2 += z * z;
  }
  EXPECT_NEAR(s / n, 0.0, 4.0 / std::sqrt(n));
  EXPECT_NEAR(s2 / n, 1.0, 4.0 * std::sqrt(2.0 / n));
}

TEST(BitSource, StepsAreFairAndBlocksMatchSingleSteps) {
  RngStream a(9, 3), b(9, 3);
  BitSource bits_a(a), bits_b(b);
  for (int w = 0; w < 100; ++w) {
    ASSERT_TRUE(bits_a.aligned());
    int sum = 0;
    for (int i = 0; i < 64; ++i) sum += bits_a.step();
    EXPECT_EQ(sum, bits_b.block64());
  }
  RngStream c(2, 2);
  BitSource bits(c);
  long total = 0;
  const int n = 1 << 20;
  for (int i = 0; i < n; ++i) total += bits.step();
  EXPECT_LT(std::abs(static_cast<double>(total)), 4.0 * std::sqrt(n));
}

TEST(RunReplicas, ResultsDoNotDependOnWorkerCount) {
  const RngStream base(77, 4);
  auto draw = [&](std::size_t i) {
    RngStream s = base.substream(i);
    double acc = 0;
    for (int k = 0; k < 100; ++k) acc += s.uniform();
    return acc;
  };
  const auto one = run_replicas(257, 1, draw);
  const auto three = run_replicas(257, 3, draw);
  const auto many = run_replicas(257, 16, draw);
  EXPECT_EQ(one, three);
  EXPECT_EQ(one, many);
  EXPECT_TRUE(run_replicas(0, 4, draw).empty());
}
