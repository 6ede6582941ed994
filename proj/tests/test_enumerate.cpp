#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "revwalk/enumerate.hpp"
#include "revwalk/walk_sim.hpp"

using namespace revwalk;

TEST(Oracles, AllExactChecksPass) {
  for (const auto& o : enumerate::all_oracles()) {
    EXPECT_GT(o.cases, 0) << o.name;
    EXPECT_EQ(o.failures, 0) << o.name;
  }
}

TEST(Oracles, CaseCountsCoverTheStatedRanges) {
  EXPECT_EQ(enumerate::ballot(16).cases, 136);  // sum_{n <= 16} n
  EXPECT_EQ(enumerate::cardinality_lemma(20, 20, 20).cases, 41 * 20 * 20);
  EXPECT_EQ(enumerate::almost_optimality(8, 8).cases, 8 * 17);
  EXPECT_EQ(enumerate::negative_binomial_identity(50).cases, 50 * 50);
}

TEST(Oracles, ExactNegativeBinomial) {
  using enumerate::cpp_rational;
  EXPECT_EQ(enumerate::neg_binomial_exact(2, cpp_rational(2, 3), 1), cpp_rational(8, 27));
  EXPECT_EQ(enumerate::neg_binomial_exact(1, cpp_rational(1, 3), 0), cpp_rational(1, 3));
  EXPECT_EQ(enumerate::binomial(10, 3), 120);
}

TEST(Oracles, ChungFellerSmallCase) {
  // k = 1: among the four two-step paths, the two bridges end at G_2 = 2 and G_2 = -2.
  std::map<std::int64_t, int> law;
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      const std::vector<int> steps = {a, b};
      const auto p = walk::sg_from_steps(steps, 0);
      if (p.s.back() == 0) ++law[p.g.back()];
    }
  EXPECT_EQ(law, (std::map<std::int64_t, int>{{-2, 1}, {2, 1}}));
}
