#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "revwalk/kernels.hpp"
#include "revwalk/ladder_law.hpp"
#include "revwalk/numerics.hpp"

using namespace revwalk;

TEST(Q1ClosedForm, NormalisesToLevyTail) {
  const auto q1 = ladder::q1_closed_form(1 << 16);
  KahanSum s;
  for (double v : q1) {
    ASSERT_GE(v, 0.0);
    s += v;
  }
  // Missing mass beyond L is ~ 1/sqrt(pi L).
  const double missing = 1.0 - s.value();
  EXPECT_NEAR(missing, 1.0 / std::sqrt(std::numbers::pi * (1 << 16)), 2e-5);
}

TEST(QPower, MassesNonNegativeWithSmallError) {
  const auto row = ladder::q_power(37, 1 << 12);
  EXPECT_LT(row.numeric_error, 1e-10);
  for (double v : row.mass) EXPECT_GE(v, -1e-14);
}

TEST(H1Law, NormalisedWithPositiveMassAtOrigin) {
  for (std::int64_t m : {1, 16, 32}) {
    const TruncatedPmf law = ladder::h1_law(m, 1 << 14, 1e-9);
    EXPECT_TRUE(law.satisfies_invariant(1e-9)) << m;
    EXPECT_GT(law.at(0), 0.0);
    // Mixture check at l = 0: P_m(H_1 = 0) = sum_h p_{m,h} q_{h,0}.
    const TruncatedPmf p = p_row(m, 1e-12);
    double mix = 0.0;
    for (std::int64_t h = 1; h <= p.support_hi; ++h) mix += p.at(h) * std::pow(q_hl(1, 0, 1e-12).value, h);
    EXPECT_NEAR(law.at(0), mix, 1e-10);
  }
}

TEST(H1Law, RejectsBadArguments) {
  EXPECT_THROW(ladder::h1_law(4, 100, 0.0), DomainError);
  EXPECT_THROW(ladder::h1_law(4, 100, 1e-300), CertificationError);
}

TEST(ReferenceIntegrals, ClosedForms) {
  for (double m : {3.0, 64.0, 1024.0, 1e6}) {
    const auto r = ladder::reference_integral_f(m);
    EXPECT_NEAR(r.value, 0.5 * std::log(m) - 0.5 * kEulerGamma, 1e-10) << m;
  }
  for (double h : {1.0, 8.0, 128.0, 1e4}) {
    const auto r = ladder::reference_integral_g(h);
    EXPECT_NEAR(r.value, 2.0 * std::log(h) + kEulerGamma, 1e-10) << h;
  }
}

TEST(ErrorSplits, PartsAddUpAndMagnitudesDecay) {
  double prev_f = 1e300, prev_g = 1e300;
  for (std::int64_t m : {64, 256, 1024}) {
    const auto e = ladder::rf(m);
    EXPECT_NEAR(e.parts[0] + e.parts[1] + e.parts[2] + e.parts[3], e.value, 1e-9);
    EXPECT_NEAR(e.sum - e.integral, e.value, 1e-12);
    EXPECT_LT(std::abs(e.value), prev_f);
    prev_f = std::abs(e.value);
  }
  for (std::int64_t h : {8, 32, 128}) {
    const auto e = ladder::rg(h);
    EXPECT_NEAR(e.parts[0] + e.parts[1] + e.parts[2] + e.parts[3], e.value, 1e-9);
    EXPECT_LT(std::abs(e.value), prev_g);
    prev_g = std::abs(e.value);
  }
}

class DriftTable : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    reports_ = new std::vector<ladder::DriftReport>(ladder::drift_reports({16, 32, 64, 256}, 0.1, 1e-10));
  }
  static void TearDownTestSuite() { delete reports_; }
  static const ladder::DriftReport& at(std::size_t i) { return (*reports_)[i]; }
  static std::vector<ladder::DriftReport>* reports_;
};
std::vector<ladder::DriftReport>* DriftTable::reports_ = nullptr;

TEST_F(DriftTable, DriftNegative) {
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LT(at(i).drift, 0.0) << at(i).m;
}

TEST_F(DriftTable, LogMeanApproachesLogM) {
  // Indices 0, 2, 3 are m = 16, 64, 256.
  const double d16 = std::abs(at(0).e_log_h1 - std::log(16.0));
  const double d64 = std::abs(at(2).e_log_h1 - std::log(64.0));
  const double d256 = std::abs(at(3).e_log_h1 - std::log(256.0));
  EXPECT_LT(d64, d16);
  EXPECT_LT(d256, d64);
}

TEST_F(DriftTable, Eps3DecreasesAndEps2Floor) {
  EXPECT_LT(at(1).eps3, at(0).eps3);
  EXPECT_LT(at(2).eps3, at(1).eps3);
  EXPECT_GE(at(2).eps2, 0.005);
  EXPECT_GE(at(3).eps2, 0.005);
}

TEST_F(DriftTable, JsonFieldOrder) {
  const auto j = ladder::to_json(at(0));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> want = {"m", "e_log_h1", "e_sqrt_log_h1", "eps1", "eps2", "eps3", "drift", "delta", "tol"};
  EXPECT_EQ(keys, want);
}

TEST(DriftReport, RejectsBadArguments) {
  EXPECT_THROW(ladder::drift_report(2), DomainError);
  EXPECT_THROW(ladder::drift_report(16, 0.1, 0.0), DomainError);
}
