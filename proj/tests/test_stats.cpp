#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "revwalk/stats.hpp"

using namespace revwalk;

namespace {

std::vector<double> uniforms(std::uint64_t seed, int n) {
  RngStream r(seed, 0);
  std::vector<double> v(n);
  for (double& x : v) x = r.uniform();
  return v;
}

double uniform_cdf(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

TEST(Ecdf, StepValues) {
  stats::Ecdf e({3.0, 1.0, 2.0, 2.0});
  EXPECT_EQ(e(0.5), 0.0);
  EXPECT_EQ(e(1.0), 0.25);
  EXPECT_EQ(e(2.0), 0.75);
  EXPECT_EQ(e.left(2.0), 0.25);
  EXPECT_EQ(e(10.0), 1.0);
}

TEST(Ecdf, RefusesCensoredValues) {
  EXPECT_THROW(stats::Ecdf::from_flagged({1.0, 2.0}, {false, true}), CensoredInputError);
  EXPECT_NO_THROW(stats::Ecdf::from_flagged({1.0, 2.0}, {false, false}));
}

TEST(KsDistance, Examples) {
  EXPECT_LT(stats::ks_distance(stats::Ecdf(uniforms(1, 10000)), uniform_cdf), 0.02);
  EXPECT_DOUBLE_EQ(stats::ks_distance(stats::Ecdf({0.5}), uniform_cdf), 0.5);
  EXPECT_DOUBLE_EQ(stats::ks_distance(stats::Ecdf({2.0, 2.0, 2.0}), [](double x) { return x >= 2.0 ? 1.0 : 0.0; }), 0.0);
}

TEST(KsDistance, InvariantUnderMonotoneTransform) {
  const auto u = uniforms(2, 500);
  std::vector<double> t(u.size());
  std::transform(u.begin(), u.end(), t.begin(), [](double x) { return std::exp(3.0 * x); });
  const double d1 = stats::ks_distance(stats::Ecdf(u), uniform_cdf);
  const double d2 = stats::ks_distance(stats::Ecdf(t), [](double y) { return uniform_cdf(std::log(y) / 3.0); });
  EXPECT_NEAR(d1, d2, 1e-12);
}

TEST(TwoSampleKs, Examples) {
  const auto a = uniforms(3, 10000), b = uniforms(4, 10000);
  EXPECT_EQ(stats::two_sample_ks(stats::Ecdf(a), stats::Ecdf(a)), 0.0);
  EXPECT_EQ(stats::two_sample_ks(stats::Ecdf({1.0, 2.0}), stats::Ecdf({3.0, 4.0})), 1.0);
  EXPECT_LT(stats::two_sample_ks(stats::Ecdf(a), stats::Ecdf(b)), 0.03);
}

TEST(CensoredKs, ReducesToPlainWithoutCensoring) {
  const auto u = uniforms(5, 2000);
  stats::CensoredSample s;
  s.exact = u;
  EXPECT_NEAR(stats::ks_censored_upper(s, uniform_cdf), stats::ks_distance(stats::Ecdf(u), uniform_cdf), 1e-12);
  // Censoring can only widen the bound.
  stats::CensoredSample c = s;
  for (int i = 0; i < 100; ++i) {
    c.censor_points.push_back(c.exact.back());
    c.exact.pop_back();
  }
  EXPECT_GE(stats::ks_censored_upper(c, uniform_cdf) + 1e-12, stats::ks_censored_upper(s, uniform_cdf));
}

TEST(SlopeFit, Examples) {
  std::vector<std::pair<double, double>> line = {{0, 1}, {1, 3.5}, {2, 6}, {5, 13.5}};
  const auto f = stats::slope_fit(line);
  EXPECT_NEAR(f.slope, 2.5, 1e-12);
  EXPECT_NEAR(f.intercept, 1.0, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  std::vector<std::pair<double, double>> logs;
  for (double n : {1e3, 1e4, 1e5, 1e6}) logs.emplace_back(std::log(n), std::log(n) / (2 * std::numbers::pi));
  EXPECT_NEAR(stats::slope_fit(logs).slope, 1.0 / (2 * std::numbers::pi), 1e-12);
  std::vector<std::pair<double, double>> two = {{0, 0}, {1, 1}};
  EXPECT_THROW(stats::slope_fit(two), DomainError);
}

TEST(Bootstrap, CoversMeanAndIsWorkerIndependent) {
  const auto u = uniforms(6, 2000);
  auto mean = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  const RngStream rng(6, 1);
  const auto a = stats::bootstrap_ci(u, mean, rng, 1000, 0.95, 1);
  const auto b = stats::bootstrap_ci(u, mean, rng, 1000, 0.95, 4);
  EXPECT_EQ(a.lo, b.lo);
  EXPECT_EQ(a.hi, b.hi);
  EXPECT_LT(a.lo, 0.5);
  EXPECT_GT(a.hi, 0.5);
}

TEST(ChiSquare, FairDieAndPooling) {
  const std::vector<double> p(6, 1.0 / 6.0);
  const auto ok = stats::chi_square_gof({100, 98, 103, 99, 101, 99, 0}, p);
  EXPECT_GT(ok.p_value, 0.5);
  const auto bad = stats::chi_square_gof({200, 50, 100, 100, 100, 50, 0}, p);
  EXPECT_LT(bad.p_value, 1e-6);
}

TEST(CheckReport, JsonShape) {
  const auto j = stats::to_json({"ks", 0.01, 0.05, true});
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"statistic", "value", "threshold", "pass"}));
}
