#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "fpp/errors.hpp"
#include "fpp/validation.hpp"
#include "test_support.hpp"

namespace {

using testing_support::draws;
using testing_support::within_3se;

TEST(KolmogorovSmirnov, IdenticalSamples) {
  const auto a = draws(1000, 1, [](fpp::RngStream& r) { return r.normal(); });
  const auto res = fpp::ks_two_sample(a, a);
  EXPECT_EQ(res.statistic, 0.0);
  EXPECT_NEAR(res.p_value, 1.0, 1e-12);
}

TEST(KolmogorovSmirnov, ShiftedUniforms) {
  const auto a = draws(10'000, 2, [](fpp::RngStream& r) { return r.uniform(); });
  const auto b = draws(10'000, 3, [](fpp::RngStream& r) { return 0.5 + r.uniform(); });
  const auto res = fpp::ks_two_sample(a, b);
  EXPECT_NEAR(res.statistic, 0.5, 0.02);
  EXPECT_LT(res.p_value, 1e-6);
}

TEST(KolmogorovSmirnov, StatisticInUnitInterval) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto a = draws(50, 10 + s, [](fpp::RngStream& r) { return r.exponential(); });
    const auto b = draws(80, 40 + s, [](fpp::RngStream& r) { return 3.0 * r.uniform(); });
    const auto res = fpp::ks_two_sample(a, b);
    EXPECT_GE(res.statistic, 0.0);
    EXPECT_LE(res.statistic, 1.0);
    EXPECT_GE(res.p_value, 0.0);
    EXPECT_LE(res.p_value, 1.0);
  }
}

TEST(KolmogorovSmirnov, HandlesTies) {
  const std::vector<double> a(30, 1.0);
  std::vector<double> b(30, 1.0);
  b[0] = 2.0;
  EXPECT_NEAR(fpp::ks_two_sample(a, b).statistic, 1.0 / 30.0, 1e-15);
}

TEST(KolmogorovSmirnov, NullRejectionRateIsNominal) {
  int rejections = 0;
  const int reps = 200;
  for (int k = 0; k < reps; ++k) {
    const auto a = draws(500, 1000 + k, [](fpp::RngStream& r) { return r.normal(); });
    const auto b = draws(700, 5000 + k, [](fpp::RngStream& r) { return r.normal(); });
    rejections += fpp::ks_two_sample(a, b).p_value < 0.05 ? 1 : 0;
  }
  const double rate = static_cast<double>(rejections) / reps;
  EXPECT_GE(rate, 0.02);
  EXPECT_LE(rate, 0.09);
}

TEST(KolmogorovSmirnov, SmallSamplesRejected) {
  EXPECT_THROW(fpp::ks_two_sample({1.0, 2.0}, {1.0, 2.0}), fpp::DomainError);
}

TEST(KolmogorovSurvival, KnownQuantile) {
  EXPECT_NEAR(fpp::kolmogorov_survival(1.3580986393225507), 0.05, 1e-6);
  EXPECT_EQ(fpp::kolmogorov_survival(0.1), 1.0);
}

TEST(ChiSquare, PoolsSmallCellsAndDetectsMisfit) {
  const auto fit = fpp::chi_square_gof({50, 50, 1, 0}, {0.5, 0.49, 0.006, 0.004});
  EXPECT_EQ(fit.dof, 1);
  EXPECT_GT(fit.p_value, 0.5);
  const auto misfit = fpp::chi_square_gof({80, 20}, {0.5, 0.5});
  EXPECT_NEAR(misfit.statistic, 36.0, 1e-12);
  EXPECT_LT(misfit.p_value, 1e-6);
}

TEST(EmpiricalLaplace, ZeroArgument) {
  const auto est = fpp::empirical_laplace({0.3, 1.0, 5.0}, 0.0);
  EXPECT_EQ(est.estimate, 1.0);
  EXPECT_EQ(est.std_error, 0.0);
}

TEST(EmpiricalLaplace, ExponentialSamples) {
  const auto x = draws(100'000, 7, [](fpp::RngStream& r) { return r.exponential(); });
  EXPECT_TRUE(within_3se(fpp::empirical_laplace(x, 1.0), 0.5));
}

TEST(Suites, UnknownNameListsValidOnes) {
  try {
    fpp::run_suite("theorem99", 1);
    FAIL() << "expected DomainError";
  } catch (const fpp::DomainError& e) {
    const std::string msg = e.what();
    for (const auto& name : fpp::suite_names()) EXPECT_NE(msg.find(name), std::string::npos) << name;
  }
}

TEST(Suites, FracCalcPassesWithSeedOne) {
  const auto report = fpp::run_suite("fraccalc", 1);
  EXPECT_EQ(report.suite, "fraccalc");
  EXPECT_FALSE(report.cases.empty());
  for (const auto& c : report.cases) EXPECT_TRUE(c.pass) << c.name << ' ' << c.observed << ' ' << c.threshold;
}

TEST(Suites, ThreadCountDoesNotChangeResults) {
  const auto one = fpp::run_block("distributed", 5, 1);
  const auto two = fpp::run_block("distributed", 5, 2);
  ASSERT_EQ(one.cases.size(), two.cases.size());
  for (std::size_t i = 0; i < one.cases.size(); ++i) EXPECT_EQ(one.cases[i].observed, two.cases[i].observed);
}

}  // namespace
