#include <cmath>

#include <gtest/gtest.h>

#include "fpp/errors.hpp"
#include "fpp/frac_calculus.hpp"
#include "fpp/quadrature.hpp"
#include "goldens.hpp"

namespace {

using fpp::SampledFunction;

SampledFunction grid(double (*g)(double), double step, std::size_t cells) {
  return SampledFunction::sample(g, 0.0, step, cells);
}

TEST(Caputo, ConstantHasZeroDerivative) {
  const auto g = grid([](double) { return 3.0; }, 1e-2, 100);
  EXPECT_NEAR(fpp::caputo(g, 0.4, 1.0), 0.0, 1e-12);
}

TEST(Caputo, LinearIsExact) {
  const auto g = grid([](double t) { return t; }, 1e-2, 100);
  EXPECT_NEAR(fpp::caputo(g, 0.5, 1.0), golden::kCaputoLinearHalf, 1e-12);
}

TEST(Caputo, NearOrderOneIsFirstDerivative) {
  const auto g = grid([](double t) { return t * t; }, 1e-3, 1000);
  EXPECT_NEAR(fpp::caputo(g, 0.999, 1.0), 2.0, 1e-2);
}

TEST(Caputo, QuadraticConvergesAtOrderTwoMinusBeta) {
  const double beta = 0.5;
  const double exact = 2.0 / std::tgamma(3.0 - beta);
  const double e1 = std::fabs(fpp::caputo(grid([](double t) { return t * t; }, 1e-2, 100), beta, 1.0) - exact);
  const double e2 = std::fabs(fpp::caputo(grid([](double t) { return t * t; }, 5e-3, 200), beta, 1.0) - exact);
  EXPECT_NEAR(std::log2(e1 / e2), 2.0 - beta, 0.15);
}

TEST(Caputo, GridChecks) {
  const auto g = grid([](double t) { return t; }, 1e-2, 100);
  EXPECT_THROW(fpp::caputo(g, 0.5, 0.505), fpp::DomainError);
  EXPECT_THROW(fpp::caputo(g, 1.0, 1.0), fpp::DomainError);
  EXPECT_THROW(fpp::caputo(SampledFunction{0.0, 0.1, {1.0, 2.0}}, 0.5, 0.1), fpp::DomainError);
}

TEST(RiemannLiouville, ConstantAndLinear) {
  const auto one = grid([](double) { return 1.0; }, 1e-2, 100);
  EXPECT_NEAR(fpp::riemann_liouville(one, 0.5, 1.0), 1.0 / std::tgamma(0.5), 1e-12);
  const auto lin = grid([](double t) { return t; }, 1e-2, 100);
  EXPECT_NEAR(fpp::riemann_liouville(lin, 0.5, 1.0), golden::kCaputoLinearHalf, 1e-12);
}

TEST(DistributedOrder, SingleAtomIsCaputo) {
  const auto g = grid([](double t) { return std::sin(t); }, 1e-3, 1000);
  EXPECT_NEAR(fpp::distributed_order_deriv(g, {{1.0, 0.35}}, 1.0), fpp::caputo(g, 0.35, 1.0), 1e-15);
}

TEST(DistributedOrder, TwoAtomsOnLinear) {
  const auto g = grid([](double t) { return t; }, 1e-2, 100);
  EXPECT_NEAR(fpp::distributed_order_deriv(g, {{0.5, 0.3}, {0.5, 0.7}}, 1.0), golden::kMixtureDerivLinear, 1e-12);
}

TEST(DistributedOrder, UniformDensityOnLinear) {
  const auto g = grid([](double t) { return t; }, 1e-2, 100);
  const double expected = fpp::quad::gauss_legendre([](double b) { return 1.0 / std::tgamma(2.0 - b); }, 0.0, 1.0);
  EXPECT_NEAR(fpp::distributed_order_deriv(g, fpp::OrderDensity::uniform(), 1.0), expected, 1e-9);
}

TEST(DistributedOrder, LinearInTheFunction) {
  const auto f = grid([](double t) { return std::exp(-t); }, 1e-3, 1000);
  const auto h = grid([](double t) { return t * t * t; }, 1e-3, 1000);
  SampledFunction sum = f;
  for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] = 2.0 * f.values[i] - 0.5 * h.values[i];
  const auto p = fpp::OrderDensity::power(1.0, 0.5);
  const double lhs = fpp::distributed_order_deriv(sum, p, 0.8);
  const double rhs = 2.0 * fpp::distributed_order_deriv(f, p, 0.8) - 0.5 * fpp::distributed_order_deriv(h, p, 0.8);
  EXPECT_NEAR(lhs, rhs, 1e-10 * std::fabs(rhs));
}

TEST(GoverningResidual, Examples) {
  fpp::ResidualParams params;
  EXPECT_LE(fpp::governing_residual(fpp::ResidualKind::FppMaster, params, 0.0, 1.0).residual, 5e-3);
  EXPECT_LE(fpp::governing_residual(fpp::ResidualKind::InverseDensity, params, 1.0, 1.0).residual, 5e-3);
  EXPECT_LE(fpp::governing_residual(fpp::ResidualKind::BrownianTime, params, 0.5, 1.0).residual, 1e-3);
  params.step = 4e-3;
  EXPECT_LE(fpp::governing_residual(fpp::ResidualKind::DiffusionWaveHalves, params, 1.0, 0.5).residual, 1e-3);
}

TEST(GoverningResidual, HalvesUnderRefinement) {
  fpp::ResidualParams coarse, fine;
  coarse.step = 2e-3;
  fine.step = 1e-3;
  const double r1 = fpp::governing_residual(fpp::ResidualKind::FppMaster, coarse, 1.0, 1.0).residual;
  const double r2 = fpp::governing_residual(fpp::ResidualKind::FppMaster, fine, 1.0, 1.0).residual;
  EXPECT_LE(r2, 0.6 * r1);
}

TEST(GoverningResidual, CoarseGridSuggestsStep) {
  fpp::ResidualParams params;
  params.step = 0.1;
  try {
    fpp::governing_residual(fpp::ResidualKind::FppMaster, params, 0.0, 0.5);
    FAIL() << "expected ResolutionError";
  } catch (const fpp::ResolutionError& e) {
    EXPECT_GT(e.suggested_step(), 0.0);
    EXPECT_LT(e.suggested_step(), 0.5 / 32.0);
  }
}

TEST(GoverningResidual, KindNames) {
  for (auto k : {fpp::ResidualKind::FppMaster, fpp::ResidualKind::InverseDensity, fpp::ResidualKind::BrownianTime,
                 fpp::ResidualKind::DiffusionWaveHalves}) {
    EXPECT_EQ(fpp::residual_kind_from_string(fpp::to_string(k)), k);
  }
  EXPECT_THROW(fpp::residual_kind_from_string("heat"), fpp::DomainError);
}

}  // namespace
