#include <cmath>
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "fpp/distributions.hpp"
#include "fpp/errors.hpp"
#include "fpp/processes.hpp"
#include "fpp/samplers.hpp"
#include "fpp/transforms.hpp"
#include "fpp/validation.hpp"
#include "test_support.hpp"

namespace {

using testing_support::draws;
using testing_support::within_3se;

TEST(SimulateFpp, PoissonCountsAtOrderOne) {
  const double lambda = 1.5, horizon = 2.0;
  const auto counts = draws(10'000, 101, [&](fpp::RngStream& r) {
    return static_cast<double>(fpp::simulate_fpp(1.0, lambda, horizon, r).count_at(horizon));
  });
  std::vector<long> hist(16, 0);
  for (double c : counts) ++hist[std::min<std::size_t>(static_cast<std::size_t>(c), 15)];
  std::vector<double> probs(16);
  double head = 0.0;
  for (long n = 0; n < 15; ++n) head += probs[n] = fpp::fpp_pmf(1.0, lambda, horizon, n);
  probs[15] = 1.0 - head;
  EXPECT_GT(fpp::chi_square_gof(hist, probs).p_value, 0.01);
}

TEST(SimulateFpp, JumpTimesStrictlyIncreasingAndCensored) {
  fpp::RngStream r(5, 0);
  for (int k = 0; k < 200; ++k) {
    const auto p = fpp::simulate_fpp(0.6, 1.0, 5.0, r);
    ASSERT_FALSE(p.jump_times.empty());
    for (std::size_t i = 1; i < p.jump_times.size(); ++i) ASSERT_LT(p.jump_times[i - 1], p.jump_times[i]);
    EXPECT_GT(p.jump_times.back(), 5.0);
  }
}

TEST(SimulateFpp, MinimumJumpsAtZeroHorizon) {
  fpp::RngStream r(5, 1);
  fpp::PathOptions opts;
  opts.min_jumps = 3;
  EXPECT_EQ(fpp::simulate_fpp(0.5, 1.0, 0.0, r, opts).jump_times.size(), 3u);
  EXPECT_THROW(fpp::simulate_fpp(0.5, 1.0, -1.0, r), fpp::DomainError);
}

TEST(SimulateFpp, ReproducibleForFixedStream) {
  fpp::RngStream a(17, 2), b(17, 2);
  EXPECT_EQ(fpp::simulate_fpp(0.5, 1.0, 10.0, a).jump_times, fpp::simulate_fpp(0.5, 1.0, 10.0, b).jump_times);
}

TEST(TimeChangeRenewal, TemperedFirstWaitingTimeMatchesDirectSampler) {
  const auto spec = fpp::SubordinatorSpec::tempered_stable(0.5, 1.0);
  fpp::PathOptions opts;
  opts.min_jumps = 1;
  const auto x = draws(50'000, 111, [&](fpp::RngStream& r) {
    return fpp::simulate_timechange_renewal(spec, 2.0, 0.0, r, opts).jump_times[0];
  });
  const auto y = draws(50'000, 112, [](fpp::RngStream& r) { return fpp::sample_tempered_ml_waiting(0.5, 1.0, 2.0, r); });
  EXPECT_GT(fpp::ks_two_sample(x, y).p_value, 0.01);
}

TEST(TimeChangeRenewal, DistributedOrderIsNotSampleable) {
  fpp::RngStream r(1, 0);
  const auto spec = fpp::SubordinatorSpec::distributed_order(fpp::OrderDensity::uniform());
  EXPECT_THROW(fpp::simulate_timechange_renewal(spec, 1.0, 1.0, r), fpp::SamplingError);
}

TEST(Ctrw, PointMassJumpsCountTheRenewals) {
  const auto spec = fpp::SubordinatorSpec::stable(0.7);
  fpp::RngStream a(8, 0);
  const auto path = fpp::simulate_ctrw(spec, 1.0, fpp::JumpDist::point_mass_one(), 4.0, a);
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    std::size_t n = 0;
    for (double s : path.jump_times) n += s <= t ? 1 : 0;
    EXPECT_EQ(path.position_at(t), static_cast<double>(n));
  }
}

TEST(Ctrw, SymmetricJumpsCharacteristicFunction) {
  // E cos(k X(t)) against inversion of psi(s) / (s (psi_A(k) + psi(s))).
  const auto spec = fpp::SubordinatorSpec::stable(0.5);
  const auto jumps = fpp::JumpDist::atoms({{-1.0, 0.5}, {1.0, 0.5}});
  const double k = 1.0, t = 1.0;
  const auto x = draws(100'000, 121, [&](fpp::RngStream& r) {
    return std::cos(k * fpp::simulate_ctrw(spec, 1.0, jumps, t, r).position_at(t));
  });
  const auto symbol = jumps.fourier_symbol(1.0, k);
  const fpp::LaplaceTransform F = fpp::LaplaceTransform::complex([&](std::complex<double> s) {
    const auto psi = fpp::laplace_exponent(spec, s);
    return psi / (s * (symbol + psi));
  });
  EXPECT_TRUE(within_3se(fpp::sample_mean(x), fpp::laplace_invert_with_fallback(F, t)));
}

TEST(Ctrw, CompoundPoissonAtOrderOneLimit) {
  // Exponential waiting times with independent jumps.
  const auto jumps = fpp::JumpDist::atoms({{-1.0, 0.3}, {2.0, 0.7}});
  const double lambda = 1.3, t = 1.2, k = 0.8;
  const auto x = draws(100'000, 131, [&](fpp::RngStream& r) {
    const auto renewals = fpp::simulate_fpp(1.0, lambda, t, r);
    double pos = 0.0;
    for (double s : renewals.jump_times) {
      if (s <= t) pos += fpp::sample_jump(jumps, r);
    }
    return std::cos(k * pos);
  });
  const double expected = std::exp(-t * jumps.fourier_symbol(lambda, k)).real();
  EXPECT_TRUE(within_3se(fpp::sample_mean(x), expected));
}

TEST(PrelimitBernoulli, RangeAndReproducibility) {
  fpp::RngStream a(3, 0), b(3, 0);
  for (int i = 0; i < 100; ++i) {
    const long v = fpp::ctrw_prelimit_bernoulli(0.5, 1.0, 2.0, 1.0, a);
    EXPECT_GE(v, 0);
    EXPECT_EQ(v, fpp::ctrw_prelimit_bernoulli(0.5, 1.0, 2.0, 1.0, b));
  }
  EXPECT_THROW(fpp::ctrw_prelimit_bernoulli(0.5, 1.0, 1.0, 1.0, a), fpp::DomainError);
}

TEST(PrelimitBernoulli, CountsFollowTheLimitPmf) {
  // At lambda = 1 the thinned Mittag-Leffler renewal count has the limit law for every c.
  for (double c : {10.0, 1000.0}) {
    const auto x = draws(10'000, 141 + static_cast<std::uint64_t>(c),
                         [&](fpp::RngStream& r) { return static_cast<double>(fpp::ctrw_prelimit_bernoulli(0.5, 1.0, c, 1.0, r)); });
    std::vector<long> hist(13, 0);
    for (double v : x) ++hist[std::min<std::size_t>(static_cast<std::size_t>(v), 12)];
    std::vector<double> probs(13);
    double head = 0.0;
    for (long n = 0; n < 12; ++n) head += probs[n] = fpp::fpp_pmf(0.5, 1.0, 1.0, n);
    probs[12] = 1.0 - head;
    EXPECT_GT(fpp::chi_square_gof(hist, probs).p_value, 0.01) << c;
  }
}

TEST(InversePath, IdentityPath) {
  fpp::GridPath d;
  d.step = 0.01;
  for (int i = 0; i <= 100; ++i) {
    d.times.push_back(i * 0.01);
    d.values.push_back(i * 0.01);
  }
  std::vector<double> t_grid;
  for (int i = 0; i < 20; ++i) t_grid.push_back(i * 0.05);
  const auto e = fpp::inverse_path_on_grid(d, t_grid);
  EXPECT_FALSE(e.truncated);
  for (std::size_t i = 0; i < t_grid.size(); ++i) EXPECT_NEAR(e.path.values[i], t_grid[i], 0.01 + 1e-12);
  const auto lemma = fpp::lemma1_check(d);
  EXPECT_LE(lemma.discrepancy, d.step + 1e-12);
}

TEST(InversePath, PlateausAlignWithJumps) {
  fpp::GridPath d;
  d.step = 1.0;
  d.times = {0.0, 1.0, 2.0, 3.0};
  d.values = {0.0, 0.5, 5.0, 5.5};
  const auto e = fpp::inverse_path_on_grid(d, {0.25, 1.0, 3.0, 4.9, 5.2});
  EXPECT_EQ(e.path.values[1], e.path.values[2]);
  EXPECT_EQ(e.path.values[2], e.path.values[3]);
  EXPECT_LT(e.path.values[0], e.path.values[1]);
}

TEST(InversePath, SimulatedStablePathDiscrepancy) {
  fpp::RngStream r(77, 0);
  const auto d = fpp::simulate_subordinator_grid(fpp::SubordinatorSpec::stable(0.5), 1e-4, 10'000, r);
  const auto lemma = fpp::lemma1_check(d);
  EXPECT_LE(lemma.discrepancy, lemma.max_increment + lemma.t_step);
  EXPECT_LE(lemma.discrepancy, lemma.t_step * (1.0 + 1e-9));
}

}  // namespace
