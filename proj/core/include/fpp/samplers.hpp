#pragma once

#include <vector>

#include "fpp/rng.hpp"
#include "fpp/transforms.hpp"

namespace fpp {

/// D(1) of the standard beta-stable subordinator, E[exp(-s D(1))] = exp(-s^beta).
double sample_stable_unit(double beta, RngStream& rng);

/// D(dt) = dt^{1/beta} D(1).
double sample_stable_increment(double beta, double dt, RngStream& rng);

/// Mittag-Leffler waiting time with P(J > t) = E_beta(-lambda t^beta); beta = 1
/// gives the exponential law.
double sample_ml_waiting(double beta, double lambda, RngStream& rng);

struct TemperedSamplingOptions {
  /// Chunk length cap; <= 0 selects the default a^{-beta}.
  double chunk_cap = 0.0;
  /// Proposals allowed per chunk before SamplingError.
  long max_iterations = 1'000'000;
};

/// Increment of the tempered stable subordinator over dt, with Laplace
/// transform exp(-dt((s + a)^beta - a^beta)).
double sample_tempered_stable_increment(double beta, double a, double dt, RngStream& rng,
                                        const TemperedSamplingOptions& opts = {});

/// Tempered Mittag-Leffler waiting time, E[exp(-s J)] = lambda / (lambda + (s + a)^beta - a^beta).
/// Requires lambda > a^beta.
double sample_tempered_ml_waiting(double beta, double a, double lambda, RngStream& rng,
                                  long max_iterations = 1'000'000);

/// One draw of E(t) = (t / D(1))^beta.
double sample_inverse_stable_marginal(double beta, double t, RngStream& rng);

/// Maximum of a Brownian motion with Var B(t) = 2t over a uniform grid of
/// n_steps steps on [0, t] (origin included). Biased low by O(sqrt(t / n_steps)).
double sample_brownian_running_max(double t, long n_steps, RngStream& rng);

/// D(t_2) - D(t_1) for an interval of length dt.
double sample_subordinator_increment(const SubordinatorSpec& spec, double dt, RngStream& rng);

/// D at strictly increasing positive times, built from independent increments.
std::vector<double> sample_subordinator_at(const SubordinatorSpec& spec, const std::vector<double>& times,
                                           RngStream& rng);

/// One IID jump size from a JumpDist.
double sample_jump(const JumpDist& jumps, RngStream& rng);

}  // namespace fpp
