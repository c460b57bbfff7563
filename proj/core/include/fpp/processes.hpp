#pragma once

#include <cstddef>
#include <vector>

#include "fpp/rng.hpp"
#include "fpp/transforms.hpp"

namespace fpp {

/// Jump times of a counting process observed on [0, horizon]. The last recorded
/// jump may exceed the horizon; it witnesses the censoring.
struct RenewalPath {
  std::vector<double> jump_times;
  double horizon = 0.0;

  /// Number of jumps in [0, t]; right-continuous.
  std::size_t count_at(double t) const;
};

struct CTRWPath {
  std::vector<double> jump_times;
  std::vector<double> jump_sizes;
  double horizon = 0.0;

  /// Sum of the jump sizes at times <= t.
  double position_at(double t) const;
};

/// Nondecreasing values on the uniform grid times[i] = i * step.
struct GridPath {
  std::vector<double> times;
  std::vector<double> values;
  double step = 0.0;
};

struct PathOptions {
  /// Keep drawing past the horizon until at least this many jumps are recorded.
  std::size_t min_jumps = 0;
};

/// Renewal construction with IID Mittag-Leffler waiting times.
RenewalPath simulate_fpp(double beta, double lambda, double horizon, RngStream& rng, const PathOptions& opts = {});

/// Jump times tau_n = D(V_n) of N_1(E(t)), with V_n the arrival times of a rate
/// lambda Poisson process. Exact for every sampleable subordinator.
RenewalPath simulate_timechange_renewal(const SubordinatorSpec& spec, double lambda, double horizon, RngStream& rng,
                                        const PathOptions& opts = {});

/// CTRW A(E(t)) with renewal times from the time-change construction and IID jumps.
CTRWPath simulate_ctrw(const SubordinatorSpec& spec, double lambda, const JumpDist& jumps, double horizon,
                       RngStream& rng, const PathOptions& opts = {});

/// Prelimit Bernoulli CTRW at time t with p = c^{-beta}: the renewal count R(c t)
/// with rate-one Mittag-Leffler waiting times, thinned by Binomial(floor(lambda R), p).
long ctrw_prelimit_bernoulli(double beta, double lambda, double c, double t, RngStream& rng);

/// D on the grid i * step, i = 0..cells, with D(0) = 0.
GridPath simulate_subordinator_grid(const SubordinatorSpec& spec, double step, std::size_t cells, RngStream& rng);

struct InverseGrid {
  GridPath path;
  /// Some t exceeded max(d.values); those entries are set to the last grid time.
  bool truncated = false;
};

/// E(t) = inf{r : D(r) > t} on an arbitrary ascending t grid, by binary search.
InverseGrid inverse_path_on_grid(const GridPath& d, const std::vector<double>& t_grid);

struct Lemma1Result {
  double discrepancy = 0.0;    // max_i |D(r_{i-1}) - sup{t : E(t) < r_i}|
  double max_increment = 0.0;  // largest cell increment of D
  double t_step = 0.0;         // resolution of the t grid used for E
};

/// Left-limit identity D(r-) = sup{t : E(t) < r} on a grid path, using a t grid
/// of 4 * cells points spanning [0, max D].
Lemma1Result lemma1_check(const GridPath& d);

}  // namespace fpp
