#include "fpp/processes.hpp"

#include <algorithm>
#include <cmath>

#include "fpp/errors.hpp"
#include "fpp/samplers.hpp"

namespace fpp {

std::size_t RenewalPath::count_at(double t) const {
  return static_cast<std::size_t>(std::upper_bound(jump_times.begin(), jump_times.end(), t) - jump_times.begin());
}

double CTRWPath::position_at(double t) const {
  const auto n = static_cast<std::size_t>(std::upper_bound(jump_times.begin(), jump_times.end(), t) -
                                          jump_times.begin());
  double x = 0.0;
  for (std::size_t i = 0; i < n; ++i) x += jump_sizes[i];
  return x;
}

namespace {

void check_horizon(const char* where, double lambda, double horizon) {
  if (!(lambda > 0.0)) detail::throw_domain(where, "lambda > 0");
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) detail::throw_domain(where, "finite horizon >= 0");
}

template <class Waiting>
RenewalPath renewal(double horizon, const PathOptions& opts, Waiting&& next_wait) {
  RenewalPath path;
  path.horizon = horizon;
  double t = 0.0;
  while (t <= horizon || path.jump_times.size() < opts.min_jumps) {
    const double next = t + next_wait();
    // Positive waits can vanish in floating point against a large t.
    t = next > t ? next : std::nextafter(t, INFINITY);
    path.jump_times.push_back(t);
  }
  return path;
}

}  // namespace

RenewalPath simulate_fpp(double beta, double lambda, double horizon, RngStream& rng, const PathOptions& opts) {
  check_horizon("simulate_fpp", lambda, horizon);
  if (!(beta > 0.0 && beta <= 1.0)) detail::throw_domain("simulate_fpp", "beta in (0, 1]");
  return renewal(horizon, opts, [&] { return sample_ml_waiting(beta, lambda, rng); });
}

RenewalPath simulate_timechange_renewal(const SubordinatorSpec& spec, double lambda, double horizon, RngStream& rng,
                                        const PathOptions& opts) {
  check_horizon("simulate_timechange_renewal", lambda, horizon);
  if (!spec.sampleable()) {
    throw SamplingError("simulate_timechange_renewal: exact sampling of a " + spec.name() +
                        " subordinator is unsupported; use the analytic distributions instead");
  }
  // D(V_n) - D(V_{n-1}) is an independent increment over an exponential gap.
  return renewal(horizon, opts, [&] { return sample_subordinator_increment(spec, rng.exponential() / lambda, rng); });
}

CTRWPath simulate_ctrw(const SubordinatorSpec& spec, double lambda, const JumpDist& jumps, double horizon,
                       RngStream& rng, const PathOptions& opts) {
  const RenewalPath times = simulate_timechange_renewal(spec, lambda, horizon, rng, opts);
  CTRWPath path;
  path.horizon = horizon;
  path.jump_times = times.jump_times;
  path.jump_sizes.reserve(path.jump_times.size());
  for (std::size_t i = 0; i < path.jump_times.size(); ++i) path.jump_sizes.push_back(sample_jump(jumps, rng));
  return path;
}

long ctrw_prelimit_bernoulli(double beta, double lambda, double c, double t, RngStream& rng) {
  if (!(beta > 0.0 && beta < 1.0)) detail::throw_domain("ctrw_prelimit_bernoulli", "beta in (0, 1)");
  if (!(lambda > 0.0)) detail::throw_domain("ctrw_prelimit_bernoulli", "lambda > 0");
  if (!(c > 1.0)) detail::throw_domain("ctrw_prelimit_bernoulli", "c > 1");
  if (!(t >= 0.0)) detail::throw_domain("ctrw_prelimit_bernoulli", "t >= 0");
  const double p = std::pow(c, -beta);
  const double clock = c * t;  // p^{-1/beta} t
  long count = 0;
  for (double s = sample_ml_waiting(beta, 1.0, rng); s <= clock; s += sample_ml_waiting(beta, 1.0, rng)) ++count;
  const auto trials = static_cast<long>(std::floor(lambda * static_cast<double>(count)));
  long hits = 0;
  for (long i = 0; i < trials; ++i) hits += rng.uniform() < p ? 1 : 0;
  return hits;
}

GridPath simulate_subordinator_grid(const SubordinatorSpec& spec, double step, std::size_t cells, RngStream& rng) {
  if (!(step > 0.0)) detail::throw_domain("simulate_subordinator_grid", "step > 0");
  if (cells == 0) detail::throw_domain("simulate_subordinator_grid", "cells >= 1");
  GridPath path;
  path.step = step;
  path.times.resize(cells + 1);
  path.values.resize(cells + 1);
  path.values[0] = 0.0;
  for (std::size_t i = 0; i <= cells; ++i) path.times[i] = static_cast<double>(i) * step;
  for (std::size_t i = 1; i <= cells; ++i) {
    path.values[i] = path.values[i - 1] + sample_subordinator_increment(spec, step, rng);
  }
  return path;
}

InverseGrid inverse_path_on_grid(const GridPath& d, const std::vector<double>& t_grid) {
  if (d.times.size() != d.values.size() || d.times.empty()) {
    detail::throw_domain("inverse_path_on_grid", "a nonempty path with matching times and values");
  }
  if (!std::is_sorted(d.values.begin(), d.values.end())) {
    detail::throw_domain("inverse_path_on_grid", "nondecreasing path values");
  }
  if (!std::is_sorted(t_grid.begin(), t_grid.end())) detail::throw_domain("inverse_path_on_grid", "ascending t grid");
  InverseGrid out;
  out.path.times = t_grid;
  out.path.values.reserve(t_grid.size());
  out.path.step = t_grid.size() > 1 ? t_grid[1] - t_grid[0] : 0.0;
  for (double t : t_grid) {
    const auto it = std::upper_bound(d.values.begin(), d.values.end(), t);
    if (it == d.values.end()) {
      out.truncated = true;
      out.path.values.push_back(d.times.back());
    } else {
      out.path.values.push_back(d.times[static_cast<std::size_t>(it - d.values.begin())]);
    }
  }
  return out;
}

Lemma1Result lemma1_check(const GridPath& d) {
  const std::size_t cells = d.values.size() - 1;
  if (d.values.size() < 2) detail::throw_domain("lemma1_check", "at least one grid cell");
  Lemma1Result res;
  const std::size_t points = 4 * cells;
  const double top = d.values.back();
  res.t_step = top / static_cast<double>(points);
  std::vector<double> t_grid(points);
  for (std::size_t j = 0; j < points; ++j) t_grid[j] = static_cast<double>(j) * res.t_step;
  const InverseGrid e = inverse_path_on_grid(d, t_grid);
  for (std::size_t i = 1; i <= cells; ++i) {
    res.max_increment = std::max(res.max_increment, d.values[i] - d.values[i - 1]);
    // E is nondecreasing, so {t : E(t) < r_i} is a prefix of the t grid.
    const auto it = std::lower_bound(e.path.values.begin(), e.path.values.end(), d.times[i]);
    const double sup =
        it == e.path.values.begin() ? 0.0 : t_grid[static_cast<std::size_t>(it - e.path.values.begin()) - 1];
    res.discrepancy = std::max(res.discrepancy, std::fabs(d.values[i - 1] - sup));
  }
  return res;
}

}  // namespace fpp
