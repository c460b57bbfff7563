#include "fpp/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fpp/errors.hpp"

namespace fpp {

namespace {

constexpr double kPi = std::numbers::pi;

void check_beta_open(const char* where, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) detail::throw_domain(where, "beta in (0, 1)");
}

// Keep extreme draws finite and strictly positive.
double clamp_positive(double log_value) {
  constexpr double lo = std::numeric_limits<double>::min();
  constexpr double hi = std::numeric_limits<double>::max();
  if (log_value > std::log(hi)) return hi;
  return std::max(std::exp(log_value), lo);
}

// Kanter: log of sin(b pi U) sin((1-b) pi U)^{1/b - 1} / sin(pi U)^{1/b}.
double kanter_log_factor(double beta, double u) {
  return std::log(std::sin(beta * kPi * u)) + (1.0 / beta - 1.0) * std::log(std::sin((1.0 - beta) * kPi * u)) -
         std::log(std::sin(kPi * u)) / beta;
}

}  // namespace

double sample_stable_unit(double beta, RngStream& rng) {
  check_beta_open("sample_stable_unit", beta);
  const double u = rng.uniform();
  const double w = rng.exponential();
  return clamp_positive(kanter_log_factor(beta, u) + (1.0 - 1.0 / beta) * std::log(w));
}

double sample_stable_increment(double beta, double dt, RngStream& rng) {
  if (!(dt > 0.0)) detail::throw_domain("sample_stable_increment", "dt > 0");
  check_beta_open("sample_stable_increment", beta);
  const double u = rng.uniform();
  const double w = rng.exponential();
  return clamp_positive(std::log(dt) / beta + kanter_log_factor(beta, u) + (1.0 - 1.0 / beta) * std::log(w));
}

double sample_ml_waiting(double beta, double lambda, RngStream& rng) {
  if (!(beta > 0.0 && beta <= 1.0)) detail::throw_domain("sample_ml_waiting", "beta in (0, 1]");
  if (!(lambda > 0.0)) detail::throw_domain("sample_ml_waiting", "lambda > 0");
  if (beta == 1.0) return rng.exponential() / lambda;
  const double w = rng.exponential();
  const double d = sample_stable_unit(beta, rng);
  return clamp_positive((std::log(w) - std::log(lambda)) / beta + std::log(d));
}

double sample_tempered_stable_increment(double beta, double a, double dt, RngStream& rng,
                                        const TemperedSamplingOptions& opts) {
  check_beta_open("sample_tempered_stable_increment", beta);
  if (!(a > 0.0)) detail::throw_domain("sample_tempered_stable_increment", "a > 0");
  if (!(dt > 0.0)) detail::throw_domain("sample_tempered_stable_increment", "dt > 0");
  const double natural = std::pow(a, -beta);
  const double cap = opts.chunk_cap > 0.0 ? std::min(opts.chunk_cap, natural) : natural;
  const auto chunks = static_cast<long>(std::ceil(dt / cap));
  const double len = dt / static_cast<double>(chunks);
  double total = 0.0;
  for (long c = 0; c < chunks; ++c) {
    long tries = 0;
    for (;;) {
      if (++tries > opts.max_iterations) {
        throw SamplingError("sample_tempered_stable_increment: rejection iteration cap reached");
      }
      const double x = sample_stable_increment(beta, len, rng);
      if (rng.uniform() <= std::exp(-a * x)) {
        total += x;
        break;
      }
    }
  }
  return total;
}

double sample_tempered_ml_waiting(double beta, double a, double lambda, RngStream& rng, long max_iterations) {
  check_beta_open("sample_tempered_ml_waiting", beta);
  if (!(a > 0.0)) detail::throw_domain("sample_tempered_ml_waiting", "a > 0");
  const double eta = lambda - std::pow(a, beta);
  if (!(eta > 0.0)) detail::throw_domain("sample_tempered_ml_waiting", "lambda > a^beta");
  for (long tries = 0; tries < max_iterations; ++tries) {
    const double j = sample_ml_waiting(beta, eta, rng);
    if (rng.uniform() <= std::exp(-a * j)) return j;
  }
  throw SamplingError("sample_tempered_ml_waiting: rejection iteration cap reached");
}

double sample_inverse_stable_marginal(double beta, double t, RngStream& rng) {
  check_beta_open("sample_inverse_stable_marginal", beta);
  if (!(t >= 0.0)) detail::throw_domain("sample_inverse_stable_marginal", "t >= 0");
  if (t == 0.0) return 0.0;
  return std::exp(beta * (std::log(t) - std::log(sample_stable_unit(beta, rng))));
}

double sample_brownian_running_max(double t, long n_steps, RngStream& rng) {
  if (n_steps < 1) detail::throw_domain("sample_brownian_running_max", "n_steps >= 1");
  if (!(t >= 0.0)) detail::throw_domain("sample_brownian_running_max", "t >= 0");
  if (t == 0.0) return 0.0;
  const double sd = std::sqrt(2.0 * t / static_cast<double>(n_steps));
  double b = 0.0;
  double best = 0.0;
  for (long i = 0; i < n_steps; ++i) {
    b += sd * rng.normal();
    best = std::max(best, b);
  }
  return best;
}

double sample_subordinator_increment(const SubordinatorSpec& spec, double dt, RngStream& rng) {
  if (!(dt > 0.0)) detail::throw_domain("sample_subordinator_increment", "dt > 0");
  const auto& v = spec.variant();
  if (const auto* s = std::get_if<StableSpec>(&v)) return sample_stable_increment(s->beta, dt, rng);
  if (const auto* s = std::get_if<TemperedStableSpec>(&v)) {
    return sample_tempered_stable_increment(s->beta, s->a, dt, rng);
  }
  if (const auto* s = std::get_if<StableMixtureSpec>(&v)) {
    // psi = sum w_i s^{beta_i}: independent components scaled by w_i^{1/beta_i}.
    double total = 0.0;
    for (const auto& c : s->components) {
      total += std::pow(c.weight, 1.0 / c.beta) * sample_stable_increment(c.beta, dt, rng);
    }
    return total;
  }
  throw SamplingError("sample_subordinator: exact sampling of a " + spec.name() +
                      " subordinator is unsupported; use the analytic distributions instead");
}

std::vector<double> sample_subordinator_at(const SubordinatorSpec& spec, const std::vector<double>& times,
                                           RngStream& rng) {
  if (!spec.sampleable()) {
    throw SamplingError("sample_subordinator_at: exact sampling of a " + spec.name() +
                        " subordinator is unsupported; use the analytic distributions instead");
  }
  std::vector<double> out;
  out.reserve(times.size());
  double prev_t = 0.0;
  double level = 0.0;
  for (double t : times) {
    if (!(t > prev_t)) detail::throw_domain("sample_subordinator_at", "strictly increasing positive times");
    level += sample_subordinator_increment(spec, t - prev_t, rng);
    out.push_back(level);
    prev_t = t;
  }
  return out;
}

double sample_jump(const JumpDist& jumps, RngStream& rng) {
  const auto& atoms = jumps.support();
  if (atoms.size() == 1) return atoms.front().location;
  double u = rng.uniform();
  for (const auto& a : atoms) {
    if (u < a.probability) return a.location;
    u -= a.probability;
  }
  return atoms.back().location;
}

}  // namespace fpp
