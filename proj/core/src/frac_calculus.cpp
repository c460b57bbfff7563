#include "fpp/frac_calculus.hpp"

#include <cmath>
#include <numbers>

#include "fpp/distributions.hpp"
#include "fpp/errors.hpp"
#include "fpp/quadrature.hpp"
#include "fpp/special_functions.hpp"

namespace fpp {

namespace {

// Coarsest admissible grid: this many cells between t0 (or the stencil) and t.
constexpr long kMinCells = 32;

void check_order(const char* where, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) detail::throw_domain(where, "0 < beta < 1");
}

[[noreturn]] void too_coarse(const std::string& where, double step, double suggested) {
  throw ResolutionError(where + ": step " + std::to_string(step) + " is too coarse", suggested);
}

}  // namespace

SampledFunction SampledFunction::sample(const std::function<double(double)>& g, double t0, double step,
                                        std::size_t cells) {
  SampledFunction s;
  s.t0 = t0;
  s.step = step;
  s.values.resize(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) s.values[i] = g(s.time(i));
  s.validate();
  return s;
}

void SampledFunction::validate() const {
  if (!(t0 >= 0.0)) detail::throw_domain("SampledFunction", "t0 >= 0");
  if (!(step > 0.0)) detail::throw_domain("SampledFunction", "step > 0");
  if (values.size() < 3) detail::throw_domain("SampledFunction", "at least 3 samples");
}

std::size_t SampledFunction::index_of(double t) const {
  const double pos = (t - t0) / step;
  const double k = std::round(pos);
  if (!(k >= 0.0) || k > static_cast<double>(values.size() - 1) || std::abs(pos - k) > 1e-9 * std::max(1.0, k)) {
    detail::throw_domain("SampledFunction", "t on the sample grid (no interpolation)");
  }
  return static_cast<std::size_t>(k);
}

double caputo(const SampledFunction& g, double beta, double t) {
  g.validate();
  check_order("caputo", beta);
  const std::size_t n = g.index_of(t);
  if (n == 0) detail::throw_domain("caputo", "t > t0");
  // b_j = (j + 1)^{1 - beta} - j^{1 - beta} weights the difference on the j-th cell back from t.
  const double a = 1.0 - beta;
  double sum = 0.0;
  double prev = 0.0;  // j^{1 - beta}
  for (std::size_t j = 0; j < n; ++j) {
    const double next = std::pow(static_cast<double>(j + 1), a);
    sum += (next - prev) * (g.values[n - j] - g.values[n - j - 1]);
    prev = next;
  }
  return sum * std::pow(g.step, -beta) * recip_gamma(2.0 - beta);
}

double riemann_liouville(const SampledFunction& g, double beta, double t) {
  check_order("riemann_liouville", beta);
  const double c = caputo(g, beta, t);
  return c + g.values.front() * std::pow(t - g.t0, -beta) * recip_gamma(1.0 - beta);
}

double distributed_order_deriv(const SampledFunction& g, const OrderDensity& p, double t) {
  g.index_of(t);
  const auto integrand = [&](double b) { return p(b) * caputo(g, b, t); };
  if (p.singular_at_zero()) return quad::integrate_singular(integrand, 0.0, 1.0, 1e-10);
  return quad::integrate(integrand, 0.0, 1.0, 1e-10);
}

double distributed_order_deriv(const SampledFunction& g, const std::vector<MixtureComponent>& atoms, double t) {
  if (atoms.empty()) detail::throw_domain("distributed_order_deriv", "at least one atom");
  double sum = 0.0;
  for (const auto& c : atoms) {
    if (!(c.weight >= 0.0)) detail::throw_domain("distributed_order_deriv", "atom weights >= 0");
    check_order("distributed_order_deriv", c.beta);
    sum += c.weight * caputo(g, c.beta, t);
  }
  return sum;
}

ResidualKind residual_kind_from_string(const std::string& name) {
  if (name == "fpp_master") return ResidualKind::FppMaster;
  if (name == "inverse_density") return ResidualKind::InverseDensity;
  if (name == "brownian_time") return ResidualKind::BrownianTime;
  if (name == "diffusion_wave_halves") return ResidualKind::DiffusionWaveHalves;
  detail::throw_domain("governing_residual",
                       "kind in {fpp_master, inverse_density, brownian_time, diffusion_wave_halves}");
}

std::string to_string(ResidualKind kind) {
  switch (kind) {
    case ResidualKind::FppMaster: return "fpp_master";
    case ResidualKind::InverseDensity: return "inverse_density";
    case ResidualKind::BrownianTime: return "brownian_time";
    case ResidualKind::DiffusionWaveHalves: return "diffusion_wave_halves";
  }
  return "unknown";
}

namespace {

double half_order_density(double x, double t) {
  return std::exp(-x * x / (4.0 * t)) / std::sqrt(std::numbers::pi * t);
}

// L1 Caputo derivative of r -> g(r) on [0, t] with about t / step cells.
double caputo_on_grid(const std::function<double(double)>& g, double beta, double t, double step,
                      const char* where) {
  const long cells = std::lround(t / step);
  if (cells < kMinCells) too_coarse(where, step, t / (4.0 * kMinCells));
  const auto s = SampledFunction::sample(g, 0.0, t / static_cast<double>(cells), static_cast<std::size_t>(cells));
  return caputo(s, beta, s.time(s.values.size() - 1));
}

void check_stencil(const char* where, double step, double t) {
  if (step * kMinCells > t) too_coarse(where, step, t / (4.0 * kMinCells));
}

Residual finish(double lhs, double rhs) { return {lhs, rhs, std::abs(lhs - rhs)}; }

}  // namespace

Residual governing_residual(ResidualKind kind, const ResidualParams& params, double x, double t) {
  const double h = params.step;
  if (!(h > 0.0)) detail::throw_domain("governing_residual", "step > 0");
  if (!(t > 0.0)) detail::throw_domain("governing_residual", "t > 0");

  switch (kind) {
    case ResidualKind::FppMaster: {
      const double beta = params.beta;
      const double lambda = params.lambda;
      if (!(x >= 0.0) || x != std::floor(x)) detail::throw_domain("governing_residual", "n a nonnegative integer");
      if (!(beta > 0.0 && beta < 1.0)) detail::throw_domain("governing_residual", "0 < beta < 1");
      if (!(lambda > 0.0)) detail::throw_domain("governing_residual", "lambda > 0");
      const long n = static_cast<long>(x);
      const double lhs = caputo_on_grid([&](double r) { return fpp_pmf(beta, lambda, r, n); }, beta, t, h,
                                        "fpp_master");
      const double below = n > 0 ? fpp_pmf(beta, lambda, t, n - 1) : 0.0;
      return finish(lhs, -lambda * (fpp_pmf(beta, lambda, t, n) - below));
    }
    case ResidualKind::InverseDensity: {
      if (params.beta != 0.5) detail::throw_domain("governing_residual", "beta = 1/2 for inverse_density");
      if (!(x > 0.0)) detail::throw_domain("governing_residual", "x > 0");
      const double lhs = caputo_on_grid(
          [&](double r) { return r > 0.0 ? half_order_density(x, r) : 0.0; }, 0.5, t, h, "inverse_density");
      const double dx = -x / (2.0 * t) * half_order_density(x, t);
      return finish(lhs, -dx);
    }
    case ResidualKind::BrownianTime: {
      if (params.beta != 0.5) detail::throw_domain("governing_residual", "beta = 1/2 for brownian_time");
      check_stencil("brownian_time", h, t);
      const std::function<double(double)> f = params.f ? params.f : [](double y) { return std::exp(-y * y); };
      const std::function<double(double)> df =
          params.df ? params.df : [](double y) { return -2.0 * y * std::exp(-y * y); };
      // u = E f(x - E(t)), the shift semigroup f(x - t) run at the inverse stable time.
      const auto u = [&](double xx, double tt) {
        return quad::integrate_half_line([&](double y) { return f(xx - y) * half_order_density(y, tt); }, 0.0,
                                         1e-13);
      };
      const double dt = (u(x, t + h) - u(x, t - h)) / (2.0 * h);
      const double dxx = (u(x + h, t) - 2.0 * u(x, t) + u(x - h, t)) / (h * h);
      return finish(dt, -df(x) / std::sqrt(std::numbers::pi * t) + dxx);
    }
    case ResidualKind::DiffusionWaveHalves: {
      if (params.beta != 0.5) detail::throw_domain("governing_residual", "beta = 1/2 for diffusion_wave_halves");
      check_stencil("diffusion_wave_halves", h, t);
      const auto v = [](double xx, double tt) { return diffusion_wave_density(0.5, xx, tt); };
      const double dt = (v(x, t + h) - v(x, t - h)) / (2.0 * h);
      const double dxx = (v(x + h, t) - 2.0 * v(x, t) + v(x - h, t)) / (h * h);
      return finish(dt, dxx);
    }
  }
  detail::throw_domain("governing_residual", "a known kind");
}

}  // namespace fpp
