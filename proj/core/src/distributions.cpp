#include "fpp/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fpp/errors.hpp"
#include "fpp/quadrature.hpp"
#include "fpp/special_functions.hpp"
#include "special_functions_internal.hpp"

namespace fpp {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void check_beta_open(const char* where, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) detail::throw_domain(where, "beta in (0, 1)");
}

void check_rate(const char* where, double lambda) {
  if (!(lambda > 0.0)) detail::throw_domain(where, "lambda > 0");
}

double poisson_pmf(double mean, long n) {
  if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(n) * std::log(mean) - mean - log_gamma(static_cast<double>(n) + 1.0));
}

// log s^{-1} psi (lambda+psi)^{-1} (lambda/(lambda+psi))^n, valid for real or complex s.
template <class T>
T pmf_laplace_from_psi(T psi, T s, double lambda, long n) {
  const T denom = lambda + psi;
  return std::exp(std::log(psi / s) - std::log(denom) + static_cast<double>(n) * (std::log(lambda) - std::log(denom)));
}

InversionOptions default_inversion() { return {}; }

}  // namespace

// ---------------------------------------------------------------------------
// Count distributions
// ---------------------------------------------------------------------------

double pmf_laplace(const SubordinatorSpec& spec, double lambda, long n, double s) {
  check_rate("pmf_laplace", lambda);
  if (n < 0) detail::throw_domain("pmf_laplace", "n >= 0");
  if (!(s > 0.0)) detail::throw_domain("pmf_laplace", "s > 0");
  return pmf_laplace_from_psi(laplace_exponent(spec, s), s, lambda, n);
}

Complex pmf_laplace(const SubordinatorSpec& spec, double lambda, long n, Complex s) {
  check_rate("pmf_laplace", lambda);
  if (n < 0) detail::throw_domain("pmf_laplace", "n >= 0");
  return pmf_laplace_from_psi(laplace_exponent(spec, s), s, lambda, n);
}

double general_pmf(const SubordinatorSpec& spec, double lambda, double t, long n) {
  check_rate("general_pmf", lambda);
  if (n < 0) detail::throw_domain("general_pmf", "n >= 0");
  if (!(t > 0.0)) detail::throw_domain("general_pmf", "t > 0");
  const LaplaceTransform F = LaplaceTransform::complex(
      [&spec, lambda, n](Complex s) { return pmf_laplace(spec, lambda, n, s); });
  return laplace_invert_with_fallback(F, t, default_inversion());
}

double fpp_pmf(double beta, double lambda, double t, long n) {
  if (!(beta > 0.0 && beta <= 1.0)) detail::throw_domain("fpp_pmf", "beta in (0, 1]");
  check_rate("fpp_pmf", lambda);
  if (!(t >= 0.0)) detail::throw_domain("fpp_pmf", "t >= 0");
  if (n < 0) detail::throw_domain("fpp_pmf", "n >= 0");
  if (t == 0.0) return n == 0 ? 1.0 : 0.0;
  if (beta == 1.0) return poisson_pmf(lambda * t, n);
  const double x = lambda * std::pow(t, beta);
  if (n == 0) return ml_one(beta, -x);

  const SeriesControl ctl;
  const auto nd = static_cast<double>(n);
  const detail::SeriesResult series =
      detail::prabhakar_series(nd + 1.0, beta, beta * nd + 1.0, -x, nd * std::log(x), ctl);
  if (series.converged && series.rounding <= ctl.abs_tol) return std::max(series.value, 0.0);

  // Large lambda t^beta: the alternating series cancels; invert the transform instead.
  const auto spec = SubordinatorSpec::stable(beta);
  const LaplaceTransform F =
      LaplaceTransform::complex([&spec, lambda, n](Complex s) { return pmf_laplace(spec, lambda, n, s); });
  try {
    return std::max(laplace_invert(F, t, default_inversion()), 0.0);
  } catch (const EvaluationError&) {
    throw EvaluationError("fpp_pmf: series and inversion both lost accuracy", series.value);
  }
}

double waiting_survival_general(const SubordinatorSpec& spec, double lambda, double t) {
  check_rate("waiting_survival_general", lambda);
  if (!(t > 0.0)) detail::throw_domain("waiting_survival_general", "t > 0");
  const LaplaceTransform F = LaplaceTransform::complex([&spec, lambda](Complex s) {
    const Complex psi = laplace_exponent(spec, s);
    return psi / (s * (lambda + psi));
  });
  return laplace_invert_with_fallback(F, t, default_inversion());
}

double distributed_order_survival_kochubei(const OrderDensity& p, double lambda, double t) {
  check_rate("distributed_order_survival_kochubei", lambda);
  if (!(t > 0.0)) detail::throw_domain("distributed_order_survival_kochubei", "t > 0");

  // With u = log r the integrand is e^{-t e^u} Phi(e^u) du. As u -> -inf,
  // r^beta = e^{beta u} confines the beta integrals to beta < O(1/|u|), so
  // they are split there; Phi ~ 1/u^2 leaves an algebraic tail.
  auto beta_integral = [&p](double u, auto&& trig) {
    auto f = [&](double b) { return std::exp(b * u) * trig(kPi * b) * p(b); };
    const double cut = std::abs(u) > 60.0 ? 60.0 / std::abs(u) : 0.5;
    const double lo = u < 0.0 ? cut : 1.0 - cut;
    if (p.singular_at_zero()) {
      // b = w / |u| keeps the singular piece on a unit-scale interval.
      const double scale = u < 0.0 ? lo : 1.0;
      const double head =
          scale * quad::integrate_singular(
              [&](double w) { return w * scale > 0.0 ? f(w * scale) : 0.0; }, 0.0, lo / scale, 1e-12);
      return head + quad::integrate(f, lo, 1.0, 1e-12);
    }
    return quad::integrate_pieces(f, {0.0, lo, 1.0}, 1e-12);
  };
  auto integrand = [&](double u) {
    const double damp = std::exp(-t * std::exp(u));
    if (damp == 0.0) return 0.0;
    const double a = beta_integral(u, [](double x) { return std::cos(x); });
    const double b = beta_integral(u, [](double x) { return std::sin(x); });
    return damp * b / ((a + lambda) * (a + lambda) + b * b);
  };
  const double u0 = -std::log(t);
  const double upper = quad::integrate_half_line(integrand, u0, 1e-10);
  const double lower = quad::integrate_half_line([&](double v) { return integrand(u0 - v); }, 0.0, 1e-10);
  return lambda / kPi * (upper + lower);
}

// ---------------------------------------------------------------------------
// Stable and inverse stable densities
// ---------------------------------------------------------------------------

namespace {

// log a(u) = log[sin((1-b) pi u) sin(b pi u)^{b/(1-b)} / sin(pi u)^{1/(1-b)}].
double zolotarev_log_a(double beta, double u) {
  const double c = 1.0 - beta;
  return std::log(std::sin(c * kPi * u)) + beta / c * std::log(std::sin(beta * kPi * u)) -
         std::log(std::sin(kPi * std::min(u, 1.0 - u))) / c;
}

// Integrate over u in (0, 1), splitting where the integrand tends to peak.
double zolotarev_integral(const std::function<double(double)>& f) {
  return quad::integrate_pieces(f, {0.0, 0.5, 0.9, 1.0}, 1e-11);
}

double inverse_stable_by_zolotarev(double beta, double x, double t) {
  const double y = t * std::pow(x, -1.0 / beta);
  return t / beta * std::pow(x, -1.0 - 1.0 / beta) * stable_density(beta, y);
}

// h(x, t) = t^{-beta} sum_k (-z)^k / (k! Gamma(1 - beta - beta k)), z = x t^{-beta},
// inverted term by term from s^{beta-1} exp(-x s^beta). For z <= 1 the terms
// shrink from the start, so there is no cancellation to speak of. NaN outside.
double inverse_stable_small_x(double beta, double x, double t) {
  const double z = x * std::pow(t, -beta);
  if (!(z <= 1.0)) return std::numeric_limits<double>::quiet_NaN();
  detail::CompensatedSum sum;
  double power = 1.0;  // z^k / k!
  double magnitude = 0.0;
  int small_terms = 0;
  for (int k = 0; k < 400; ++k) {
    if (k > 0) power *= -z / k;
    const double term = power * recip_gamma(1.0 - beta * (k + 1));
    sum.add(term);
    magnitude += std::fabs(term);
    small_terms = std::fabs(term) <= 1e-17 * std::fabs(sum.value()) ? small_terms + 1 : 0;
    if (small_terms >= 2) {
      if (magnitude > 1e3 * std::fabs(sum.value())) break;
      return sum.value() * std::pow(t, -beta);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Inversion of weight * s^{beta-1} exp(-x s^beta). For beta > 1/2 the factor
// exp(-x s^beta) grows along the left part of the Talbot contour, and a single
// node can dominate without any cancellation, so two contours are compared;
// relative disagreement or a nonpositive value selects the Zolotarev form
// (Talbot noise sits near 1e-20 absolute, far above the tail of h).
double inverse_stable_by_inversion(double beta, double x, double t, double weight) {
  const double small = inverse_stable_small_x(beta, x, t);
  if (std::isfinite(small)) return weight * small;
  const LaplaceTransform F = LaplaceTransform::complex(
      [beta, x, weight](Complex s) { return weight * std::pow(s, beta - 1.0) * std::exp(-x * std::pow(s, beta)); });
  try {
    InversionOptions opts = default_inversion();
    const double v1 = laplace_invert(F, t, opts);
    opts.talbot_nodes = 40;
    const double v2 = laplace_invert(F, t, opts);
    if (v1 > 0.0 && std::fabs(v1 - v2) <= 1e-9 * v1) return v1;
  } catch (const EvaluationError&) {
  }
  return weight * inverse_stable_by_zolotarev(beta, x, t);
}

// Convergent expansion in y^{-beta} for large y:
// g(y) = (1/pi) sum_k (-1)^{k+1} Gamma(beta k + 1) / k! sin(pi beta k) y^{-beta k - 1},
// P(D > y) = (1/pi) sum_k (-1)^{k+1} Gamma(beta k) / k! sin(pi beta k) y^{-beta k}.
// The coefficients decay like k^{(beta-1)k}; used where y^{-beta} < 1/2.
double stable_large_y_series(double beta, double y, bool density) {
  const double log_z = -beta * std::log(y);
  detail::CompensatedSum sum;
  double prev = INFINITY;
  for (int k = 1; k <= 400; ++k) {
    const double kd = k;
    const double log_mag = log_gamma(beta * kd + (density ? 1.0 : 0.0)) - log_gamma(kd + 1.0) + kd * log_z;
    const double mag = std::exp(log_mag);
    const double term = (k % 2 == 1 ? 1.0 : -1.0) * std::sin(kPi * beta * kd) * mag;
    sum.add(term);
    if (mag < 1e-17 * std::fabs(sum.value()) && mag < prev) break;
    prev = mag;
  }
  const double value = sum.value() / kPi;
  return density ? value / y : value;
}

bool use_large_y_series(double beta, double y) { return -beta * std::log(y) < std::log(0.5); }

double levy_half_density(double x, double y) {
  if (y <= 0.0) return 0.0;
  return std::exp(std::log(x / (2.0 * std::sqrt(kPi))) - 1.5 * std::log(y) - x * x / (4.0 * y));
}

}  // namespace

double stable_density(double beta, double y) {
  check_beta_open("stable_density", beta);
  if (!(y > 0.0)) return 0.0;
  if (use_large_y_series(beta, y)) return std::max(stable_large_y_series(beta, y, true), 0.0);
  const double c = 1.0 - beta;
  const double log_y = std::log(y);
  const double big_y = std::exp(-beta / c * log_y);
  // a(u) >= a(0) = (1-b) b^{b/(1-b)} and a e^{-aY} decreases in a once aY >= 1,
  // so the integral is below a(0) e^{-a(0) Y}.
  const double log_prefactor = std::log(beta / c) - log_y / c;
  const double a0 = c * std::pow(beta, beta / c);
  if (a0 * big_y >= 1.0 && log_prefactor + std::log(a0) - a0 * big_y < -745.0) return 0.0;
  auto f = [&](double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    const double log_a = zolotarev_log_a(beta, u);
    const double a = std::exp(log_a);
    return std::exp(log_a - a * big_y);
  };
  return std::exp(log_prefactor) * zolotarev_integral(f);
}

double stable_cdf(double beta, double y) {
  check_beta_open("stable_cdf", beta);
  if (!(y > 0.0)) return 0.0;
  if (use_large_y_series(beta, y)) return std::clamp(1.0 - stable_large_y_series(beta, y, false), 0.0, 1.0);
  const double big_y = std::pow(y, -beta / (1.0 - beta));
  if ((1.0 - beta) * std::pow(beta, beta / (1.0 - beta)) * big_y > 745.0) return 0.0;
  auto f = [&](double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    return std::exp(-std::exp(zolotarev_log_a(beta, u)) * big_y);
  };
  return std::clamp(zolotarev_integral(f), 0.0, 1.0);
}

double inverse_stable_density(double beta, double x, double t) {
  check_beta_open("inverse_stable_density", beta);
  if (!(x > 0.0)) detail::throw_domain("inverse_stable_density", "x > 0");
  if (!(t > 0.0)) detail::throw_domain("inverse_stable_density", "t > 0");
  if (beta == 0.5) {
    // Levy density of D(x) against the tail (t - y)^{-1/2} / Gamma(1/2). With
    // y = x^2 w the Levy factor becomes the x-free density of D(1), which
    // keeps the peak near w = 1/6 resolvable for any x.
    const double x2 = x * x;
    const double mid = 0.5 * t;
    auto tail = [t](double y) { return y >= t ? 0.0 : 1.0 / std::sqrt(kPi * (t - y)); };
    auto in_w = [&](double w) { return levy_half_density(1.0, w) * tail(x2 * w); };
    auto in_y = [&](double y) { return levy_half_density(x, y) * tail(y); };
    double head = 0.0;
    if (8.0 * x2 < mid) {
      // Beyond w = 8 the Levy factor decays like w^{-3/2}; integrate in log w.
      const double log_x2 = 2.0 * std::log(x);
      auto in_log_w = [&](double v) {
        const double y = std::exp(v + log_x2);
        return std::exp(-0.5 * v - 0.25 * std::exp(-v)) / (2.0 * std::sqrt(kPi)) * tail(y);
      };
      head = quad::integrate(in_w, 0.0, 8.0, 1e-11) +
             quad::integrate(in_log_w, std::log(8.0), std::log(mid) - log_x2, 1e-11);
    } else {
      head = quad::integrate(in_y, 0.0, mid, 1e-11);
    }
    // y = t - z^2 absorbs the (t - y)^{-1/2} singularity.
    auto in_z = [&](double z) { return 2.0 / std::sqrt(kPi) * levy_half_density(x, t - z * z); };
    return head + quad::integrate(in_z, 0.0, std::sqrt(t - mid), 1e-11);
  }
  return inverse_stable_by_inversion(beta, x, t, 1.0);
}

double inverse_stable_density_convolution(double beta, double x, double t) {
  check_beta_open("inverse_stable_density_convolution", beta);
  if (!(x > 0.0)) detail::throw_domain("inverse_stable_density_convolution", "x > 0");
  if (!(t > 0.0)) detail::throw_domain("inverse_stable_density_convolution", "t > 0");
  const double scale = std::pow(x, -1.0 / beta);
  const double tail_norm = recip_gamma(1.0 - beta);
  const double mid = 0.5 * t;
  // [0, t/2] in v = log y: g_x vanishes like exp(-c y^{-beta/(1-beta)}) at 0 and
  // has its mass near y ~ x^{1/beta}. Below z_lo the density of D(1) underflows.
  const double c = 1.0 - beta;
  const double z_lo = std::pow(800.0 / (c * std::pow(beta, beta / c)), -c / beta);
  auto in_v = [&](double v) {
    const double y = std::exp(v);
    return std::pow(t - y, -beta) * tail_norm * scale * stable_density(beta, y * scale) * y;
  };
  std::vector<double> breaks{std::log(z_lo / scale), std::log(mid)};
  for (double k : {1e-2, 1e-1, 1.0, 1e1, 1e2}) {
    const double v = std::log(k / scale);
    if (v > breaks[0] && v < breaks[1]) breaks.push_back(v);
  }
  std::sort(breaks.begin(), breaks.end());
  double head = breaks[0] < breaks.back() ? quad::integrate_pieces(in_v, breaks, 1e-9) : 0.0;
  // [t/2, t] with t - y = w^m, m = 1/(1-beta), which turns (t - y)^{-beta} dy into m dw.
  const double m = 1.0 / c;
  auto in_w = [&](double w) {
    const double y = t - std::pow(w, m);
    return m * tail_norm * scale * stable_density(beta, y * scale);
  };
  return head + quad::integrate(in_w, 0.0, std::pow(t - mid, 1.0 / m), 1e-9);
}

double diffusion_wave_density(double beta, double x, double t) {
  check_beta_open("diffusion_wave_density", beta);
  if (!(t > 0.0)) detail::throw_domain("diffusion_wave_density", "t > 0");
  if (x == 0.0) return 0.5 * std::pow(t, -beta) * recip_gamma(1.0 - beta);
  return inverse_stable_by_inversion(beta, std::fabs(x), t, 0.5);
}

double fpp_pmf_mixture(double beta, double lambda, double t, long n) {
  if (!(beta > 0.0 && beta <= 1.0)) detail::throw_domain("fpp_pmf_mixture", "beta in (0, 1]");
  check_rate("fpp_pmf_mixture", lambda);
  if (!(t > 0.0)) detail::throw_domain("fpp_pmf_mixture", "t > 0");
  if (n < 0) detail::throw_domain("fpp_pmf_mixture", "n >= 0");
  // h(., t) degenerates to a point mass at t.
  if (beta == 1.0) return poisson_pmf(lambda * t, n);
  const auto nd = static_cast<double>(n);
  const double log_norm = log_gamma(nd + 1.0);
  auto f = [&](double x) {
    if (x <= 0.0) return n == 0 ? inverse_stable_density(beta, 1e-300, t) : 0.0;
    const double log_w = nd * std::log(lambda * x) - lambda * x - log_norm;
    if (log_w < -700.0) return 0.0;
    return std::exp(log_w) * inverse_stable_density(beta, x, t);
  };
  return quad::integrate_half_line(f, 0.0, 1e-9);
}

double renewal_mean(const SubordinatorSpec& spec, double lambda, double t) {
  check_rate("renewal_mean", lambda);
  if (!(t > 0.0)) detail::throw_domain("renewal_mean", "t > 0");
  const LaplaceTransform F =
      LaplaceTransform::complex([&spec, lambda](Complex s) { return lambda / (s * laplace_exponent(spec, s)); });
  return laplace_invert_with_fallback(F, t, default_inversion());
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

long pmf_truncation_index(const SubordinatorSpec& spec, double lambda, double t, double tail_tol) {
  check_rate("pmf_truncation_index", lambda);
  if (!(t > 0.0)) detail::throw_domain("pmf_truncation_index", "t > 0");
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) detail::throw_domain("pmf_truncation_index", "tail_tol in (0, 1)");
  const double log_q = std::log(lambda) - std::log(lambda + laplace_exponent(spec, 1.0 / t));
  const double needed = (std::log(tail_tol) - 1.0) / log_q;  // N + 1 > needed
  return std::max(0L, static_cast<long>(std::floor(needed)));
}

PmfTable pmf_table(const SubordinatorSpec& spec, double lambda, double t, double tail_tol) {
  const long n_max = pmf_truncation_index(spec, lambda, t, tail_tol);
  PmfTable table{spec, lambda, t, {}, 0.0};
  table.rows.reserve(static_cast<std::size_t>(n_max) + 1);
  const auto* stable = std::get_if<StableSpec>(&spec.variant());
  for (long n = 0; n <= n_max; ++n) {
    const double p = stable ? fpp_pmf(stable->beta, lambda, t, n) : general_pmf(spec, lambda, t, n);
    table.rows.push_back({n, std::max(p, 0.0)});
  }
  const double log_q = std::log(lambda) - std::log(lambda + laplace_exponent(spec, 1.0 / t));
  table.tail_mass_bound = std::exp(1.0 + static_cast<double>(n_max + 1) * log_q);
  return table;
}

}  // namespace fpp
