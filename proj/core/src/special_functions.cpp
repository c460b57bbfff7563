#include "fpp/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fpp/errors.hpp"
#include "fpp/quadrature.hpp"
#include "special_functions_internal.hpp"

namespace fpp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

void check_beta(const char* where, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) detail::throw_domain(where, "beta in (0, 1]");
}

// K_beta(r) = sin(beta pi) r^{beta-1} / (pi (r^{2 beta} + 2 r^beta cos(beta pi) + 1)),
// the spectral density of the completely monotone function t -> E_beta(-t^beta).
double ml_spectral_density(double beta, double r) {
  const double rb = std::pow(r, beta);
  const double denom = rb * rb + 2.0 * rb * std::cos(beta * kPi) + 1.0;
  return std::sin(beta * kPi) * rb / r / (kPi * denom);
}

// E_beta(-tau^beta) by quadrature of the spectral representation.
double ml_negative_integral(double beta, double tau) {
  auto integrand = [beta, tau](double u) {
    const double e = std::exp(-u);
    if (e == 0.0) return 0.0;
    return e * ml_spectral_density(beta, u / tau) / tau;
  };
  return quad::integrate_half_line(integrand, 0.0, 1e-13);
}

// -d/dtau E_beta(-tau^beta).
double ml_negative_integral_derivative(double beta, double tau) {
  auto integrand = [beta, tau](double u) {
    const double e = std::exp(-u);
    if (e == 0.0) return 0.0;
    return u * e * ml_spectral_density(beta, u / tau);
  };
  return quad::integrate_half_line(integrand, 0.0, 1e-13) / (tau * tau);
}

struct AsymptoticResult {
  double value = 0.0;
  double error = std::numeric_limits<double>::infinity();
  int terms = 0;
};

// E_beta(-x) ~ sum_{k>=1} (-1)^{k+1} x^{-k} / Gamma(1 - beta k), truncated
// before its smallest term. 1/Gamma(1 - beta k) = Gamma(beta k) sin(pi beta k) / pi.
AsymptoticResult ml_asymptotic(double beta, double x, const SeriesControl& ctl) {
  AsymptoticResult out;
  detail::CompensatedSum sum;
  const double log_x = std::log(x);
  double previous_bound = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= ctl.max_terms; ++k) {
    const double bk = beta * k;
    const double log_bound = log_gamma(bk) - k * log_x - std::log(kPi);
    const double bound = std::exp(log_bound);
    if (bound > previous_bound) break;
    previous_bound = bound;
    out.error = bound;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    // sin(pi beta k) vanishes at integer beta k; use the reduced argument.
    const double frac = bk - 2.0 * std::floor(bk / 2.0);
    const double s = (frac == std::floor(frac)) ? 0.0 : std::sin(kPi * frac);
    sum.add(sign * bound * s);
    out.terms = k;
    if (bound < 1e-3 * ctl.abs_tol) break;
  }
  out.value = sum.value();
  return out;
}

}  // namespace

void SeriesControl::validate() const {
  if (!(abs_tol > 0.0)) detail::throw_domain("SeriesControl", "abs_tol > 0");
  if (max_terms < 1) detail::throw_domain("SeriesControl", "max_terms >= 1");
  if (!(asymptotic_switch > 0.0)) detail::throw_domain("SeriesControl", "asymptotic_switch > 0");
}

double log_gamma(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double recip_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  if (x > 170.0) return std::exp(-log_gamma(x));
  return 1.0 / std::tgamma(x);
}

namespace detail {

SeriesResult prabhakar_series(double gamma, double alpha, double theta, double z,
                              double log_scale, const SeriesControl& ctl) {
  SeriesResult out;
  if (z == 0.0) {
    out.value = std::exp(log_scale - log_gamma(theta));
    out.terms = 1;
    out.converged = true;
    return out;
  }
  const double log_abs_z = std::log(std::fabs(z));
  const double lg_gamma = log_gamma(gamma);
  CompensatedSum sum;
  double max_term = 0.0;
  double max_log = 0.0;
  double previous_log = std::numeric_limits<double>::infinity();
  for (int r = 0; r < ctl.max_terms; ++r) {
    const double log_term = log_scale + log_gamma(gamma + r) - lg_gamma - log_gamma(r + 1.0) -
                            log_gamma(alpha * r + theta) + r * log_abs_z;
    const double magnitude = std::exp(log_term);
    const double term = (z < 0.0 && (r % 2 == 1)) ? -magnitude : magnitude;
    sum.add(term);
    out.terms = r + 1;
    if (magnitude > max_term) {
      max_term = magnitude;
      max_log = std::fabs(log_term);
    }
    const bool decreasing = log_term < previous_log;
    previous_log = log_term;
    if (r > 0 && decreasing &&
        magnitude <= kEps * std::max(std::fabs(sum.value()), 1e-3 * ctl.abs_tol)) {
      out.converged = true;
      break;
    }
  }
  out.value = sum.value();
  // Each term carries a relative error of roughly |log term| ulps from exp().
  out.rounding = max_term * kEps * (16.0 + max_log) * std::sqrt(static_cast<double>(out.terms));
  return out;
}

}  // namespace detail

MlEvaluation ml_one_detailed(double beta, double z, const SeriesControl& ctl) {
  check_beta("ml_one", beta);
  ctl.validate();
  if (!std::isfinite(z)) detail::throw_domain("ml_one", "finite z");

  MlEvaluation out;
  if (beta == 1.0) {
    out.value = std::exp(z);
    out.branch = MlBranch::Exponential;
    return out;
  }
  if (z == 0.0) {
    out.value = 1.0;
    out.terms = 1;
    return out;
  }

  const double x = -z;
  if (z < 0.0 && x >= ctl.asymptotic_switch) {
    const auto asym = ml_asymptotic(beta, x, ctl);
    if (asym.error <= ctl.abs_tol) {
      out.value = asym.value;
      out.branch = MlBranch::Asymptotic;
      out.terms = asym.terms;
      return out;
    }
    out.value = ml_negative_integral(beta, std::pow(x, 1.0 / beta));
    out.branch = MlBranch::Integral;
    return out;
  }

  const auto series = detail::prabhakar_series(1.0, beta, 1.0, z, 0.0, ctl);
  if (z > 0.0) {
    if (!series.converged) {
      throw EvaluationError("ml_one: series did not converge within " +
                                std::to_string(ctl.max_terms) + " terms",
                            series.value);
    }
    out.value = series.value;
    out.terms = series.terms;
    return out;
  }
  if (series.converged && series.rounding <= ctl.abs_tol) {
    out.value = series.value;
    out.terms = series.terms;
    return out;
  }
  out.value = ml_negative_integral(beta, std::pow(x, 1.0 / beta));
  out.branch = MlBranch::Integral;
  return out;
}

double ml_one(double beta, double z, const SeriesControl& ctl) {
  return ml_one_detailed(beta, z, ctl).value;
}

double prabhakar(double gamma, double alpha, double theta, double z, const SeriesControl& ctl) {
  if (!(gamma > 0.0)) detail::throw_domain("prabhakar", "gamma > 0");
  if (!(alpha > 0.0 && alpha <= 1.0)) detail::throw_domain("prabhakar", "alpha in (0, 1]");
  if (!(theta > 0.0)) detail::throw_domain("prabhakar", "theta > 0");
  if (!std::isfinite(z)) detail::throw_domain("prabhakar", "finite z");
  ctl.validate();
  const auto series = detail::prabhakar_series(gamma, alpha, theta, z, 0.0, ctl);
  if (!series.converged) {
    throw EvaluationError("prabhakar: series did not converge within " +
                              std::to_string(ctl.max_terms) + " terms",
                          series.value);
  }
  if (series.rounding > ctl.abs_tol) {
    throw EvaluationError("prabhakar: cancellation error " + std::to_string(series.rounding) +
                              " exceeds abs_tol",
                          series.value);
  }
  return series.value;
}

double ml_waiting_survival(double beta, double lambda, double t, const SeriesControl& ctl) {
  check_beta("ml_waiting_survival", beta);
  if (!(lambda > 0.0)) detail::throw_domain("ml_waiting_survival", "lambda > 0");
  if (!(t >= 0.0)) detail::throw_domain("ml_waiting_survival", "t >= 0");
  if (t == 0.0) return 1.0;
  return ml_one(beta, -lambda * std::pow(t, beta), ctl);
}

double ml_waiting_pdf(double beta, double lambda, double t, const SeriesControl& ctl) {
  check_beta("ml_waiting_pdf", beta);
  if (!(lambda > 0.0)) detail::throw_domain("ml_waiting_pdf", "lambda > 0");
  if (!(t > 0.0)) detail::throw_domain("ml_waiting_pdf", "t > 0");
  ctl.validate();
  if (beta == 1.0) return lambda * std::exp(-lambda * t);

  const double x = lambda * std::pow(t, beta);
  const double log_scale = std::log(lambda) + (beta - 1.0) * std::log(t);
  const auto series = detail::prabhakar_series(1.0, beta, beta, -x, log_scale, ctl);
  if (series.converged && series.rounding <= ctl.abs_tol * std::max(1.0, std::fabs(series.value))) {
    return series.value;
  }
  const double tau = std::pow(lambda, 1.0 / beta) * t;
  return std::pow(lambda, 1.0 / beta) * ml_negative_integral_derivative(beta, tau);
}

}  // namespace fpp
