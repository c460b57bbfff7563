#pragma once

namespace fpp {

/// Truncation policy for the Mittag-Leffler series and asymptotic expansions.
struct SeriesControl {
  double abs_tol = 1e-12;
  int max_terms = 500;
  /// |z| above which E_beta(z), z < 0, is evaluated by its asymptotic series.
  double asymptotic_switch = 10.0;

  void validate() const;
};

enum class MlBranch { Exponential, Series, Asymptotic, Integral };

struct MlEvaluation {
  double value = 0.0;
  MlBranch branch = MlBranch::Series;
  int terms = 0;
};

/// One-parameter Mittag-Leffler function E_beta(z) = sum_k z^k / Gamma(1 + beta k)
/// for beta in (0, 1] and real z.
///
/// Negative arguments are evaluated by the power series while it is well
/// conditioned, by the optimally truncated alternating asymptotic series once
/// |z| >= asymptotic_switch, and otherwise by the completely monotone integral
///   E_beta(-t^beta) = int_0^inf e^{-r t} K_beta(r) dr.
/// Positive arguments use the power series only.
double ml_one(double beta, double z, const SeriesControl& ctl = {});
MlEvaluation ml_one_detailed(double beta, double z, const SeriesControl& ctl = {});

/// Three-parameter Mittag-Leffler (Prabhakar) function
///   E^gamma_{alpha,theta}(z) = sum_r (gamma)_r z^r / (r! Gamma(alpha r + theta)).
/// Series only; throws EvaluationError when the sum does not converge within
/// max_terms or when cancellation exceeds abs_tol.
double prabhakar(double gamma, double alpha, double theta, double z, const SeriesControl& ctl = {});

/// P(J > t) = E_beta(-lambda t^beta) for a Mittag-Leffler waiting time.
double ml_waiting_survival(double beta, double lambda, double t, const SeriesControl& ctl = {});

/// Density lambda t^{beta-1} E^1_{beta,beta}(-lambda t^beta), t > 0.
double ml_waiting_pdf(double beta, double lambda, double t, const SeriesControl& ctl = {});

/// 1/Gamma(x), exactly zero at the poles x = 0, -1, -2, ...
double recip_gamma(double x);

/// log|Gamma(x)|; reentrant.
double log_gamma(double x);

}  // namespace fpp
