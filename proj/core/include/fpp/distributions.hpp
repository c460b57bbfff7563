#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fpp/transforms.hpp"

namespace fpp {

/// p(n, t) = (lambda t^beta)^n E^{n+1}_{beta, beta n + 1}(-lambda t^beta), beta in (0, 1].
/// Falls back to Laplace inversion where the series loses accuracy.
double fpp_pmf(double beta, double lambda, double t, long n);

/// Laplace transform in t of P(N_D(t) = n):
/// s^{-1} psi(s) / (lambda + psi(s)) * (lambda / (lambda + psi(s)))^n.
double pmf_laplace(const SubordinatorSpec& spec, double lambda, long n, double s);
std::complex<double> pmf_laplace(const SubordinatorSpec& spec, double lambda, long n, std::complex<double> s);

/// P(N_D(t) = n) by inversion of pmf_laplace.
double general_pmf(const SubordinatorSpec& spec, double lambda, double t, long n);

/// P(J > t) = E[exp(-lambda E(t))] by inversion of psi(s) / (s (lambda + psi(s))).
double waiting_survival_general(const SubordinatorSpec& spec, double lambda, double t);

/// P(J > t) for a distributed-order subordinator by the real-line integral
/// (lambda/pi) int_0^inf r^{-1} e^{-t r} Phi(r) dr, with
/// Phi = B / ((A + lambda)^2 + B^2), A + iB = int r^beta e^{i pi beta} p(beta) d beta.
double distributed_order_survival_kochubei(const OrderDensity& p, double lambda, double t);

/// Density of the standard beta-stable law D(1) (Laplace transform exp(-s^beta)),
/// by Zolotarev's integral representation.
double stable_density(double beta, double y);
/// P(D(1) <= y), same representation.
double stable_cdf(double beta, double y);

/// Density h(x, t) of the inverse stable subordinator E(t).
double inverse_stable_density(double beta, double x, double t);

/// h(x, t) = int_0^t phi(t - y) g_x(y) dy with g_x the density of D(x) and
/// phi(u) = u^{-beta}/Gamma(1-beta); an inversion-free reference.
double inverse_stable_density_convolution(double beta, double x, double t);

/// Solution v(x, t) of the fractional diffusion-wave problem, inverted from
/// (1/2) s^{beta-1} exp(-|x| s^beta); 2 v(x, t) = h(|x|, t).
double diffusion_wave_density(double beta, double x, double t);

/// int_0^inf e^{-lambda x} (lambda x)^n / n! h(x, t) dx.
double fpp_pmf_mixture(double beta, double lambda, double t, long n);

/// M(t) = E[N_D(t)] by inversion of lambda / (s psi(s)).
double renewal_mean(const SubordinatorSpec& spec, double lambda, double t);

struct PmfRow {
  long n;
  double prob;
};

struct PmfTable {
  SubordinatorSpec spec;
  double lambda = 0.0;
  double t = 0.0;
  std::vector<PmfRow> rows;
  /// Upper bound on P(N(t) > rows.back().n).
  double tail_mass_bound = 0.0;
};

/// Smallest N with e (lambda / (lambda + psi(1/t)))^{N+1} < tail_tol, which bounds
/// P(N(t) > N) by Chernoff's inequality at s = 1/t.
long pmf_truncation_index(const SubordinatorSpec& spec, double lambda, double t, double tail_tol = 1e-10);

/// p(n, t) for n = 0..N*, with fpp_pmf for Stable specs and inversion otherwise.
PmfTable pmf_table(const SubordinatorSpec& spec, double lambda, double t, double tail_tol = 1e-10);

}  // namespace fpp
