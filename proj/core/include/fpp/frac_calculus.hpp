#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "fpp/transforms.hpp"

namespace fpp {

/// Samples g(t0 + i * step), i = 0..values.size() - 1.
struct SampledFunction {
  double t0 = 0.0;
  double step = 0.0;
  std::vector<double> values;

  static SampledFunction sample(const std::function<double(double)>& g, double t0, double step,
                                std::size_t cells);
  double time(std::size_t i) const { return t0 + static_cast<double>(i) * step; }
  /// Index of the grid point equal to t; DomainError when t is off the grid.
  std::size_t index_of(double t) const;
  void validate() const;
};

/// Caputo derivative of order beta in (0, 1) with lower terminal g.t0, by the
/// L1 scheme (g piecewise linear between samples). Error O(step^{2-beta}) for
/// smooth g. t must be a grid point after t0.
double caputo(const SampledFunction& g, double beta, double t);

/// Riemann-Liouville derivative, caputo + g(t0) (t - t0)^{-beta} / Gamma(1 - beta).
double riemann_liouville(const SampledFunction& g, double beta, double t);

/// int_0^1 caputo(g, beta, t) p(beta) d beta.
double distributed_order_deriv(const SampledFunction& g, const OrderDensity& p, double t);
/// sum_i w_i caputo(g, beta_i, t).
double distributed_order_deriv(const SampledFunction& g, const std::vector<MixtureComponent>& atoms, double t);

enum class ResidualKind {
  FppMaster,          // d^beta p(n, t) = -lambda (p(n, t) - p(n - 1, t))
  InverseDensity,     // d^beta h(x, t) = -d_x h(x, t), beta = 1/2
  BrownianTime,       // d_t u = -f'(x) / sqrt(pi t) + d_xx u, u(x, t) = int f(x - y) h(y, t) dy
  DiffusionWaveHalves // d_t v = d_xx v for v = h / 2 at beta = 1/2
};

ResidualKind residual_kind_from_string(const std::string& name);
std::string to_string(ResidualKind kind);

struct ResidualParams {
  double beta = 0.5;
  double lambda = 1.0;
  double step = 1e-3;
  /// Test function for BrownianTime and its derivative; default exp(-x^2).
  std::function<double(double)> f;
  std::function<double(double)> df;
};

struct Residual {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs|
};

/// Both sides of a governing equation at (x, t); x is the count n for FppMaster.
/// Throws ResolutionError (with a suggested step) when step is too coarse for t.
Residual governing_residual(ResidualKind kind, const ResidualParams& params, double x, double t);

}  // namespace fpp
