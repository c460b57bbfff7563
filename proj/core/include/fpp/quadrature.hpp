#pragma once

#include <functional>
#include <vector>

namespace fpp::quad {

using RealFunction = std::function<double(double)>;

struct Estimate {
  double value = 0.0;
  double error = 0.0;  // absolute error estimate reported by the rule
  double l1 = 0.0;     // integral of |f|, the scale the tolerance refers to
};

// Globally adaptive Gauss-Kronrod (15/31) on a finite interval.
Estimate gauss_kronrod(const RealFunction& f, double a, double b, double rel_tol = 1e-12);

// Double-exponential rule for integrable endpoint singularities on [a, b].
Estimate tanh_sinh(const RealFunction& f, double a, double b, double rel_tol = 1e-12);

// Double-exponential rule on [a, inf). Tolerates algebraic singularities at a.
Estimate exp_sinh(const RealFunction& f, double a, double rel_tol = 1e-12);

// Convenience wrappers returning the value, throwing EvaluationError when the
// error estimate exceeds `accept` times the requested tolerance.
double integrate(const RealFunction& f, double a, double b, double rel_tol = 1e-12);
double integrate_singular(const RealFunction& f, double a, double b, double rel_tol = 1e-12);
double integrate_half_line(const RealFunction& f, double a, double rel_tol = 1e-12);

// Gauss-Kronrod over consecutive pieces [x_0, x_1], [x_1, x_2], ...; the
// tolerance applies to the combined error, so negligible pieces may be rough.
double integrate_pieces(const RealFunction& f, const std::vector<double>& breakpoints, double rel_tol = 1e-12);

// Fixed n-point Gauss-Legendre on [a, b]; n in {7, 10, 15, 20, 25, 30}.
double gauss_legendre(const RealFunction& f, double a, double b, int n = 30);

}  // namespace fpp::quad
