#pragma once

#include <complex>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace fpp {

// ---------------------------------------------------------------------------
// Subordinator specifications (zero drift throughout)
// ---------------------------------------------------------------------------

/// psi(s) = s^beta.
struct StableSpec {
  double beta;
};

/// psi(s) = (s + a)^beta - a^beta.
struct TemperedStableSpec {
  double beta;
  double a;
};

struct MixtureComponent {
  double weight;
  double beta;
};

/// psi(s) = sum_i w_i s^{beta_i}.
struct StableMixtureSpec {
  std::vector<MixtureComponent> components;
};

/// Weight function p(beta) >= 0 on (0, 1) of a distributed-order subordinator,
/// nu(d beta) = p(beta) d beta.
class OrderDensity {
 public:
  enum class Kind { Uniform, Power, Polynomial, Custom };

  /// p(beta) = scale.
  static OrderDensity uniform(double scale = 1.0);
  /// p(beta) = scale * beta^{exponent - 1}; regularly varying at 0 when exponent < 1.
  static OrderDensity power(double scale, double exponent);
  /// p(beta) = sum_j c_j beta^j.
  static OrderDensity polynomial(std::vector<double> coefficients);
  /// Arbitrary weight; not serializable.
  static OrderDensity custom(std::function<double(double)> p, std::string label = "custom");

  double operator()(double beta) const;

  Kind kind() const { return kind_; }
  double scale() const { return scale_; }
  double exponent() const { return exponent_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  const std::string& label() const { return label_; }
  bool singular_at_zero() const { return kind_ == Kind::Power && exponent_ < 1.0; }

 private:
  OrderDensity() = default;

  Kind kind_ = Kind::Uniform;
  double scale_ = 1.0;
  double exponent_ = 1.0;
  std::vector<double> coefficients_;
  std::function<double(double)> custom_;
  std::string label_;
};

struct DistributedOrderSpec {
  OrderDensity density;
};

/// Parametric description of a driftless, strictly increasing subordinator D(t).
/// Immutable after construction; factories validate parameters.
class SubordinatorSpec {
 public:
  using Variant = std::variant<StableSpec, TemperedStableSpec, StableMixtureSpec, DistributedOrderSpec>;

  static SubordinatorSpec stable(double beta);
  static SubordinatorSpec tempered_stable(double beta, double a);
  static SubordinatorSpec stable_mixture(std::vector<MixtureComponent> components);
  static SubordinatorSpec distributed_order(OrderDensity density);

  const Variant& variant() const { return variant_; }
  /// "Stable", "TemperedStable", "StableMixture" or "DistributedOrder".
  std::string name() const;
  /// Exact path sampling is available (every variant except DistributedOrder).
  bool sampleable() const;

 private:
  explicit SubordinatorSpec(Variant v) : variant_(std::move(v)) {}

  Variant variant_;
};

/// Laplace exponent psi_D(s), E[exp(-s D(t))] = exp(-t psi_D(s)), s > 0.
double laplace_exponent(const SubordinatorSpec& spec, double s);

/// Analytic continuation of psi_D to the cut plane C \ (-inf, 0]; used by the
/// fixed-Talbot inversion.
std::complex<double> laplace_exponent(const SubordinatorSpec& spec, std::complex<double> s);

/// Levy tail phi_D(t, inf), t > 0.
double levy_tail(const SubordinatorSpec& spec, double t);

// ---------------------------------------------------------------------------
// Jump distributions for CTRWs
// ---------------------------------------------------------------------------

struct JumpAtom {
  double location;
  double probability;
};

class JumpDist {
 public:
  /// Y = 1 almost surely (the counting process itself).
  static JumpDist point_mass_one();
  static JumpDist atoms(std::vector<JumpAtom> atoms);

  const std::vector<JumpAtom>& support() const { return atoms_; }

  /// mu_hat(k) = sum_j p_j exp(-i k x_j).
  std::complex<double> characteristic(double k) const;
  /// psi_A(k) = lambda (1 - mu_hat(k)) of the compound Poisson process S(N_1(t)).
  std::complex<double> fourier_symbol(double lambda, double k) const;

 private:
  explicit JumpDist(std::vector<JumpAtom> atoms) : atoms_(std::move(atoms)) {}

  std::vector<JumpAtom> atoms_;
};

// ---------------------------------------------------------------------------
// Laplace transform numerics
// ---------------------------------------------------------------------------

using TimeFunction = std::function<double(double)>;

struct LaplaceForwardOptions {
  double tol = 1e-12;
  /// alpha in [0, 1) such that f(t) = O(t^{-alpha}) as t -> 0. A nonzero value
  /// switches to the substitution t = v^{1/(1-alpha)}, which removes the
  /// singularity before quadrature.
  double singularity_exponent = 0.0;
};

/// int_0^inf exp(-s t) f(t) dt for s > 0.
double laplace_forward(const TimeFunction& f, double s, const LaplaceForwardOptions& opts = {});

/// A transform F(s) evaluable on real arguments, and optionally on the complex
/// plane (required by fixed-Talbot).
class LaplaceTransform {
 public:
  using Complex = std::complex<double>;
  using ComplexFn = std::function<Complex(Complex)>;
  using RealFn = std::function<double(double)>;

  LaplaceTransform(ComplexFn f);  // NOLINT(google-explicit-constructor)
  LaplaceTransform(RealFn f);     // NOLINT(google-explicit-constructor)

  static LaplaceTransform complex(ComplexFn f) { return LaplaceTransform(std::move(f)); }
  static LaplaceTransform real(RealFn f) { return LaplaceTransform(std::move(f)); }

  bool has_complex() const { return static_cast<bool>(complex_); }
  Complex operator()(Complex s) const;
  double operator()(double s) const;

 private:
  ComplexFn complex_;
  RealFn real_;
};

enum class InversionMethod { FixedTalbot, GaverStehfest };

struct InversionOptions {
  InversionMethod method = InversionMethod::FixedTalbot;
  int talbot_nodes = 32;
  int stehfest_terms = 14;
  /// A result is rejected as unstable when its estimated rounding error
  /// exceeds max(abs_tol, rel_tol * |value|).
  double abs_tol = 1e-9;
  double rel_tol = 1e-7;
  /// Gaver-Stehfest with n=14 carries ~1e-7 truncation error and weights of
  /// size ~1e8, so only a genuine term blow-up is rejected.
  double stehfest_rel_tol = 1e-4;
};

struct InversionResult {
  double value = 0.0;
  double rounding_estimate = 0.0;
  InversionMethod method = InversionMethod::FixedTalbot;
};

/// Numerical inverse Laplace transform at t > 0. Throws EvaluationError naming
/// the other method when the chosen one is unstable.
InversionResult laplace_invert_detailed(const LaplaceTransform& F, double t,
                                        const InversionOptions& opts = {});
double laplace_invert(const LaplaceTransform& F, double t, const InversionOptions& opts = {});

/// Fixed-Talbot first, Gaver-Stehfest on instability; throws if both fail.
double laplace_invert_with_fallback(const LaplaceTransform& F, double t,
                                    const InversionOptions& opts = {});

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_error = 0.0;
};

/// int_0^inf e^{-su} phi_D(u, inf) du against s^{-1} psi_D(s).
IdentityCheck bern_identity_check(const SubordinatorSpec& spec, double s);

}  // namespace fpp
