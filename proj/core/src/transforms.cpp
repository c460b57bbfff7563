#include "fpp/transforms.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "fpp/errors.hpp"
#include "fpp/quadrature.hpp"
#include "fpp/special_functions.hpp"

namespace fpp {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_open_unit(const char* where, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) detail::throw_domain(where, "beta in (0, 1)");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// int_0^1 g(beta) p(beta) d beta with the rule matched to the weight's behaviour at 0.
double integrate_order(const OrderDensity& p, const std::function<double(double)>& g, double tol) {
  auto integrand = [&](double b) { return g(b) * p(b); };
  if (p.singular_at_zero()) {
    return quad::integrate_singular(integrand, 0.0, 0.5, tol) +
           quad::integrate(integrand, 0.5, 1.0, tol);
  }
  return quad::integrate(integrand, 0.0, 1.0, tol);
}

}  // namespace

// ---------------------------------------------------------------------------
// OrderDensity
// ---------------------------------------------------------------------------

OrderDensity OrderDensity::uniform(double scale) {
  if (!(scale > 0.0)) detail::throw_domain("OrderDensity::uniform", "scale > 0");
  OrderDensity d;
  d.kind_ = Kind::Uniform;
  d.scale_ = scale;
  d.label_ = "uniform";
  return d;
}

OrderDensity OrderDensity::power(double scale, double exponent) {
  if (!(scale > 0.0)) detail::throw_domain("OrderDensity::power", "scale > 0");
  if (!(exponent > 0.0)) detail::throw_domain("OrderDensity::power", "exponent > 0");
  OrderDensity d;
  d.kind_ = Kind::Power;
  d.scale_ = scale;
  d.exponent_ = exponent;
  d.label_ = "power";
  return d;
}

OrderDensity OrderDensity::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty()) detail::throw_domain("OrderDensity::polynomial", "at least one coefficient");
  OrderDensity d;
  d.kind_ = Kind::Polynomial;
  d.coefficients_ = std::move(coefficients);
  d.label_ = "polynomial";
  for (int i = 0; i <= 64; ++i) {
    const double b = (i + 0.5) / 65.0;
    if (d(b) < 0.0) detail::throw_domain("OrderDensity::polynomial", "p(beta) >= 0 on (0, 1)");
  }
  return d;
}

OrderDensity OrderDensity::custom(std::function<double(double)> p, std::string label) {
  if (!p) detail::throw_domain("OrderDensity::custom", "a callable weight");
  OrderDensity d;
  d.kind_ = Kind::Custom;
  d.custom_ = std::move(p);
  d.label_ = std::move(label);
  return d;
}

double OrderDensity::operator()(double beta) const {
  switch (kind_) {
    case Kind::Uniform: return scale_;
    case Kind::Power: return scale_ * std::pow(beta, exponent_ - 1.0);
    case Kind::Polynomial: {
      double acc = 0.0;
      for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * beta + *it;
      return acc;
    }
    case Kind::Custom: return custom_(beta);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// SubordinatorSpec
// ---------------------------------------------------------------------------

SubordinatorSpec SubordinatorSpec::stable(double beta) {
  check_open_unit("SubordinatorSpec::stable", beta);
  return SubordinatorSpec(StableSpec{beta});
}

SubordinatorSpec SubordinatorSpec::tempered_stable(double beta, double a) {
  check_open_unit("SubordinatorSpec::tempered_stable", beta);
  if (!(a > 0.0)) detail::throw_domain("SubordinatorSpec::tempered_stable", "a > 0");
  return SubordinatorSpec(TemperedStableSpec{beta, a});
}

SubordinatorSpec SubordinatorSpec::stable_mixture(std::vector<MixtureComponent> components) {
  if (components.empty()) detail::throw_domain("SubordinatorSpec::stable_mixture", "at least one component");
  for (const auto& c : components) {
    if (!(c.weight > 0.0)) detail::throw_domain("SubordinatorSpec::stable_mixture", "weights > 0");
    check_open_unit("SubordinatorSpec::stable_mixture", c.beta);
  }
  return SubordinatorSpec(StableMixtureSpec{std::move(components)});
}

SubordinatorSpec SubordinatorSpec::distributed_order(OrderDensity density) {
  return SubordinatorSpec(DistributedOrderSpec{std::move(density)});
}

std::string SubordinatorSpec::name() const {
  return std::visit(Overloaded{[](const StableSpec&) { return std::string("Stable"); },
                               [](const TemperedStableSpec&) { return std::string("TemperedStable"); },
                               [](const StableMixtureSpec&) { return std::string("StableMixture"); },
                               [](const DistributedOrderSpec&) { return std::string("DistributedOrder"); }},
                    variant_);
}

bool SubordinatorSpec::sampleable() const {
  return !std::holds_alternative<DistributedOrderSpec>(variant_);
}

// ---------------------------------------------------------------------------
// Laplace exponent and Levy tail
// ---------------------------------------------------------------------------

double laplace_exponent(const SubordinatorSpec& spec, double s) {
  if (!(s > 0.0)) detail::throw_domain("laplace_exponent", "s > 0");
  return std::visit(
      Overloaded{
          [s](const StableSpec& v) { return std::pow(s, v.beta); },
          [s](const TemperedStableSpec& v) {
            return std::pow(v.a, v.beta) * std::expm1(v.beta * std::log1p(s / v.a));
          },
          [s](const StableMixtureSpec& v) {
            double acc = 0.0;
            for (const auto& c : v.components) acc += c.weight * std::pow(s, c.beta);
            return acc;
          },
          [s](const DistributedOrderSpec& v) {
            const double log_s = std::log(s);
            return integrate_order(v.density, [log_s](double b) { return std::exp(b * log_s); }, 1e-11);
          }},
      spec.variant());
}

Complex laplace_exponent(const SubordinatorSpec& spec, Complex s) {
  if (s.imag() == 0.0 && !(s.real() > 0.0)) {
    detail::throw_domain("laplace_exponent", "s off the cut (-inf, 0]");
  }
  return std::visit(
      Overloaded{
          [s](const StableSpec& v) { return std::pow(s, v.beta); },
          [s](const TemperedStableSpec& v) {
            return std::pow(s + v.a, v.beta) - std::pow(v.a, v.beta);
          },
          [s](const StableMixtureSpec& v) {
            Complex acc = 0.0;
            for (const auto& c : v.components) acc += c.weight * std::pow(s, c.beta);
            return acc;
          },
          [s](const DistributedOrderSpec& v) {
            const Complex log_s = std::log(s);
            const double re = integrate_order(
                v.density, [log_s](double b) { return std::exp(b * log_s).real(); }, 1e-11);
            const double im = integrate_order(
                v.density, [log_s](double b) { return std::exp(b * log_s).imag(); }, 1e-11);
            return Complex(re, im);
          }},
      spec.variant());
}

double levy_tail(const SubordinatorSpec& spec, double t) {
  if (!(t > 0.0)) detail::throw_domain("levy_tail", "t > 0");
  return std::visit(
      Overloaded{
          [t](const StableSpec& v) { return std::pow(t, -v.beta) * recip_gamma(1.0 - v.beta); },
          [t](const TemperedStableSpec& v) {
            // (beta / Gamma(1-beta)) int_t^inf e^{-a u} u^{-beta-1} du, integrated by parts:
            // (t^{-beta} e^{-a t} - a^beta Gamma(1-beta, a t)) / Gamma(1-beta).
            const double upper = boost::math::tgamma(1.0 - v.beta, v.a * t);
            return (std::pow(t, -v.beta) * std::exp(-v.a * t) - std::pow(v.a, v.beta) * upper) *
                   recip_gamma(1.0 - v.beta);
          },
          [t](const StableMixtureSpec& v) {
            double acc = 0.0;
            for (const auto& c : v.components) {
              acc += c.weight * std::pow(t, -c.beta) * recip_gamma(1.0 - c.beta);
            }
            return acc;
          },
          [t](const DistributedOrderSpec& v) {
            const double log_t = std::log(t);
            return integrate_order(
                v.density, [log_t](double b) { return std::exp(-b * log_t) * recip_gamma(1.0 - b); },
                1e-11);
          }},
      spec.variant());
}

// ---------------------------------------------------------------------------
// JumpDist
// ---------------------------------------------------------------------------

JumpDist JumpDist::point_mass_one() { return JumpDist({{1.0, 1.0}}); }

JumpDist JumpDist::atoms(std::vector<JumpAtom> atoms) {
  if (atoms.empty()) detail::throw_domain("JumpDist::atoms", "at least one atom");
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!(a.probability >= 0.0)) detail::throw_domain("JumpDist::atoms", "probabilities >= 0");
    if (!std::isfinite(a.location)) detail::throw_domain("JumpDist::atoms", "finite locations");
    total += a.probability;
  }
  if (std::fabs(total - 1.0) > 1e-12) detail::throw_domain("JumpDist::atoms", "probabilities summing to 1");
  return JumpDist(std::move(atoms));
}

Complex JumpDist::characteristic(double k) const {
  Complex acc = 0.0;
  for (const auto& a : atoms_) acc += a.probability * std::exp(Complex(0.0, -k * a.location));
  return acc;
}

Complex JumpDist::fourier_symbol(double lambda, double k) const {
  if (!(lambda > 0.0)) detail::throw_domain("JumpDist::fourier_symbol", "lambda > 0");
  return lambda * (1.0 - characteristic(k));
}

// ---------------------------------------------------------------------------
// Forward transform
// ---------------------------------------------------------------------------

double laplace_forward(const TimeFunction& f, double s, const LaplaceForwardOptions& opts) {
  if (!(s > 0.0)) detail::throw_domain("laplace_forward", "s > 0");
  if (!(opts.tol > 0.0)) detail::throw_domain("laplace_forward", "tol > 0");
  const double alpha = opts.singularity_exponent;
  if (!(alpha >= 0.0 && alpha < 1.0)) detail::throw_domain("laplace_forward", "singularity_exponent in [0, 1)");

  if (alpha == 0.0) {
    auto integrand = [&](double t) {
      const double damp = std::exp(-s * t);
      return damp == 0.0 ? 0.0 : damp * f(t);
    };
    return quad::integrate_half_line(integrand, 0.0, opts.tol);
  }

  // On [t0, 1/s] substitute t = v^m / s with m = 1/(1-alpha), which turns the
  // t^{-alpha} singularity into a bounded integrand; the tail is regular.
  // Below t0 = 1e-280 / s the leading power law gives f(t0) t0 / (1 - alpha).
  // For alpha near 1 that piece is not small: (1e-280)^{0.01} is 1.6e-3.
  const double m = 1.0 / (1.0 - alpha);
  const double head_end = 1.0 / s;
  const double t0 = 1e-280 * head_end;
  const double v0 = std::pow(1e-280, 1.0 - alpha);
  auto head = [&](double v) {
    const double t = std::exp(m * std::log(v)) * head_end;
    const double jacobian = m * t / v;
    return std::exp(-s * t) * f(t) * jacobian;
  };
  auto tail = [&](double t) {
    const double damp = std::exp(-s * t);
    return damp == 0.0 ? 0.0 : damp * f(t);
  };
  const double below = f(t0) * t0 / (1.0 - alpha);
  return below + quad::integrate(head, v0, 1.0, opts.tol) + quad::integrate_half_line(tail, head_end, opts.tol);
}

// ---------------------------------------------------------------------------
// Inversion
// ---------------------------------------------------------------------------

LaplaceTransform::LaplaceTransform(ComplexFn f) : complex_(std::move(f)) {
  if (!complex_) detail::throw_domain("LaplaceTransform", "a callable transform");
}

LaplaceTransform::LaplaceTransform(RealFn f) : real_(std::move(f)) {
  if (!real_) detail::throw_domain("LaplaceTransform", "a callable transform");
}

Complex LaplaceTransform::operator()(Complex s) const {
  if (!complex_) detail::throw_domain("LaplaceTransform", "complex-argument evaluation");
  return complex_(s);
}

double LaplaceTransform::operator()(double s) const {
  if (real_) return real_(s);
  return complex_(Complex(s, 0.0)).real();
}

namespace {

const char* method_name(InversionMethod m) {
  return m == InversionMethod::FixedTalbot ? "fixed-Talbot" : "Gaver-Stehfest";
}

// Abate-Valko fixed Talbot contour s(theta) = r theta (cot theta + i), r = 2M/(5t).
InversionResult invert_talbot(const LaplaceTransform& F, double t, int nodes) {
  if (!F.has_complex()) {
    detail::throw_domain("laplace_invert", "complex-argument evaluation for fixed-Talbot");
  }
  const double r = 2.0 * nodes / (5.0 * t);
  double sum = 0.5 * std::exp(r * t) * F(Complex(r, 0.0)).real();
  double magnitude = std::fabs(sum);
  for (int k = 1; k < nodes; ++k) {
    const double theta = k * kPi / nodes;
    const double cot = std::cos(theta) / std::sin(theta);
    const Complex s(r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    const Complex term = std::exp(t * s) * F(s) * Complex(1.0, sigma);
    sum += term.real();
    magnitude += std::abs(term);
  }
  InversionResult out;
  out.method = InversionMethod::FixedTalbot;
  out.value = r / nodes * sum;
  out.rounding_estimate = 8.0 * kEps * r / nodes * magnitude;
  return out;
}

std::vector<long double> stehfest_weights(int n) {
  auto factorial = [](int k) {
    long double f = 1.0L;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const int half = n / 2;
  std::vector<long double> v(static_cast<std::size_t>(n) + 1, 0.0L);
  for (int k = 1; k <= n; ++k) {
    long double acc = 0.0L;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
      acc += std::pow(static_cast<long double>(j), half) * factorial(2 * j) /
             (factorial(half - j) * factorial(j) * factorial(j - 1) * factorial(k - j) *
              factorial(2 * j - k));
    }
    v[static_cast<std::size_t>(k)] = ((k + half) % 2 == 0 ? 1.0L : -1.0L) * acc;
  }
  return v;
}

InversionResult invert_stehfest(const LaplaceTransform& F, double t, int n) {
  if (n < 2 || n % 2 != 0 || n > 30) detail::throw_domain("laplace_invert", "even stehfest_terms in [2, 30]");
  thread_local int cached_n = 0;
  thread_local std::vector<long double> weights;
  if (cached_n != n) {
    weights = stehfest_weights(n);
    cached_n = n;
  }
  const long double ln2_t = std::numbers::ln2_v<long double> / t;
  long double sum = 0.0L;
  long double magnitude = 0.0L;
  for (int k = 1; k <= n; ++k) {
    const double fk = F(static_cast<double>(k * ln2_t));
    if (!std::isfinite(fk)) {
      throw EvaluationError("laplace_invert: Gaver-Stehfest term blow-up; try fixed-Talbot",
                            static_cast<double>(ln2_t * sum));
    }
    const long double term = weights[static_cast<std::size_t>(k)] * fk;
    sum += term;
    magnitude += std::fabs(term);
  }
  InversionResult out;
  out.method = InversionMethod::GaverStehfest;
  out.value = static_cast<double>(ln2_t * sum);
  // The transform values themselves carry double-precision rounding.
  out.rounding_estimate = static_cast<double>(kEps * ln2_t * magnitude);
  return out;
}

}  // namespace

InversionResult laplace_invert_detailed(const LaplaceTransform& F, double t, const InversionOptions& opts) {
  if (!(t > 0.0) || !std::isfinite(t)) detail::throw_domain("laplace_invert", "finite t > 0");
  InversionResult out = opts.method == InversionMethod::FixedTalbot
                            ? invert_talbot(F, t, opts.talbot_nodes)
                            : invert_stehfest(F, t, opts.stehfest_terms);
  const double rel = opts.method == InversionMethod::FixedTalbot ? opts.rel_tol : opts.stehfest_rel_tol;
  const double allowed = std::max(opts.abs_tol, rel * std::fabs(out.value));
  if (!std::isfinite(out.value) || !(out.rounding_estimate <= allowed)) {
    const auto other = opts.method == InversionMethod::FixedTalbot ? InversionMethod::GaverStehfest
                                                                    : InversionMethod::FixedTalbot;
    throw EvaluationError(std::string("laplace_invert: ") + method_name(opts.method) +
                              " unstable (rounding estimate " + std::to_string(out.rounding_estimate) +
                              "); try " + method_name(other),
                          out.value);
  }
  return out;
}

double laplace_invert(const LaplaceTransform& F, double t, const InversionOptions& opts) {
  return laplace_invert_detailed(F, t, opts).value;
}

double laplace_invert_with_fallback(const LaplaceTransform& F, double t, const InversionOptions& opts) {
  InversionOptions first = opts;
  first.method = InversionMethod::FixedTalbot;
  try {
    if (F.has_complex()) return laplace_invert(F, t, first);
  } catch (const EvaluationError&) {
  }
  InversionOptions second = opts;
  second.method = InversionMethod::GaverStehfest;
  return laplace_invert(F, t, second);
}

// ---------------------------------------------------------------------------
// Transform identity for the Levy tail
// ---------------------------------------------------------------------------

IdentityCheck bern_identity_check(const SubordinatorSpec& spec, double s) {
  if (!(s > 0.0)) detail::throw_domain("bern_identity_check", "s > 0");
  IdentityCheck out;
  out.rhs = laplace_exponent(spec, s) / s;
  out.lhs = std::visit(
      Overloaded{
          [&](const StableSpec& v) {
            return laplace_forward([&](double u) { return levy_tail(spec, u); }, s,
                                   {.tol = 1e-12, .singularity_exponent = v.beta});
          },
          [&](const TemperedStableSpec& v) {
            return laplace_forward([&](double u) { return levy_tail(spec, u); }, s,
                                   {.tol = 1e-12, .singularity_exponent = v.beta});
          },
          [&](const StableMixtureSpec& v) {
            double worst = 0.0;
            for (const auto& c : v.components) worst = std::max(worst, c.beta);
            return laplace_forward([&](double u) { return levy_tail(spec, u); }, s,
                                   {.tol = 1e-12, .singularity_exponent = worst});
          },
          [&](const DistributedOrderSpec& v) {
            // phi_D(u) ~ 1/(u log^2 u) at 0 defeats any power substitution. Below u0 the
            // mass is taken layer by layer over beta (lower incomplete gamma series);
            // above u0 the library tail is integrated in log u.
            const double u0 = 1e-8 / s;
            auto below = [s, u0](double b) {
              const double x = s * u0;
              double term = 1.0, sum = 0.0;
              for (int k = 0; k < 30; ++k) {
                sum += term / (k + 1.0 - b);
                term *= -x / (k + 1.0);
              }
              return std::pow(u0, 1.0 - b) * sum * recip_gamma(1.0 - b);
            };
            auto in_log = [&](double x) {
              const double u = std::exp(x);
              const double w = std::exp(-s * u);
              return w > 0.0 && std::isfinite(u) ? w * levy_tail(spec, u) * u : 0.0;
            };
            const double split = std::log(1.0 / s);
            return integrate_order(v.density, below, 1e-12) +
                   quad::integrate(in_log, std::log(u0), split, 1e-11) +
                   quad::integrate_half_line(in_log, split, 1e-11);
          }},
      spec.variant());
  out.rel_error = std::fabs(out.lhs - out.rhs) / std::fabs(out.rhs);
  return out;
}

}  // namespace fpp
