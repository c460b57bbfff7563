#include "fppctl.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpp/distributions.hpp"
#include "fpp/errors.hpp"
#include "fpp/frac_calculus.hpp"
#include "fpp/montecarlo.hpp"
#include "fpp/processes.hpp"
#include "fpp/serialization.hpp"
#include "fpp/special_functions.hpp"
#include "fpp/validation.hpp"

namespace fppctl {
namespace {

struct SpecArgs {
  std::optional<double> beta;
  std::string spec;
  double lambda = 1.0;
};

void add_spec_options(CLI::App* cmd, SpecArgs& a) {
  cmd->add_option("--beta", a.beta, "stability index of a Stable subordinator");
  cmd->add_option("--spec", a.spec, "subordinator spec as JSON");
  cmd->add_option("--lambda", a.lambda, "rate")->capture_default_str();
}

fpp::SubordinatorSpec resolve_spec(const SpecArgs& a) {
  if (a.beta && !a.spec.empty()) fpp::detail::throw_domain("fppctl", "only one of --beta and --spec");
  if (!a.spec.empty()) return fpp::spec_from_json(a.spec);
  if (!a.beta) fpp::detail::throw_domain("fppctl", "--beta or --spec");
  return fpp::SubordinatorSpec::stable(*a.beta);
}

// Writes to --output when given, to out otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

fpp::JumpDist parse_jumps(const std::string& text) {
  if (text.empty()) return fpp::JumpDist::point_mass_one();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fpp::detail::throw_domain("--jumps", std::string("valid JSON (") + e.what() + ")");
  }
  if (!j.is_array()) fpp::detail::throw_domain("--jumps", "an array of {location, probability}");
  std::vector<fpp::JumpAtom> atoms;
  try {
    for (const auto& a : j) atoms.push_back({a.at("location").get<double>(), a.at("probability").get<double>()});
  } catch (const nlohmann::json::exception& e) {
    fpp::detail::throw_domain("--jumps", std::string("numeric location and probability (") + e.what() + ")");
  }
  return fpp::JumpDist::atoms(std::move(atoms));
}

struct SampleArgs {
  SpecArgs spec;
  std::string process = "fpp";
  std::string jumps;
  double horizon = 1.0;
  std::size_t paths = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string format = "csv";
  std::string output;
};

template <class Path>
double mean_jumps(const std::vector<Path>& paths) {
  double total = 0.0;
  for (const auto& p : paths) {
    for (double t : p.jump_times) total += t <= p.horizon ? 1.0 : 0.0;
  }
  return total / static_cast<double>(paths.size());
}

template <class Path>
int emit_paths(const SampleArgs& a, const std::string& spec_json, const std::vector<Path>& paths, std::ostream& out,
               std::ostream& err) {
  Sink sink(a.output, out);
  if (a.format == "json") {
    sink.get() << fpp::paths_to_json(spec_json, a.seed, paths) << '\n';
  } else {
    fpp::write_paths_csv(sink.get(), spec_json, a.seed, paths);
  }
  err << "paths=" << paths.size() << " mean_jump_count=" << std::setprecision(12) << mean_jumps(paths) << '\n';
  return kOk;
}

int cmd_sample(const SampleArgs& a, std::ostream& out, std::ostream& err) {
  const fpp::SubordinatorSpec spec = resolve_spec(a.spec);
  if (a.process == "fpp" && !std::holds_alternative<fpp::StableSpec>(spec.variant())) {
    fpp::detail::throw_domain("sample --process fpp", "a Stable spec");
  }
  if (a.process != "ctrw" && !a.jumps.empty()) fpp::detail::throw_domain("sample", "--jumps only with --process ctrw");
  const std::string spec_json = fpp::spec_to_json(spec);
  if (a.process == "ctrw") {
    const fpp::JumpDist jumps = parse_jumps(a.jumps);
    const auto paths = fpp::monte_carlo<fpp::CTRWPath>(
        a.paths, a.seed,
        [&](fpp::RngStream& rng) { return fpp::simulate_ctrw(spec, a.spec.lambda, jumps, a.horizon, rng); }, a.jobs);
    return emit_paths(a, spec_json, paths, out, err);
  }
  const auto paths = fpp::monte_carlo<fpp::RenewalPath>(
      a.paths, a.seed,
      [&](fpp::RngStream& rng) {
        if (a.process == "fpp") {
          return fpp::simulate_fpp(std::get<fpp::StableSpec>(spec.variant()).beta, a.spec.lambda, a.horizon, rng);
        }
        return fpp::simulate_timechange_renewal(spec, a.spec.lambda, a.horizon, rng);
      },
      a.jobs);
  return emit_paths(a, spec_json, paths, out, err);
}

struct PmfArgs {
  SpecArgs spec;
  double t = 1.0;
  double tail_tol = 1e-10;
  std::string format = "csv";
  std::string output;
};

int cmd_pmf(const PmfArgs& a, std::ostream& out) {
  Sink sink(a.output, out);
  if (a.spec.beta && *a.spec.beta == 1.0 && a.spec.spec.empty()) {
    // beta = 1 is the Poisson process, outside the Stable family.
    if (!(a.t > 0.0)) fpp::detail::throw_domain("pmf", "t > 0");
    if (!(a.spec.lambda > 0.0)) fpp::detail::throw_domain("pmf", "lambda > 0");
    const double log_q = std::log(a.spec.lambda) - std::log(a.spec.lambda + 1.0 / a.t);
    const long n_max = static_cast<long>(std::floor((std::log(a.tail_tol) - 1.0) / log_q));
    std::vector<fpp::PmfRow> rows;
    for (long n = 0; n <= n_max; ++n) rows.push_back({n, fpp::fpp_pmf(1.0, a.spec.lambda, a.t, n)});
    const double tail = std::exp(1.0 + static_cast<double>(n_max + 1) * log_q);
    const std::string spec_json = R"({"variant":"Stable","beta":1})";
    if (a.format == "json") {
      sink.get() << fpp::pmf_to_json(spec_json, a.spec.lambda, a.t, rows, tail) << '\n';
    } else {
      fpp::write_pmf_csv(sink.get(), spec_json, a.spec.lambda, a.t, rows, tail);
    }
    return kOk;
  }
  const fpp::PmfTable table = fpp::pmf_table(resolve_spec(a.spec), a.spec.lambda, a.t, a.tail_tol);
  if (a.format == "json") {
    sink.get() << fpp::pmf_to_json(table) << '\n';
  } else {
    fpp::write_pmf_csv(sink.get(), table);
  }
  return kOk;
}

struct CheckArgs {
  std::string suite;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string output;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const fpp::Report report = fpp::run_suite(a.suite, a.seed, a.jobs);
  for (const auto& c : report.cases) {
    err << (c.pass ? "PASS " : "FAIL ") << c.name << " observed=" << std::setprecision(6) << c.observed
        << " threshold=" << c.threshold << '\n';
  }
  Sink sink(a.output, out);
  sink.get() << fpp::report_to_json(report) << '\n';
  return report.passed() ? kOk : kFailure;
}

struct EvalArgs {
  double beta = 0.5;
  double z = 0.0;
  double gamma = 1.0;
  double alpha = 0.5;
  double theta = 1.0;
  double x = 0.0;
  double t = 1.0;
  double t0 = 0.0;
  double step = 0.0;
  std::vector<double> values;
  std::string kind = "caputo";
};

void print(std::ostream& out, double v) { out << std::setprecision(12) << v << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional Poisson process sampling, evaluation and validation", "fppctl"};
  app.require_subcommand(1);

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "simulate renewal or CTRW paths");
  add_spec_options(s, sample.spec);
  s->add_option("--process", sample.process)
      ->check(CLI::IsMember({"fpp", "timechange", "ctrw"}))
      ->capture_default_str();
  s->add_option("--jumps", sample.jumps, R"(CTRW jump atoms, [{"location":1,"probability":1}])");
  s->add_option("--horizon", sample.horizon)->check(CLI::NonNegativeNumber)->capture_default_str();
  s->add_option("--paths", sample.paths)->check(CLI::PositiveNumber)->capture_default_str();
  s->add_option("--seed", sample.seed)->required();
  s->add_option("--jobs", sample.jobs, "worker threads, 0 for all cores")->capture_default_str();
  s->add_option("--format", sample.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  s->add_option("--output,-o", sample.output);

  PmfArgs pmf;
  auto* p = app.add_subcommand("pmf", "tabulate P(N(t) = n) up to the truncation index");
  add_spec_options(p, pmf.spec);
  p->add_option("--t", pmf.t)->required();
  p->add_option("--tail-tol", pmf.tail_tol)->capture_default_str();
  p->add_option("--format", pmf.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  p->add_option("--output,-o", pmf.output);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "run a validation suite; exit 0 iff every case passes");
  c->add_option("--suite", check.suite)->required();
  c->add_option("--seed", check.seed)->required();
  c->add_option("--jobs", check.jobs)->capture_default_str();
  c->add_option("--output,-o", check.output, "JSON report path");

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "evaluate a special function or derivative");
  e->require_subcommand(1);
  auto* mlf = e->add_subcommand("mlf", "Mittag-Leffler E_beta(z)");
  mlf->add_option("--beta", ev.beta)->required();
  mlf->add_option("--z", ev.z)->required();
  auto* pr = e->add_subcommand("prabhakar", "E^gamma_{alpha,theta}(z)");
  pr->add_option("--gamma", ev.gamma)->required();
  pr->add_option("--alpha", ev.alpha)->required();
  pr->add_option("--theta", ev.theta)->required();
  pr->add_option("--z", ev.z)->required();
  auto* dens = e->add_subcommand("density", "inverse stable density h(x, t)");
  dens->add_option("--beta", ev.beta)->required();
  dens->add_option("--x", ev.x)->required();
  dens->add_option("--t", ev.t)->required();
  auto* cap = e->add_subcommand("caputo", "fractional derivative of samples g(t0 + i step)");
  cap->add_option("--beta", ev.beta)->required();
  cap->add_option("--t", ev.t)->required();
  cap->add_option("--t0", ev.t0)->capture_default_str();
  cap->add_option("--step", ev.step)->required();
  cap->add_option("--values", ev.values, "comma-separated samples")->required()->delimiter(',');
  cap->add_option("--kind", ev.kind)->check(CLI::IsMember({"caputo", "rl"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (s->parsed()) return cmd_sample(sample, out, err);
    if (p->parsed()) return cmd_pmf(pmf, out);
    if (c->parsed()) return cmd_check(check, out, err);
    if (mlf->parsed()) print(out, fpp::ml_one(ev.beta, ev.z));
    if (pr->parsed()) print(out, fpp::prabhakar(ev.gamma, ev.alpha, ev.theta, ev.z));
    if (dens->parsed()) print(out, fpp::inverse_stable_density(ev.beta, ev.x, ev.t));
    if (cap->parsed()) {
      const fpp::SampledFunction g{ev.t0, ev.step, ev.values};
      print(out, ev.kind == "rl" ? fpp::riemann_liouville(g, ev.beta, ev.t) : fpp::caputo(g, ev.beta, ev.t));
    }
    return kOk;
  } catch (const fpp::DomainError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const fpp::EvaluationError& ex) {
    err << "error: " << ex.what() << " (partial value " << std::setprecision(12) << ex.partial_value() << ")\n";
    return kFailure;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kFailure;
  }
}

}  // namespace fppctl
