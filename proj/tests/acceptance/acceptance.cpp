// Acceptance criteria runner. Prints one PASS/FAIL line per criterion; case
// details go to stderr. Usage: fpp_acceptance [criterion ...], default all.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fpp/frac_calculus.hpp"
#include "fpp/special_functions.hpp"
#include "fpp/validation.hpp"
#include "goldens.hpp"

namespace {

constexpr std::uint64_t kSeed = 42;

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<fpp::Report()> run;
};

fpp::Report blocks(const std::vector<std::string>& names) {
  fpp::Report r;
  r.suite = "acceptance";
  r.seed = kSeed;
  for (const auto& n : names) r.append(fpp::run_block(n, kSeed));
  return r;
}

void add_case(fpp::Report& r, const std::string& name, double observed, double threshold) {
  r.cases.push_back({name, observed, threshold, std::isfinite(observed) && observed <= threshold});
}

fpp::Report special_function_goldens() {
  fpp::Report r;
  r.suite = "special_functions";
  const auto abs_err = [](double a, double b) { return std::fabs(a - b); };
  add_case(r, "ml_one(0.5,-1)", abs_err(fpp::ml_one(0.5, -1.0), golden::kMl_05_m1), 1e-12);
  add_case(r, "ml_one(0.3,-2)", abs_err(fpp::ml_one(0.3, -2.0), golden::kMl_03_m2), 1e-12);
  add_case(r, "ml_one(0.9,-20)", abs_err(fpp::ml_one(0.9, -20.0), golden::kMl_09_m20), 1e-10);
  add_case(r, "prabhakar(1,1,1,1)=e", abs_err(fpp::prabhakar(1.0, 1.0, 1.0, 1.0), std::exp(1.0)), 1e-13);
  add_case(r, "prabhakar(1,0.6,1,-2)=ml_one", abs_err(fpp::prabhakar(1.0, 0.6, 1.0, -2.0), fpp::ml_one(0.6, -2.0)),
           1e-12);
  add_case(r, "prabhakar(2,0.5,2,-0.5)", abs_err(fpp::prabhakar(2.0, 0.5, 2.0, -0.5), golden::kPrabhakar_2_05_2_m05),
           1e-12);
  const auto linear = fpp::SampledFunction::sample([](double t) { return t; }, 0.0, 1e-3, 1000);
  add_case(r, "caputo(t,0.5,1)", abs_err(fpp::caputo(linear, 0.5, 1.0), golden::kCaputoLinearHalf), 1e-12);
  const auto square = fpp::SampledFunction::sample([](double t) { return t * t; }, 0.0, 1e-3, 1000);
  for (double beta : {0.3, 0.7}) {
    const double exact = 2.0 / std::tgamma(3.0 - beta);
    std::ostringstream name;
    name << "caputo(t^2," << beta << ",1)_rel";
    add_case(r, name.str(), abs_err(fpp::caputo(square, beta, 1.0), exact) / exact, 1e-3);
  }
  return r;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "waiting-time equivalence of the two constructions", 120, [] { return blocks({"waiting_times"}); }},
      {2, "pmf identity across series, mixture and inversion", 60, [] { return blocks({"pmf_identity"}); }},
      {3, "transform round trips", 60, [] { return blocks({"transform_round_trips"}); }},
      {4, "half-order closed forms", 120, [] { return blocks({"half_order_closed_form", "brownian_max"}); }},
      {5, "governing-equation residuals", 120, [] { return blocks({"governing_residuals"}); }},
      {6, "tempered waiting times", 180, [] { return blocks({"tempered"}); }},
      {7, "distributed-order cross-check", 180, [] { return blocks({"distributed"}); }},
      {8, "Bernoulli prelimit convergence", 120, [] { return blocks({"prelimit_convergence"}); }},
      {9, "special-function golden values", 10, special_function_goldens},
  };
  return list;
}

bool run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  fpp::Report report;
  std::string error;
  try {
    report = c.run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& k : report.cases) {
    std::cerr << "  [" << c.id << "] " << (k.pass ? "pass " : "FAIL ") << k.name << " observed=" << std::setprecision(6)
              << k.observed << " threshold=" << k.threshold << '\n';
  }
  std::vector<std::string> failed;
  for (const auto& k : report.cases) {
    if (!k.pass) failed.push_back(k.name);
  }
  const bool in_budget = seconds <= c.budget_seconds;
  const bool pass = error.empty() && !report.cases.empty() && failed.empty() && in_budget;
  std::cout << "criterion " << c.id << ' ' << (pass ? "PASS" : "FAIL") << ": " << c.title << " ("
            << report.cases.size() - failed.size() << '/' << report.cases.size() << " cases, " << std::fixed
            << std::setprecision(1) << seconds << " s of " << c.budget_seconds << " s";
  std::cout.unsetf(std::ios::fixed);
  if (!error.empty()) std::cout << "; error: " << error;
  if (!in_budget) std::cout << "; over budget";
  for (const auto& f : failed) std::cout << "; failed " << f;
  std::cout << ")" << std::endl;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    all_pass = run_one(c) && all_pass;
  }
  return all_pass ? 0 : 1;
}
