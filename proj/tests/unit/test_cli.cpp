#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fpp/distributions.hpp"
#include "fpp/samplers.hpp"
#include "fpp/serialization.hpp"
#include "fpp/validation.hpp"
#include "fppctl.hpp"
#include "goldens.hpp"
#include "test_support.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run fppctl_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fppctl::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EvalMittagLeffler) {
  const auto r = fppctl_run({"eval", "mlf", "--beta", "0.5", "--z", "-1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0.427583576156\n");
  EXPECT_EQ(fppctl_run({"eval", "mlf", "--beta", "1", "--z", "-1"}).out, "0.367879441171\n");
}

TEST(Cli, EvalDensity) {
  const auto r = fppctl_run({"eval", "density", "--beta", "0.5", "--x", "1", "--t", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0.439391289468\n");
}

TEST(Cli, EvalCaputoOnSuppliedGrid) {
  const auto r = fppctl_run({"eval", "caputo", "--beta", "0.5", "--t", "1", "--step", "0.25", "--values",
                             "0,0.25,0.5,0.75,1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out), golden::kCaputoLinearHalf, 1e-11);
}

TEST(Cli, EvalDomainErrorNamesConstraint) {
  const auto r = fppctl_run({"eval", "mlf", "--beta", "1.5", "--z", "-1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("beta"), std::string::npos);
}

TEST(Cli, SampleIsDeterministic) {
  const std::vector<std::string> args = {"sample", "--process", "fpp", "--beta", "0.5", "--lambda", "1",
                                         "--horizon", "10", "--paths", "100", "--seed", "7"};
  const auto a = fppctl_run(args);
  const auto b = fppctl_run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream is(a.out);
  const auto file = fpp::read_paths_csv(is);
  EXPECT_EQ(file.paths.size(), 100u);
  EXPECT_EQ(file.seed, 7u);
  EXPECT_NE(a.err.find("mean_jump_count="), std::string::npos);
}

TEST(Cli, SampleJobsDoNotChangeOutput) {
  const std::vector<std::string> base = {"sample", "--process", "ctrw", "--beta", "0.7", "--horizon", "3",
                                         "--paths", "5000", "--seed", "3", "--jumps",
                                         R"([{"location":-1,"probability":0.5},{"location":1,"probability":0.5}])"};
  auto threaded = base;
  threaded.insert(threaded.end(), {"--jobs", "3"});
  EXPECT_EQ(fppctl_run(base).out, fppctl_run(threaded).out);
}

TEST(Cli, SampleTemperedTimeChange) {
  const auto r = fppctl_run({"sample", "--process", "timechange", "--spec",
                             R"({"variant":"TemperedStable","beta":0.5,"a":1})", "--lambda", "2", "--horizon", "0",
                             "--paths", "20000", "--seed", "11"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream is(r.out);
  const auto file = fpp::read_paths_csv(is);
  std::vector<double> first;
  for (const auto& p : file.paths) first.push_back(p.jump_times.at(0));
  const auto direct = testing_support::draws(
      20'000, 12, [](fpp::RngStream& g) { return fpp::sample_tempered_ml_waiting(0.5, 1.0, 2.0, g); });
  EXPECT_GT(fpp::ks_two_sample(first, direct).p_value, 0.01);
}

TEST(Cli, SampleJsonFormat) {
  const auto r = fppctl_run({"sample", "--beta", "0.5", "--paths", "2", "--seed", "1", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind(R"({"spec":{"variant":"Stable","beta":0.5},"seed":1,"paths":[)", 0), 0u) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(fppctl_run({"sample", "--beta", "0.5"}).code, 2);
  EXPECT_EQ(fppctl_run({"sample", "--spec", "{oops", "--seed", "1"}).code, 2);
  EXPECT_EQ(fppctl_run({"sample", "--process", "fpp", "--spec", R"({"variant":"TemperedStable","beta":0.5,"a":1})",
                        "--seed", "1"})
                .code,
            2);
  EXPECT_EQ(fppctl_run({"frobnicate"}).code, 2);
  EXPECT_EQ(fppctl_run({}).code, 2);
  EXPECT_EQ(fppctl_run({"--help"}).code, 0);
}

TEST(Cli, PmfFirstRow) {
  const auto r = fppctl_run({"pmf", "--beta", "0.5", "--lambda", "1", "--t", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream is(r.out);
  const auto table = fpp::read_pmf_csv(is);
  EXPECT_NEAR(table.rows.at(0).prob, 0.42758358, 5e-9);
}

TEST(Cli, PmfPoissonAtOrderOne) {
  const auto r = fppctl_run({"pmf", "--beta", "1", "--lambda", "2", "--t", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_NE(line.find("lambda=2"), std::string::npos);
  std::getline(is, line);
  EXPECT_EQ(line, "n,prob");
  long n = 0;
  double total = 0.0;
  while (std::getline(is, line)) {
    const double p = std::stod(line.substr(line.find(',') + 1));
    EXPECT_NEAR(p, std::exp(-2.0) * std::pow(2.0, n) / std::tgamma(n + 1.0), 1e-15) << n;
    total += p;
    ++n;
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(Cli, PmfJsonMatchesCsv) {
  const auto csv = fppctl_run({"pmf", "--spec", R"({"variant":"TemperedStable","beta":0.6,"a":1})", "--t", "1.5"});
  const auto json = fppctl_run({"pmf", "--spec", R"({"variant":"TemperedStable","beta":0.6,"a":1})", "--t", "1.5",
                                "--format", "json"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  ASSERT_EQ(json.code, 0) << json.err;
  std::istringstream is(csv.out);
  const auto a = fpp::read_pmf_csv(is);
  const auto b = fpp::pmf_from_json(json.out);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].prob, b.rows[i].prob);
}

TEST(Cli, CheckExitCodes) {
  const auto bad = fppctl_run({"check", "--suite", "nope", "--seed", "1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("theorem22"), std::string::npos);
  const auto ok = fppctl_run({"check", "--suite", "theorem22", "--seed", "42"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto report = fpp::report_from_json(ok.out);
  int ks = 0;
  for (const auto& c : report.cases) ks += c.name.rfind("ks_", 0) == 0 ? 1 : 0;
  EXPECT_EQ(ks, 4);
}

}  // namespace
