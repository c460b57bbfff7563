#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "fpp/distributions.hpp"
#include "fpp/errors.hpp"
#include "fpp/serialization.hpp"

namespace {

using fpp::SubordinatorSpec;

TEST(SpecJson, RoundTripsEveryVariant) {
  const SubordinatorSpec specs[] = {
      SubordinatorSpec::stable(0.3), SubordinatorSpec::tempered_stable(0.5, 1.25),
      SubordinatorSpec::stable_mixture({{0.5, 0.3}, {1.5, 0.7}}),
      SubordinatorSpec::distributed_order(fpp::OrderDensity::uniform(2.0)),
      SubordinatorSpec::distributed_order(fpp::OrderDensity::power(1.0, 0.5)),
      SubordinatorSpec::distributed_order(fpp::OrderDensity::polynomial({1.0, 0.5}))};
  for (const auto& spec : specs) {
    const std::string text = fpp::spec_to_json(spec);
    const auto back = fpp::spec_from_json(text);
    EXPECT_EQ(fpp::spec_to_json(back), text);
    EXPECT_EQ(fpp::laplace_exponent(back, 1.7), fpp::laplace_exponent(spec, 1.7)) << text;
  }
  EXPECT_EQ(fpp::spec_to_json(SubordinatorSpec::stable(0.5)), R"({"variant":"Stable","beta":0.5})");
}

TEST(SpecJson, Errors) {
  EXPECT_THROW(fpp::spec_from_json("{"), fpp::DomainError);
  EXPECT_THROW(fpp::spec_from_json(R"({"variant":"Cauchy"})"), fpp::DomainError);
  EXPECT_THROW(fpp::spec_from_json(R"({"variant":"Stable"})"), fpp::DomainError);
  EXPECT_THROW(fpp::spec_from_json(R"({"variant":"Stable","beta":1.5})"), fpp::DomainError);
  EXPECT_THROW(fpp::spec_from_json(R"({"variant":"TemperedStable","beta":"x","a":1})"), fpp::DomainError);
  const auto custom = SubordinatorSpec::distributed_order(fpp::OrderDensity::custom([](double) { return 1.0; }));
  EXPECT_THROW(fpp::spec_to_json(custom), fpp::DomainError);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(fpp::format_double(0.1), "0.1");
  EXPECT_EQ(fpp::format_double(1e-300), "1e-300");
  const double x = 0.42758357615580700441;
  EXPECT_EQ(std::stod(fpp::format_double(x)), x);
}

TEST(PathCsv, RoundTripWithEmptyPath) {
  std::vector<fpp::CTRWPath> paths(3);
  paths[0] = {{0.25, 1.5}, {1.0, -1.0}, 1.0};
  paths[1] = {{}, {}, 1.0};
  paths[2] = {{3.0}, {2.5}, 1.0};
  std::stringstream ss;
  fpp::write_paths_csv(ss, R"({"variant":"Stable","beta":0.5})", 7, paths);
  const auto file = fpp::read_paths_csv(ss);
  EXPECT_EQ(file.spec_json, R"({"variant":"Stable","beta":0.5})");
  EXPECT_EQ(file.seed, 7u);
  EXPECT_TRUE(file.has_sizes);
  ASSERT_EQ(file.paths.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(file.paths[k].jump_times, paths[k].jump_times);
    EXPECT_EQ(file.paths[k].jump_sizes, paths[k].jump_sizes);
    EXPECT_EQ(file.paths[k].horizon, paths[k].horizon);
  }
}

TEST(PathCsv, RenewalLayout) {
  std::vector<fpp::RenewalPath> paths(1);
  paths[0] = {{0.1, 0.7}, 0.5};
  std::stringstream ss;
  fpp::write_paths_csv(ss, R"({"variant":"Stable","beta":0.5})", 1, paths);
  EXPECT_EQ(ss.str(), "# spec={\"variant\":\"Stable\",\"beta\":0.5} seed=1\nindex,jump_time\n# path=0 horizon=0.5\n1,0.1\n2,0.7\n");
  const auto file = fpp::read_paths_csv(ss);
  EXPECT_FALSE(file.has_sizes);
  EXPECT_EQ(file.paths[0].jump_times, paths[0].jump_times);
}

TEST(PathCsv, MalformedInput) {
  std::stringstream missing("index,jump_time\n1,0.5\n");
  EXPECT_THROW(fpp::read_paths_csv(missing), fpp::DomainError);
  std::stringstream bad("# spec={} seed=1\nindex,jump_time\n# path=0 horizon=1\n1,abc\n");
  EXPECT_THROW(fpp::read_paths_csv(bad), fpp::DomainError);
}

TEST(PmfFiles, CsvAndJsonCarryIdenticalNumbers) {
  const auto table = fpp::pmf_table(SubordinatorSpec::stable(0.5), 1.0, 1.0);
  std::stringstream csv;
  fpp::write_pmf_csv(csv, table);
  const auto from_csv = fpp::read_pmf_csv(csv);
  const auto from_json = fpp::pmf_from_json(fpp::pmf_to_json(table));
  ASSERT_EQ(from_csv.rows.size(), table.rows.size());
  ASSERT_EQ(from_json.rows.size(), table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    EXPECT_EQ(from_csv.rows[i].prob, table.rows[i].prob);
    EXPECT_EQ(from_json.rows[i].prob, table.rows[i].prob);
    EXPECT_EQ(from_csv.rows[i].n, table.rows[i].n);
  }
  EXPECT_EQ(from_csv.tail_mass_bound, table.tail_mass_bound);
  EXPECT_EQ(from_json.t, 1.0);
}

TEST(ReportJson, NonFiniteObservationsSurvive) {
  fpp::Report r;
  r.suite = "x";
  r.seed = 42;
  r.cases = {{"a", 0.5, 1.0, true}, {"b", std::numeric_limits<double>::quiet_NaN(), 1.0, false}};
  const auto back = fpp::report_from_json(fpp::report_to_json(r));
  EXPECT_EQ(back.suite, "x");
  EXPECT_EQ(back.seed, 42u);
  ASSERT_EQ(back.cases.size(), 2u);
  EXPECT_EQ(back.cases[0].observed, 0.5);
  EXPECT_TRUE(std::isnan(back.cases[1].observed));
  EXPECT_FALSE(back.passed());
}

TEST(DensityCsv, Layout) {
  std::stringstream ss;
  fpp::write_density_csv(ss, "beta=0.5 t=1", {{0.5, 0.25}});
  EXPECT_EQ(ss.str(), "# beta=0.5 t=1\nx,h\n0.5,0.25\n");
}

}  // namespace
