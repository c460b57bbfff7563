#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fpp {

struct KSResult {
  double statistic = 0.0;  // sup |F_a - F_b|
  double p_value = 1.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

/// Survival function of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_survival(double lambda);

/// Two-sample Kolmogorov-Smirnov test. The p-value is asymptotic with effective
/// size n1 n2 / (n1 + n2) and the usual small-sample correction
/// lambda = (sqrt(ne) + 0.12 + 0.11 / sqrt(ne)) D. Requires n1, n2 >= 25.
KSResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// p-value of a statistic D for the given sample sizes.
double ks_p_value(double statistic, std::size_t n1, std::size_t n2);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Pearson goodness of fit of counts against cell probabilities (summing to 1).
/// Adjacent cells are pooled left to right until every expected count reaches
/// min_expected.
ChiSquareResult chi_square_gof(const std::vector<long>& counts, const std::vector<double>& probs,
                               double min_expected = 5.0);

struct LaplaceEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Sample mean and standard error of exp(-s X).
LaplaceEstimate empirical_laplace(const std::vector<double>& samples, double s);

/// Mean and standard error of an arbitrary sample.
LaplaceEstimate sample_mean(const std::vector<double>& samples);

struct CaseResult {
  std::string name;
  double observed = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  bool passed() const;
  void append(const Report& other);
};

/// theorem22, theorem23, theorem31, theorem32, theorem41, theorem51, tempered,
/// distributed, fraccalc, all.
const std::vector<std::string>& suite_names();

/// Blocks are the units suites are assembled from; each is seeded independently
/// of the suite it runs in.
const std::vector<std::string>& block_names();

/// Runs a named suite with deterministic seeding. jobs spreads Monte Carlo draws
/// over threads without changing any result. Unknown names throw DomainError
/// listing the valid ones.
Report run_suite(const std::string& name, std::uint64_t seed, unsigned jobs = 1);
Report run_block(const std::string& name, std::uint64_t seed, unsigned jobs = 1);

}  // namespace fpp
