#pragma once

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fpp/montecarlo.hpp"
#include "fpp/validation.hpp"

namespace testing_support {

inline double rel_err(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// |estimate - expected| <= 3 standard errors.
inline ::testing::AssertionResult within_3se(const fpp::LaplaceEstimate& e, double expected) {
  const double z = std::fabs(e.estimate - expected) / e.std_error;
  if (z <= 3.0) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "estimate " << e.estimate << " vs " << expected << " is " << z
                                       << " standard errors off (se " << e.std_error << ")";
}

template <class Draw>
std::vector<double> draws(std::size_t n, std::uint64_t seed, Draw&& d, std::uint64_t stream = 0) {
  return fpp::monte_carlo<double>(n, seed, std::forward<Draw>(d), 1, stream);
}

}  // namespace testing_support
