#pragma once

namespace fpp {
struct SeriesControl;
}

namespace fpp::detail {

struct SeriesResult {
  double value = 0.0;
  double rounding = 0.0;  // estimated absolute rounding error of the sum
  int terms = 0;
  bool converged = false;
};

// exp(log_scale) * E^gamma_{alpha,theta}(z), summed term-wise in log space.
SeriesResult prabhakar_series(double gamma, double alpha, double theta, double z,
                              double log_scale, const SeriesControl& ctl);

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace fpp::detail
