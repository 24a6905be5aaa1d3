#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace lrd {

// Kolmogorov-Smirnov distance between a sample and a continuous CDF:
// max over both one-sided deviations at the order statistics.
double ks_distance(std::vector<double> sample,
                   const std::function<double(double)>& cdf);

// Asymptotic 95% critical value for the KS statistic, 1.35810 / sqrt(n).
double ks_critical_95(std::size_t n);

struct moments {
  double mean;
  double sd;        // unbiased
  double skewness;  // standardized third central moment
  std::size_t n;
};
moments sample_moments(const std::vector<double>& sample);

double median(std::vector<double> sample);

// Empirical quantile of a sorted sample: smallest order statistic whose rank
// covers t n. t = 0 maps to the smallest sample point.
double sample_quantile(const std::vector<double>& sorted, double t);

// OLS fit of log y against log x. Inputs must be positive (data_error), at
// least three points, and x strictly increasing.
struct slope_fit {
  double slope;
  double intercept;     // in log space
  double stderr_slope;
  std::size_t points;
};
slope_fit fit_rate_slope(const std::vector<double>& x,
                         const std::vector<double>& y);

}  // namespace lrd
