#include "lrd/distributions.hpp"

#include <cmath>

#include "lrd/errors.hpp"

namespace lrd {
namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// log sf(x) for x > 25 via the Mills ratio expansion. The last kept term at
// x = 25 is ~1e-11 of the log1p argument.
double logsf_asymptotic(double x) {
  double ix2 = 1.0 / (x * x);
  double series = ix2 * (-1.0 + ix2 * (3.0 + ix2 * (-15.0 + ix2 * 105.0)));
  return -0.5 * x * x - std::log(x) - kLogSqrt2Pi + std::log1p(series);
}

}  // namespace

double norm_pdf(double x) {
  return std::exp(-0.5 * x * x - kLogSqrt2Pi);
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double norm_sf(double x) { return 0.5 * std::erfc(x * M_SQRT1_2); }

double norm_logsf(double x) {
  if (x > 25.0) return logsf_asymptotic(x);
  if (x >= 0.0) return std::log(0.5 * std::erfc(x * M_SQRT1_2));
  // Left side: sf is near 1, so go through the small complement.
  return std::log1p(-norm_sf(-x));
}

double norm_logcdf(double x) { return norm_logsf(-x); }

namespace {

// Safeguarded Newton for a monotone f on [lo, hi] with f(lo), f(hi) of
// opposite sign. df is f'.
template <typename F, typename DF>
double solve_monotone(F f, DF df, double x, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    double fx = f(x);
    if ((fx < 0.0) == (flo < 0.0))
      lo = x;
    else
      hi = x;
    double d = df(x);
    double step = d != 0.0 ? fx / d : 0.0;
    double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * (1.0 + std::abs(next))) return next;
    x = next;
  }
  return x;
}

}  // namespace

double norm_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw parameter_error("norm_quantile: p must be in (0,1)");
  if (p > 0.5) return -norm_quantile(1.0 - p);
  double lp = std::log(p);
  auto f = [lp](double x) { return norm_logcdf(x) - lp; };
  auto df = [](double x) {
    return std::exp(-0.5 * x * x - kLogSqrt2Pi - norm_logcdf(x));
  };
  double x0 = -std::sqrt(-2.0 * lp);
  return solve_monotone(f, df, x0, -41.0, 1e-12);
}

double norm_logsf_inverse(double L) {
  if (!(L < 0.0))
    throw parameter_error("norm_logsf_inverse: L must be negative");
  auto f = [L](double x) { return norm_logsf(x) - L; };
  auto df = [](double x) {
    return -std::exp(-0.5 * x * x - kLogSqrt2Pi - norm_logsf(x));
  };
  double hi = std::sqrt(-2.0 * L) + 2.0;
  double x0 = L < -2.0 ? std::sqrt(-2.0 * L) : 0.0;
  return solve_monotone(f, df, x0, -41.0, hi);
}

double chi2_1_cdf(double x) {
  if (x <= 0.0) return 0.0;
  return std::erf(std::sqrt(0.5 * x));
}

}  // namespace lrd
