#include "lrd/constants.hpp"

#include <cmath>

#include "lrd/errors.hpp"
#include "lrd/quadrature.hpp"

namespace lrd {
namespace {

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error(std::string(who) + ": alpha must be in (0,1)");
}

}  // namespace

double b_alpha(double alpha) {
  check_alpha(alpha, "b_alpha");
  // Integral of (x(1+x))^{-(1+alpha)/2} over (0,inf), split at x = 1.
  // On (0,1]: x = s^{2/(1-alpha)} removes the x^{-(1+alpha)/2} singularity.
  // On [1,inf): x = s^{-1/alpha} maps the tail onto (0,1].
  const double e = 0.5 * (1.0 + alpha);
  const double p1 = 2.0 / (1.0 - alpha);
  const double p2 = 1.0 / alpha;
  auto f1 = [&](double s) { return std::pow(1.0 + std::pow(s, p1), -e); };
  auto f2 = [&](double s) { return std::pow(1.0 + std::pow(s, p2), -e); };
  return p1 * integrate(f1, 0.0, 1.0, 64, 4) +
         p2 * integrate(f2, 0.0, 1.0, 64, 4);
}

double kappa_alpha2(double alpha) {
  check_alpha(alpha, "kappa_alpha2");
  return 2.0 * b_alpha(alpha) / ((1.0 - alpha) * (2.0 - alpha));
}

double kappa_alpha(double alpha) { return std::sqrt(kappa_alpha2(alpha)); }

double gamma_rate(double alpha) {
  check_alpha(alpha, "gamma_rate");
  return alpha < 0.5 ? 2.0 - 2.0 * alpha : 1.0;
}

double hurst(double alpha) {
  check_alpha(alpha, "hurst");
  return 1.0 - 0.5 * alpha;
}

double scaling_d(std::size_t n, int m, double alpha) {
  check_alpha(alpha, "scaling_d");
  if (m < 1) throw parameter_error("scaling_d: m must be >= 1");
  if (!(m * alpha < 1.0))
    throw parameter_error("scaling_d: requires m * alpha < 1");
  if (n == 0) throw parameter_error("scaling_d: n must be positive");
  return std::pow(static_cast<double>(n), 1.0 - 0.5 * m * alpha);
}

}  // namespace lrd
