#include "lrd/subordination.hpp"

#include <cmath>

#include "lrd/distributions.hpp"
#include "lrd/errors.hpp"
#include "lrd/hermite.hpp"
#include "lrd/quadrature.hpp"

namespace lrd {

subordinator make_identity() {
  subordinator s;
  s.g = [](double x) { return x; };
  s.g_inv = [](double y) { return y; };
  s.cdf = [](double y) { return norm_cdf(y); };
  s.quantile = [](double t) { return norm_quantile(t); };
  s.density = [](double y) { return norm_pdf(y); };
  s.mu = 0.0;
  s.second_moment = 1.0;
  s.positive = false;
  s.increasing = true;
  s.description = "identity";
  s.j_closed = [](int q) { return q == 1 ? 1.0 : 0.0; };
  return s;
}

subordinator make_square() {
  subordinator s;
  s.g = [](double x) { return x * x - 1.0; };
  s.g_inv = [](double y) {
    if (y < -1.0) throw parameter_error("square g_inv: y must be >= -1");
    return std::sqrt(y + 1.0);  // nonnegative branch
  };
  s.cdf = [](double y) { return chi2_1_cdf(y + 1.0); };
  s.quantile = [](double t) {
    double a = norm_quantile(0.5 * (1.0 + t));
    return a * a - 1.0;
  };
  s.density = [](double y) {
    if (y <= -1.0) return 0.0;
    double a = std::sqrt(y + 1.0);
    return norm_pdf(a) / a;
  };
  s.mu = 0.0;
  s.second_moment = 2.0;
  s.positive = false;
  s.increasing = false;
  s.description = "square";
  s.j_closed = [](int q) { return q == 2 ? 2.0 : 0.0; };
  return s;
}

subordinator make_exponential() {
  subordinator s;
  s.g = [](double x) { return std::exp(x); };
  s.g_inv = [](double y) {
    if (y <= 0.0) throw parameter_error("exp g_inv: y must be positive");
    return std::log(y);
  };
  s.cdf = [](double y) { return y <= 0.0 ? 0.0 : norm_cdf(std::log(y)); };
  s.quantile = [](double t) { return std::exp(norm_quantile(t)); };
  s.density = [](double y) {
    return y <= 0.0 ? 0.0 : norm_pdf(std::log(y)) / y;
  };
  s.mu = std::exp(0.5);
  s.second_moment = std::exp(2.0);
  s.positive = true;
  s.increasing = true;
  s.description = "exp";
  s.j_closed = [](int) { return std::exp(0.5); };
  return s;
}

subordinator make_quantile_exponential(double lambda) {
  if (!(lambda > 0.0))
    throw parameter_error("quantile_exponential: lambda must be positive");
  subordinator s;
  s.g = [lambda](double x) { return -norm_logsf(x) / lambda; };
  s.g_inv = [lambda](double y) {
    if (y <= 0.0) throw parameter_error("qexp g_inv: y must be positive");
    return norm_logsf_inverse(-lambda * y);
  };
  s.cdf = [lambda](double y) {
    return y <= 0.0 ? 0.0 : -std::expm1(-lambda * y);
  };
  s.quantile = [lambda](double t) {
    if (!(t >= 0.0 && t < 1.0))
      throw parameter_error("qexp quantile: t must be in [0,1)");
    return -std::log1p(-t) / lambda;
  };
  s.density = [lambda](double y) {
    return y <= 0.0 ? 0.0 : lambda * std::exp(-lambda * y);
  };
  s.mu = 1.0 / lambda;
  s.second_moment = 2.0 / (lambda * lambda);
  s.positive = true;
  s.increasing = true;
  s.description = "qexp(" + std::to_string(lambda) + ")";
  return s;
}

subordinator make_lognormal(double m, double sdev) {
  if (!(sdev > 0.0)) throw parameter_error("lognormal: s must be positive");
  subordinator s;
  s.g = [m, sdev](double x) { return std::exp(m + sdev * x); };
  s.g_inv = [m, sdev](double y) {
    if (y <= 0.0) throw parameter_error("lognormal g_inv: y must be positive");
    return (std::log(y) - m) / sdev;
  };
  s.cdf = [m, sdev](double y) {
    return y <= 0.0 ? 0.0 : norm_cdf((std::log(y) - m) / sdev);
  };
  s.quantile = [m, sdev](double t) {
    return std::exp(m + sdev * norm_quantile(t));
  };
  s.density = [m, sdev](double y) {
    if (y <= 0.0) return 0.0;
    return norm_pdf((std::log(y) - m) / sdev) / (sdev * y);
  };
  s.mu = std::exp(m + 0.5 * sdev * sdev);
  s.second_moment = std::exp(2.0 * m + 2.0 * sdev * sdev);
  s.positive = true;
  s.increasing = true;
  s.description = "lognormal(" + std::to_string(m) + "," +
                  std::to_string(sdev) + ")";
  s.j_closed = [m, sdev](int q) {
    return std::exp(m + 0.5 * sdev * sdev) * std::pow(sdev, q);
  };
  return s;
}

subordinator make_subordinator(const std::string& name, double p1, double p2) {
  if (name == "identity") return make_identity();
  if (name == "square") return make_square();
  if (name == "exp") return make_exponential();
  if (name == "qexp") return make_quantile_exponential(p1);
  if (name == "lognormal") return make_lognormal(p1, p2);
  throw parameter_error("make_subordinator: unknown name '" + name + "'");
}

double hermite_coefficient(const subordinator& sub, int q, double tol) {
  if (q < 0) throw parameter_error("hermite_coefficient: q must be >= 0");
  return normal_expectation(
      [&](double x) { return sub.g(x) * hermite(q, x); }, tol);
}

int hermite_rank(const subordinator& sub, int qmax) {
  if (qmax < 1) throw parameter_error("hermite_rank: qmax must be >= 1");
  double threshold = 1e-10 * std::sqrt(sub.second_moment);
  for (int q = 1; q <= qmax; ++q)
    if (std::abs(hermite_coefficient(sub, q)) > threshold) return q;
  return 0;
}

double indicator_coefficient(const subordinator& sub, int q, double y) {
  if (q < 1) throw parameter_error("indicator_coefficient: q must be >= 1");
  if (!sub.increasing)
    throw parameter_error(
        "indicator_coefficient: needs a strictly increasing map");
  double a = sub.g_inv(y);
  // Integral of H_q phi over (-inf, a], pulled onto [0,1) by
  // u = a - s/(1-s); the factor 1/(1-s)^2 is tamed by the Gaussian decay.
  auto f = [&](double s) {
    double om = 1.0 - s;
    double u = a - s / om;
    double phi = norm_pdf(u);
    if (phi == 0.0) return 0.0;
    return hermite(q, u) * phi / (om * om);
  };
  double prev = integrate(f, 0.0, 1.0, 64, 4);
  for (std::size_t panels = 8; panels <= 64; panels *= 2) {
    double v = integrate(f, 0.0, 1.0, 64, panels);
    if (std::abs(v - prev) <= 1e-10 * (1.0 + std::abs(v))) return v;
    prev = v;
  }
  double last = integrate(f, 0.0, 1.0, 64, 128);
  if (std::abs(last - prev) <= 1e-9 * (1.0 + std::abs(last))) return last;
  throw numerical_error("indicator_coefficient: panel doubling stalled", last,
                        prev);
}

double limit_scale_bk(const subordinator& sub, int m, double alpha, double t) {
  if (m < 1) throw parameter_error("limit_scale_bk: m must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error("limit_scale_bk: alpha must be in (0,1)");
  if (!(m * alpha < 1.0))
    throw parameter_error("limit_scale_bk: requires m * alpha < 1");
  if (!(t > 0.0 && t < 1.0))
    throw parameter_error("limit_scale_bk: t must be in (0,1)");
  double x_t = sub.quantile(t);
  double c = indicator_coefficient(sub, m, x_t);
  double ma = static_cast<double>(m) * alpha;
  return std::sqrt(2.0 / ((2.0 - ma) * (1.0 - ma))) * std::abs(c);
}

}  // namespace lrd
