#include "lrd/processes.hpp"

#include <algorithm>
#include <cmath>

#include "lrd/errors.hpp"

namespace lrd {

sample_path::sample_path(std::vector<double> increments, double mu)
    : mu_(mu) {
  if (increments.empty())
    throw parameter_error("sample_path: needs at least one increment");
  if (!(mu > 0.0)) throw parameter_error("sample_path: mu must be positive");
  nonneg_ = true;
  s_.resize(increments.size() + 1);
  s_[0] = 0.0;
  for (std::size_t i = 0; i < increments.size(); ++i) {
    if (increments[i] < 0.0) nonneg_ = false;
    s_[i + 1] = s_[i] + increments[i];
  }
}

void sample_path::require_renewal() const {
  if (!nonneg_)
    throw data_error(
        "sample_path: renewal functionals need nonnegative increments");
}

double sample_path::S(double t) const {
  if (t < 0.0 || t > static_cast<double>(size()))
    throw parameter_error("S: t outside [0, n]");
  return s_[static_cast<std::size_t>(std::floor(t))];
}

double sample_path::N(double x) const {
  require_renewal();
  // First k >= 1 with S(k) > x; S is nondecreasing here.
  auto it = std::upper_bound(s_.begin() + 1, s_.end(), x);
  if (it == s_.end())
    throw horizon_error("N: level not crossed within the path", x, s_.back());
  return static_cast<double>(it - s_.begin());
}

double sample_path::Q(double t) const {
  return S(t) + mu_ * N(mu_ * t) - 2.0 * mu_ * t;
}

double sample_path::Z(double t) const {
  require_renewal();
  if (t < 0.0 || t > static_cast<double>(size()))
    throw parameter_error("Z: t outside [0, n]");
  if (t == 0.0) return 0.0;
  std::vector<double> bps;
  bps.push_back(0.0);
  for (std::size_t k = 1; static_cast<double>(k) < t; ++k)
    bps.push_back(static_cast<double>(k));
  for (std::size_t k = 1; k < s_.size(); ++k) {
    double b = s_[k] / mu_;
    if (b > 0.0 && b < t) bps.push_back(b);
    if (b >= t) break;
  }
  bps.push_back(t);
  std::sort(bps.begin(), bps.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    double lo = bps[i], hi = bps[i + 1];
    if (hi <= lo) continue;
    double mid = 0.5 * (lo + hi);
    double q = s_[static_cast<std::size_t>(std::floor(mid))] +
               mu_ * N(mu_ * mid) - 2.0 * mu_ * mid;
    total += q * (hi - lo);
  }
  return mu_ * total;
}

double sample_path::A(double t) const {
  require_renewal();
  if (t < 0.0 || t > static_cast<double>(size()))
    throw parameter_error("A: t outside [0, n]");
  double nt = N(mu_ * t);
  double lo = std::min(nt, t), hi = std::max(nt, t);
  double sign = nt <= t ? 1.0 : -1.0;
  double level = S(t) - mu_ * t;
  std::vector<double> bps;
  bps.push_back(lo);
  for (double k = std::floor(lo) + 1.0; k < hi; k += 1.0) bps.push_back(k);
  bps.push_back(hi);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    double a = bps[i], b = bps[i + 1];
    if (b <= a) continue;
    double mid = 0.5 * (a + b);
    double v = s_[static_cast<std::size_t>(std::floor(mid))] - mu_ * mid -
               level;
    total += v * (b - a);
  }
  return sign * mu_ * total;
}

void sample_path::build_tables() const {
  if (tables_built_) return;
  std::size_t n = size();
  cum_s_.resize(n + 1);
  jy_.resize(n + 1);
  cum_s_[0] = 0.0;
  jy_[0] = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    cum_s_[k] = cum_s_[k - 1] + s_[k];
    jy_[k] = jy_[k - 1] + static_cast<double>(k) * (s_[k] - s_[k - 1]);
  }
  tables_built_ = true;
}

double sample_path::Z_integer(std::size_t t) const {
  require_renewal();
  if (t > size()) throw parameter_error("Z_integer: t beyond the path");
  if (t == 0) return 0.0;
  build_tables();
  double x = mu_ * static_cast<double>(t);
  std::size_t k1 = static_cast<std::size_t>(N(x));  // K + 1
  std::size_t K = k1 - 1;
  double int_n = jy_[K] + static_cast<double>(k1) * (x - s_[K]);
  double tt = static_cast<double>(t);
  return mu_ * (cum_s_[t - 1] + int_n - mu_ * tt * tt);
}

std::vector<double> sample_path::N_grid(std::size_t T) const {
  require_renewal();
  if (T > size()) throw parameter_error("N_grid: T beyond the path");
  std::vector<double> out(T);
  std::size_t k = 0;  // S(k) <= x < S(k+1) tracker
  for (std::size_t t = 1; t <= T; ++t) {
    double x = mu_ * static_cast<double>(t);
    while (k + 1 < s_.size() && s_[k + 1] <= x) ++k;
    if (k + 1 >= s_.size())
      throw horizon_error("N_grid: level not crossed within the path", x,
                          s_.back());
    out[t - 1] = static_cast<double>(k + 1);
  }
  return out;
}

std::vector<double> sample_path::Z_grid(std::size_t T) const {
  require_renewal();
  if (T > size()) throw parameter_error("Z_grid: T beyond the path");
  build_tables();
  std::vector<double> nvals = N_grid(T);
  std::vector<double> out(T);
  for (std::size_t t = 1; t <= T; ++t) {
    double x = mu_ * static_cast<double>(t);
    std::size_t k1 = static_cast<std::size_t>(nvals[t - 1]);
    std::size_t K = k1 - 1;
    double int_n = jy_[K] + static_cast<double>(k1) * (x - s_[K]);
    double tt = static_cast<double>(t);
    out[t - 1] = mu_ * (cum_s_[t - 1] + int_n - mu_ * tt * tt);
  }
  return out;
}

double sample_path::R_star(double s_arg, std::size_t n, double alpha) const {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error("R_star: alpha must be in (0,1)");
  double nn = static_cast<double>(n);
  return std::pow(nn, 0.5 * alpha - 1.0) * Q(nn * s_arg);
}

double sample_path::V(double t, std::size_t n, double alpha) const {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error("V: alpha must be in (0,1)");
  double nn = static_cast<double>(n);
  return Z(nn * t) / (mu_ * std::pow(nn, 2.0 - alpha));
}

}  // namespace lrd
