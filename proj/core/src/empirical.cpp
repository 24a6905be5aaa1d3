#include "lrd/empirical.hpp"

#include <algorithm>
#include <cmath>

#include "lrd/errors.hpp"

namespace lrd {

double ks_distance(std::vector<double> sample,
                   const std::function<double(double)>& cdf) {
  if (sample.empty()) throw data_error("ks_distance: empty sample");
  std::sort(sample.begin(), sample.end());
  double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    double f = cdf(sample[i]);
    double hi = (static_cast<double>(i) + 1.0) / n - f;  // D+
    double lo = f - static_cast<double>(i) / n;          // D-
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

double ks_critical_95(std::size_t n) {
  if (n == 0) throw parameter_error("ks_critical_95: n must be positive");
  return 1.35810 / std::sqrt(static_cast<double>(n));
}

moments sample_moments(const std::vector<double>& sample) {
  if (sample.size() < 2) throw data_error("sample_moments: need n >= 2");
  double n = static_cast<double>(sample.size());
  double mean = 0.0;
  for (double v : sample) mean += v;
  mean /= n;
  double m2 = 0.0, m3 = 0.0;
  for (double v : sample) {
    double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  double var = m2 / (n - 1.0);
  double sd = std::sqrt(var);
  double skew = 0.0;
  if (m2 > 0.0) skew = (m3 / n) / std::pow(m2 / n, 1.5);
  return {mean, sd, skew, sample.size()};
}

double median(std::vector<double> sample) {
  if (sample.empty()) throw data_error("median: empty sample");
  std::size_t mid = sample.size() / 2;
  std::nth_element(sample.begin(), sample.begin() + mid, sample.end());
  double hi = sample[mid];
  if (sample.size() % 2 == 1) return hi;
  double lo = *std::max_element(sample.begin(), sample.begin() + mid);
  return 0.5 * (lo + hi);
}

double sample_quantile(const std::vector<double>& sorted, double t) {
  if (sorted.empty()) throw data_error("sample_quantile: empty sample");
  if (!(t >= 0.0 && t <= 1.0))
    throw parameter_error("sample_quantile: t must be in [0,1]");
  double n = static_cast<double>(sorted.size());
  std::size_t rank =
      static_cast<std::size_t>(std::ceil(t * n));  // smallest covering rank
  if (rank == 0) rank = 1;
  if (rank > sorted.size()) rank = sorted.size();
  return sorted[rank - 1];
}

slope_fit fit_rate_slope(const std::vector<double>& x,
                         const std::vector<double>& y) {
  if (x.size() != y.size())
    throw parameter_error("fit_rate_slope: size mismatch");
  if (x.size() < 3) throw data_error("fit_rate_slope: need at least 3 points");
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || (i > 0 && !(x[i] > x[i - 1])))
      throw data_error("fit_rate_slope: x must be positive and increasing");
    if (!(y[i] > 0.0))
      throw data_error("fit_rate_slope: y must be positive to take logs");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw data_error("fit_rate_slope: degenerate x grid");
  double slope = sxy / sxx;
  double intercept = my - slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = ly[i] - intercept - slope * lx[i];
    rss += r * r;
  }
  double se = x.size() > 2
                  ? std::sqrt(rss / (n - 2.0) / sxx)
                  : 0.0;
  return {slope, intercept, se, x.size()};
}

}  // namespace lrd
