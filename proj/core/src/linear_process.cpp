#include "lrd/linear_process.hpp"

#include <cmath>
#include <mutex>

#include "lrd/constants.hpp"
#include "lrd/errors.hpp"
#include "lrd/fft.hpp"

namespace lrd {

namespace {
// Above this work product the FFT route wins over the direct sum.
constexpr std::size_t kFftThreshold = std::size_t{1} << 22;
}  // namespace

linear_model::linear_model(double alpha, std::size_t M)
    : alpha_(alpha), M_(M) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error("linear_model: alpha must be in (0,1)");
  if (M < 1) throw parameter_error("linear_model: M must be >= 1");
  psi_.resize(M + 1);
  psi_[0] = 1.0;
  const double e = -0.5 * (1.0 + alpha);
  for (std::size_t k = 1; k <= M; ++k)
    psi_[k] = std::pow(static_cast<double>(k), e);
  sigma2_ = 0.0;
  for (double w : psi_) sigma2_ += w * w;
  sigma_ = std::sqrt(sigma2_);
}

std::vector<double> linear_model::rho(std::size_t kmax) const {
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (rho_cache_.empty()) {
      rho_cache_ = fft::autocorrelation(psi_);
      double r0 = rho_cache_[0];
      for (double& r : rho_cache_) r /= r0;
    }
  }
  std::vector<double> out(kmax + 1, 0.0);
  std::size_t upto = std::min(kmax, M_);
  for (std::size_t k = 0; k <= upto; ++k) out[k] = rho_cache_[k];
  return out;
}

double linear_model::exact_partial_sum_variance(std::size_t n) const {
  if (n == 0) return 0.0;
  std::size_t kmax = std::min(n - 1, M_);
  std::vector<double> r = rho(kmax);
  double var = static_cast<double>(n);
  for (std::size_t k = 1; k <= kmax; ++k)
    var += 2.0 * static_cast<double>(n - k) * r[k];
  return var;
}

double linear_model::variance_ratio(std::size_t n) const {
  if (n == 0) throw parameter_error("variance_ratio: n must be positive");
  double scale = kappa_alpha2(alpha_) *
                 std::pow(static_cast<double>(n), 2.0 - alpha_);
  return sigma2_ * exact_partial_sum_variance(n) / scale;
}

double linear_model::covariance_ratio(std::size_t k) const {
  if (k == 0) throw parameter_error("covariance_ratio: k must be >= 1");
  std::vector<double> r = rho(k);
  double asym = b_alpha(alpha_) * std::pow(static_cast<double>(k), -alpha_);
  return sigma2_ * r[k] / asym;
}

std::vector<double> linear_model::generate_from(const std::vector<double>& xi,
                                                std::size_t n,
                                                conv_route route) const {
  if (xi.size() != n + M_)
    throw parameter_error("generate_from: xi must have length n + M");
  if (n == 0) return {};
  if (route == conv_route::automatic)
    route = n * (M_ + 1) > kFftThreshold ? conv_route::fft
                                         : conv_route::direct;
  std::vector<double> eta(n);
  if (route == conv_route::direct) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      // xi[j + M - k] is innovation index first + j - k.
      for (std::size_t k = 0; k <= M_; ++k) acc += psi_[k] * xi[j + M_ - k];
      eta[j] = acc / sigma_;
    }
    return eta;
  }
  // Circular convolution of psi (M+1 taps) with xi (n+M values) at length
  // L >= n+M+1: wraparound reaches only entries below M-1, the read window
  // [M, M+n) stays linear.
  std::size_t len = fft::next_pow2(n + M_ + 1);
  std::vector<double> conv = fft::circular_convolve(psi_, xi, len);
  for (std::size_t j = 0; j < n; ++j) eta[j] = conv[j + M_] / sigma_;
  return eta;
}

std::vector<double> linear_model::generate(std::size_t n,
                                           const normal_stream& stream,
                                           std::int64_t first,
                                           conv_route route) const {
  std::vector<double> xi =
      stream.take(first - static_cast<std::int64_t>(M_), n + M_);
  return generate_from(xi, n, route);
}

}  // namespace lrd
