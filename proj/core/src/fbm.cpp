#include "lrd/fbm.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <complex>

#include "lrd/errors.hpp"
#include "lrd/fft.hpp"

namespace lrd {
namespace {

constexpr std::size_t kCholeskyCap = 4096;

void check_H(double H) {
  if (!(H > 0.0 && H < 1.0))
    throw parameter_error("fbm: H must be in (0,1)");
}

double pow2H(double x, double H) { return std::pow(x, 2.0 * H); }

}  // namespace

double fbm_covariance(double s, double t, double H) {
  check_H(H);
  if (s < 0.0 || t < 0.0)
    throw parameter_error("fbm_covariance: times must be nonnegative");
  return 0.5 * (pow2H(s, H) + pow2H(t, H) - pow2H(std::abs(t - s), H));
}

std::vector<double> fbm_exact_cholesky(const std::vector<double>& times,
                                       double H,
                                       const normal_stream& stream) {
  check_H(H);
  std::size_t n = times.size();
  if (n == 0) return {};
  if (n > kCholeskyCap)
    throw parameter_error("fbm_exact_cholesky: grid larger than 4096");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(times[i] > 0.0) || (i > 0 && !(times[i] > times[i - 1])))
      throw parameter_error(
          "fbm_exact_cholesky: times must be positive and increasing");
  }
  Eigen::MatrixXd cov(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double v = fbm_covariance(times[i], times[j], H);
      cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      cov(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success)
    throw numerical_error("fbm_exact_cholesky: covariance not positive definite");
  Eigen::VectorXd z(n);
  for (std::size_t i = 0; i < n; ++i)
    z(static_cast<Eigen::Index>(i)) =
        stream.normal(static_cast<std::int64_t>(i));
  Eigen::VectorXd w = llt.matrixL() * z;
  return std::vector<double>(w.data(), w.data() + n);
}

std::vector<double> fgn_circulant(std::size_t n, double H,
                                  const normal_stream& stream) {
  check_H(H);
  if (n < 2) throw parameter_error("fgn_circulant: n must be >= 2");

  // Circulant first row from the fGn autocovariance
  // gamma(k) = ((k+1)^{2H} - 2 k^{2H} + |k-1|^{2H}) / 2.
  std::size_t m = 2 * n;
  std::vector<std::complex<double>> c(m);
  auto gamma = [H](std::size_t k) {
    double kk = static_cast<double>(k);
    return 0.5 * (pow2H(kk + 1.0, H) - 2.0 * pow2H(kk, H) +
                  pow2H(std::abs(kk - 1.0), H));
  };
  for (std::size_t k = 0; k <= n; ++k) c[k] = gamma(k);
  for (std::size_t k = 1; k < n; ++k) c[m - k] = gamma(k);
  fft::forward(c);

  std::vector<double> lambda(m);
  bool fallback = false;
  for (std::size_t k = 0; k < m; ++k) {
    double v = c[k].real();
    if (v < 0.0) {
      if (v >= -1e-9)
        v = 0.0;  // rounding of a zero eigenvalue
      else
        fallback = true;
    }
    lambda[k] = v;
  }
  if (fallback) {
    if (n > kCholeskyCap)
      throw numerical_error(
          "fgn_circulant: embedding not nonnegative definite and grid too "
          "large for the exact sampler");
    std::vector<double> times(n);
    for (std::size_t i = 0; i < n; ++i)
      times[i] = static_cast<double>(i + 1);
    std::vector<double> path = fbm_exact_cholesky(times, H, stream);
    std::vector<double> inc(n);
    double prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      inc[i] = path[i] - prev;
      prev = path[i];
    }
    return inc;
  }

  // Davies-Harte synthesis. Indices 0 and n take one real normal each; the
  // interior doubles up.
  std::vector<std::complex<double>> a(m);
  double mm = static_cast<double>(m);
  a[0] = std::sqrt(lambda[0] / mm) * stream.normal(0);
  a[n] = std::sqrt(lambda[n] / mm) *
         stream.normal(static_cast<std::int64_t>(2 * n - 1));
  for (std::size_t k = 1; k < n; ++k) {
    double scale = std::sqrt(lambda[k] / (2.0 * mm));
    double re = stream.normal(static_cast<std::int64_t>(2 * k - 1));
    double im = stream.normal(static_cast<std::int64_t>(2 * k));
    a[k] = std::complex<double>(scale * re, scale * im);
    a[m - k] = std::conj(a[k]);
  }
  fft::forward(a);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i].real();
  return out;
}

std::vector<double> fbm_circulant(std::size_t n, double H, double dt,
                                  const normal_stream& stream) {
  if (!(dt > 0.0)) throw parameter_error("fbm_circulant: dt must be positive");
  std::vector<double> inc = fgn_circulant(n, H, stream);
  std::vector<double> w(n + 1, 0.0);
  double scale = std::pow(dt, H);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += inc[i];
    w[i + 1] = acc * scale;
  }
  return w;
}

namespace {

void check_coupled_args(double alpha, std::size_t M, std::size_t T) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw parameter_error("coupled_fbm: alpha must be in (0,1)");
  if (M < 1 || T < 1)
    throw parameter_error("coupled_fbm: M and T must be >= 1");
}

// c_norm anchor: sum over k in [-M, T) of K_T(k)^2.
double kernel_norm(double alpha, std::size_t M, std::size_t T) {
  double p = 0.5 * (1.0 - alpha);
  double acc = 0.0;
  for (std::int64_t k = -static_cast<std::int64_t>(M);
       k < static_cast<std::int64_t>(T); ++k) {
    double lead = std::pow(static_cast<double>(static_cast<std::int64_t>(T) - k), p);
    double tail = k < 0 ? std::pow(static_cast<double>(-k), p) : 0.0;
    double v = lead - tail;
    acc += v * v;
  }
  return acc;
}

}  // namespace

coupled_fbm coupled_fbm_path(double alpha, std::size_t M, std::size_t T,
                             const std::vector<double>& xi) {
  check_coupled_args(alpha, M, T);
  if (xi.size() != T + M)
    throw parameter_error("coupled_fbm_path: xi must have length T + M");
  double p = 0.5 * (1.0 - alpha);
  double H = 1.0 - 0.5 * alpha;
  double c = std::pow(static_cast<double>(T), H) /
             std::sqrt(kernel_norm(alpha, M, T));

  // W(i) = c (conv[i+M-1] - C0): conv is the tap sequence j^p (j = 1..T+M)
  // against xi, C0 the i-independent negative-side constant.
  std::vector<double> taps(T + M);
  for (std::size_t j = 0; j < T + M; ++j)
    taps[j] = std::pow(static_cast<double>(j + 1), p);
  std::size_t len = fft::next_pow2(2 * (T + M));
  std::vector<double> conv = fft::circular_convolve(taps, xi, len);
  double c0 = 0.0;
  for (std::size_t i = 0; i < M; ++i)
    c0 += std::pow(static_cast<double>(M - i), p) * xi[i];

  coupled_fbm out;
  out.c_norm = c;
  out.w.assign(T + 1, 0.0);
  for (std::size_t t = 1; t <= T; ++t) out.w[t] = c * (conv[t + M - 1] - c0);
  return out;
}

coupled_fbm coupled_fbm_path(double alpha, std::size_t M, std::size_t T,
                             const normal_stream& stream) {
  check_coupled_args(alpha, M, T);
  std::vector<double> xi =
      stream.take(-static_cast<std::int64_t>(M), T + M);
  return coupled_fbm_path(alpha, M, T, xi);
}

coupled_fbm coupled_fbm_direct(double alpha, std::size_t M, std::size_t T,
                               const std::vector<double>& xi) {
  check_coupled_args(alpha, M, T);
  if (xi.size() != T + M)
    throw parameter_error("coupled_fbm_direct: xi must have length T + M");
  double p = 0.5 * (1.0 - alpha);
  double H = 1.0 - 0.5 * alpha;
  double c = std::pow(static_cast<double>(T), H) /
             std::sqrt(kernel_norm(alpha, M, T));
  coupled_fbm out;
  out.c_norm = c;
  out.w.assign(T + 1, 0.0);
  for (std::size_t t = 1; t <= T; ++t) {
    double acc = 0.0;
    for (std::int64_t k = -static_cast<std::int64_t>(M);
         k < static_cast<std::int64_t>(t); ++k) {
      double lead =
          std::pow(static_cast<double>(static_cast<std::int64_t>(t) - k), p);
      double tail = k < 0 ? std::pow(static_cast<double>(-k), p) : 0.0;
      acc += (lead - tail) * xi[static_cast<std::size_t>(
                 k + static_cast<std::int64_t>(M))];
    }
    out.w[t] = c * acc;
  }
  return out;
}

}  // namespace lrd
