#include "lrd/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>

#include "lrd/errors.hpp"

namespace lrd {
namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi
// matrix, weight_i = mu0 * (first eigenvector component)^2.
quadrature_rule golub_welsch(const Eigen::VectorXd& diag,
                             const Eigen::VectorXd& sub, double mu0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw numerical_error("golub_welsch: eigensolver failed");
  std::size_t n = static_cast<std::size_t>(diag.size());
  quadrature_rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.x[i] = es.eigenvalues()(static_cast<Eigen::Index>(i));
    double v0 = es.eigenvectors()(0, static_cast<Eigen::Index>(i));
    r.w[i] = mu0 * v0 * v0;
  }
  return r;
}

quadrature_rule make_legendre(std::size_t n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 0 ? n - 1 : 0));
  for (std::size_t k = 1; k < n; ++k) {
    double kk = static_cast<double>(k);
    sub(static_cast<Eigen::Index>(k - 1)) = kk / std::sqrt(4.0 * kk * kk - 1.0);
  }
  return golub_welsch(diag, sub, 2.0);
}

quadrature_rule make_hermite(std::size_t n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 0 ? n - 1 : 0));
  for (std::size_t k = 1; k < n; ++k)
    sub(static_cast<Eigen::Index>(k - 1)) =
        std::sqrt(static_cast<double>(k) / 2.0);
  quadrature_rule r = golub_welsch(diag, sub, std::sqrt(M_PI));
  const double rt2 = std::sqrt(2.0);
  const double inv_rtpi = 1.0 / std::sqrt(M_PI);
  for (auto& x : r.x) x *= rt2;
  for (auto& w : r.w) w *= inv_rtpi;
  return r;
}

class rule_cache {
 public:
  const quadrature_rule& get(int kind, std::size_t n,
                             quadrature_rule (*make)(std::size_t)) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(kind, n);
    auto it = rules_.find(key);
    if (it == rules_.end()) it = rules_.emplace(key, make(n)).first;
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, std::size_t>, quadrature_rule> rules_;
};

rule_cache& cache() {
  static rule_cache c;
  return c;
}

}  // namespace

const quadrature_rule& gauss_legendre(std::size_t n) {
  if (n == 0) throw parameter_error("gauss_legendre: n must be positive");
  return cache().get(0, n, make_legendre);
}

const quadrature_rule& gauss_hermite(std::size_t n) {
  if (n == 0) throw parameter_error("gauss_hermite: n must be positive");
  return cache().get(1, n, make_hermite);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::size_t n, std::size_t panels) {
  if (panels == 0) throw parameter_error("integrate: panels must be positive");
  const quadrature_rule& r = gauss_legendre(n);
  double total = 0.0;
  double h = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    double lo = a + h * static_cast<double>(p);
    double mid = lo + 0.5 * h;
    double half = 0.5 * h;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += r.w[i] * f(mid + half * r.x[i]);
    total += half * acc;
  }
  return total;
}

double normal_expectation(const std::function<double(double)>& f, double tol,
                          std::size_t n0, std::size_t max_nodes) {
  double prev = 0.0, prev2 = 0.0;
  bool have_prev = false;
  for (std::size_t n = n0; n <= max_nodes; n *= 2) {
    const quadrature_rule& r = gauss_hermite(n);
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) v += r.w[i] * f(r.x[i]);
    if (have_prev && std::abs(v - prev) <= tol * (1.0 + std::abs(v))) return v;
    prev2 = prev;
    prev = v;
    have_prev = true;
  }
  throw numerical_error("normal_expectation: node doubling did not converge",
                        prev, prev2);
}

}  // namespace lrd
