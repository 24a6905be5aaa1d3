#pragma once

#include <cstddef>
#include <vector>

namespace lrd {

// One realized increment path Y_1..Y_n with its drift mu, and the renewal
// objects built on it:
//   S(t) = sum_{i <= floor(t)} Y_i                (right continuous step)
//   N(x) = inf{ s >= 1 : S(s) > x }               (integer valued)
//   Q(t) = S(t) + mu N(mu t) - 2 mu t
//   Z(t) = mu * integral_0^t Q(s) ds
//   A(t) = mu * integral_{N(mu t)}^{t} (S(s) - mu s - (S(t) - mu t)) ds,
//          signed when N(mu t) > t.
// S works for any increments; the renewal objects require Y >= 0 (data_error
// otherwise) and mu > 0. Integrals are exact: integrands are piecewise linear
// between breakpoints (integers and the points S(k)/mu), and each piece is
// integrated at its midpoint. Queries past the generated horizon throw
// horizon_error; callers regenerate longer and retry.
//
// Instances are cheap to query but not thread safe: renewal prefix tables are
// built lazily on first use.
class sample_path {
 public:
  sample_path(std::vector<double> increments, double mu);

  std::size_t size() const noexcept { return s_.size() - 1; }
  double mu() const noexcept { return mu_; }
  // s()[k] = S(k), k = 0..n.
  const std::vector<double>& s() const noexcept { return s_; }

  double S(double t) const;
  double N(double x) const;
  double Q(double t) const;
  double A(double t) const;
  double Z(double t) const;

  // Z at integer t through the prefix identity
  //   Z(t) = mu ( sum_{j<t} S(j) + integral_0^{mu t} N - mu t^2 ),
  //   integral_0^{X} N = sum_{j<=K} j Y_j + (K+1)(X - S(K)), K = N(X) - 1.
  // O(log n) after a one-time O(n) table build; the exact integrator above is
  // its oracle.
  double Z_integer(std::size_t t) const;

  // N(mu t) and Z(t) on the integer grid t = 1..T in one O(n + T) sweep.
  std::vector<double> N_grid(std::size_t T) const;
  std::vector<double> Z_grid(std::size_t T) const;

  // Scaled functionals at scaling index n (path must cover the horizon):
  //   R_star(s) = n^{alpha/2 - 1} Q(n s)
  //   V(t)      = Z(n t) / (mu n^{2 - alpha})
  double R_star(double s, std::size_t n, double alpha) const;
  double V(double t, std::size_t n, double alpha) const;

 private:
  void require_renewal() const;
  void build_tables() const;

  std::vector<double> s_;
  double mu_;
  bool nonneg_;
  mutable bool tables_built_ = false;
  mutable std::vector<double> cum_s_;  // cum_s_[k] = sum_{j=1..k} S(j)
  mutable std::vector<double> jy_;     // jy_[k] = sum_{j=1..k} j Y_j
};

}  // namespace lrd
