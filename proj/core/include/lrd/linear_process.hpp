#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrd/rng.hpp"

namespace lrd {

enum class conv_route { automatic, direct, fft };

// Truncated one-sided moving average with hyperbolic weights:
//   eta_j = sum_{k=0}^{M} psi_k xi_{j-k},  psi_0 = 1, psi_k = k^{-(1+alpha)/2}.
// The normalized process eta~ = eta / sigma has unit variance; its
// autocorrelation decays like (b_alpha / sigma^2) k^{-alpha} until the
// truncation horizon M.
class linear_model {
 public:
  linear_model(double alpha, std::size_t M);

  double alpha() const noexcept { return alpha_; }
  std::size_t truncation() const noexcept { return M_; }
  const std::vector<double>& psi() const noexcept { return psi_; }
  double sigma2() const noexcept { return sigma2_; }
  double sigma() const noexcept { return sigma_; }

  // rho[k] for k = 0..kmax, unit rho[0]; identically zero past M.
  std::vector<double> rho(std::size_t kmax) const;

  // Var(sum_{i=1..n} eta~_i) = n + 2 sum_k (n-k) rho_k, exact under
  // truncation. O(min(n, M)) after the autocorrelation pass.
  double exact_partial_sum_variance(std::size_t n) const;

  // exact_partial_sum_variance(n) * sigma^2 / (kappa_alpha^2 n^{2-alpha}):
  // how close the truncated model sits to its limit constant at length n.
  double variance_ratio(std::size_t n) const;

  // sigma^2 rho_k / (b_alpha k^{-alpha}): pointwise covariance against the
  // asymptote.
  double covariance_ratio(std::size_t k) const;

  // Normalized path eta~_j for j = first..first+n-1, driven by innovation
  // indices j-M..j of `stream` (so two objects built from one stream are
  // coupled through shared innovations). route::automatic switches to FFT
  // convolution once n (M+1) passes 2^22.
  std::vector<double> generate(std::size_t n, const normal_stream& stream,
                               std::int64_t first = 0,
                               conv_route route = conv_route::automatic) const;

  // Same, but from an explicit innovation slice xi[i] = xi_{first-M+i},
  // length n + M.
  std::vector<double> generate_from(const std::vector<double>& xi,
                                    std::size_t n,
                                    conv_route route) const;

 private:
  double alpha_;
  std::size_t M_;
  std::vector<double> psi_;
  double sigma2_;
  double sigma_;
  mutable std::vector<double> rho_cache_;
};

}  // namespace lrd
