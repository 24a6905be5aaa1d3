#pragma once

#include <cstddef>
#include <vector>

#include "lrd/rng.hpp"

namespace lrd {

// Fractional Brownian motion covariance, H in (0,1):
// R(s,t) = (s^{2H} + t^{2H} - |t-s|^{2H}) / 2.
double fbm_covariance(double s, double t, double H);

// Exact sampler on an increasing positive time grid via Cholesky of the path
// covariance. Cost is cubic; grids are capped at 4096 points.
std::vector<double> fbm_exact_cholesky(const std::vector<double>& times,
                                       double H, const normal_stream& stream);

// Unit-spacing fractional Gaussian noise by circulant embedding
// (Davies-Harte). The embedding eigenvalues are nonnegative for this
// covariance up to rounding; values in [-1e-9, 0) are clipped to zero and a
// genuinely negative spectrum falls back to the exact sampler (or throws past
// its grid cap). Consumes stream indices [0, 2n).
std::vector<double> fgn_circulant(std::size_t n, double H,
                                  const normal_stream& stream);

// Cumulated circulant path on t_i = i dt: returns n+1 values starting at
// W(0) = 0.
std::vector<double> fbm_circulant(std::size_t n, double H, double dt,
                                  const normal_stream& stream);

// fBm coupled to the linear model through shared innovations. Grid t = 0..T,
// kernel K_i(k) = (i-k)_+^{(1-alpha)/2} - (-k)_+^{(1-alpha)/2} truncated to
// k >= -M, driven by xi_{-M}..xi_{T-1}. c_norm is calibrated so that
// Var W(T) = T^{2H} exactly under the truncated kernel.
struct coupled_fbm {
  std::vector<double> w;  // w[t], t = 0..T; w[0] = 0
  double c_norm;
};

// xi[i] = xi_{i-M}, length T + M. FFT evaluation, O((T+M) log(T+M)).
coupled_fbm coupled_fbm_path(double alpha, std::size_t M, std::size_t T,
                             const std::vector<double>& xi);
// Convenience: draws the innovation slice from `stream` (indices -M..T-1),
// the same indices linear_model::generate consumes.
coupled_fbm coupled_fbm_path(double alpha, std::size_t M, std::size_t T,
                             const normal_stream& stream);

// O(T (T+M)) direct evaluation of the same object; the FFT oracle.
coupled_fbm coupled_fbm_direct(double alpha, std::size_t M, std::size_t T,
                               const std::vector<double>& xi);

}  // namespace lrd
