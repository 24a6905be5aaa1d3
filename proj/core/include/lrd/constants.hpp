#pragma once

#include <cstddef>

namespace lrd {

// Memory parameter alpha lives in (0,1) throughout; every entry point
// validates it. H = 1 - alpha/2 in (1/2, 1) is the long-memory regime.

// b_alpha = integral over (0,inf) of (x (1+x))^{-(1+alpha)/2} dx, evaluated
// from its definition: split at 1, substitute each improper piece onto a
// smooth integrand over [0,1], fixed Gauss-Legendre panels. Agrees with the
// closed Beta form to ~1e-11 across (0.05, 0.95).
double b_alpha(double alpha);

// kappa_alpha^2 = 2 b_alpha / ((1-alpha)(2-alpha)): the partial-sum variance
// constant, Var(sum of n covariance-b_alpha k^{-alpha} terms) ~ kappa^2 n^{2-alpha}.
double kappa_alpha2(double alpha);
double kappa_alpha(double alpha);

// Almost sure growth exponent of the centered renewal overshoot:
// gamma = 2 - 2 alpha below alpha = 1/2, and 1 from there on.
double gamma_rate(double alpha);

double hurst(double alpha);

// Rank-m normalization d_{n,m} = n^{1 - m alpha / 2} (slowly varying part
// taken constant). Valid in the LRD regime m alpha < 1.
double scaling_d(std::size_t n, int m, double alpha);

}  // namespace lrd
