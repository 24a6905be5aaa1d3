#pragma once

#include <functional>
#include <string>

namespace lrd {

// A pointwise map G applied to the normalized Gaussian sequence, together
// with the distribution of G(X), X ~ N(0,1). `positive` marks maps whose
// output is nonnegative, the precondition for renewal-type functionals.
struct subordinator {
  std::function<double(double)> g;
  std::function<double(double)> g_inv;   // inverse of g on its range
  std::function<double(double)> cdf;     // F(y) = P(G(X) <= y)
  std::function<double(double)> quantile;
  std::function<double(double)> density;
  double mu = 0.0;                       // E G(X)
  double second_moment = 0.0;            // E G(X)^2
  bool positive = false;
  bool increasing = false;               // g strictly increasing on R
  std::string description;

  // J_q in closed form where the expansion is known (identity, square, exp,
  // lognormal); empty otherwise. hermite_coefficient never consults this:
  // quadrature stays an independent route, and the closed forms are what
  // its tests compare against. Consumers wanting the definitional constant
  // (the experiments) check here first.
  std::function<double(int)> j_closed;
};

subordinator make_identity();
// G(x) = x^2 - 1: centered square, Hermite rank 2. Not increasing; g_inv is
// the nonnegative branch.
subordinator make_square();
subordinator make_exponential();
// G(x) = -log(sf(x)) / lambda: pushes N(0,1) exactly onto Exp(lambda).
subordinator make_quantile_exponential(double lambda);
// G(x) = exp(m + s x).
subordinator make_lognormal(double m, double s);

// Catalog lookup by name: identity | square | exp | qexp | lognormal.
// qexp takes lambda; lognormal takes (m, s) through the two parameters.
subordinator make_subordinator(const std::string& name, double p1 = 1.0,
                               double p2 = 0.5);

// J_q = E[ G(X) H_q(X) ]: Hermite coefficient against the unnormalized
// polynomial, adaptive Gauss-Hermite to `tol`.
double hermite_coefficient(const subordinator& sub, int q, double tol = 1e-8);

// Smallest q >= 1 with |J_q| > 1e-10 sqrt(E G^2); 0 when none exists below
// qmax (constant maps).
int hermite_rank(const subordinator& sub, int qmax = 10);

// c_q(y) = E[ 1{G(X) <= y} H_q(X) ], q >= 1, for increasing G: the integral
// of H_q phi over (-inf, G^{-1}(y)], mapped onto [0,1) by
// u = a - s/(1-s) and integrated with doubled Gauss-Legendre panels.
double indicator_coefficient(const subordinator& sub, int q, double y);

// Scale of the rank-m empirical CDF limit at quantile level t:
// sqrt(2 / ((2 - m alpha)(1 - m alpha))) * |c_m(F^{-1}(t))|.
double limit_scale_bk(const subordinator& sub, int m, double alpha, double t);

}  // namespace lrd
