#pragma once

namespace lrd {

// Standard normal density, distribution, survival and their logs. The log
// tails switch to an asymptotic expansion past |x| = 25, where erfc has no
// usable precision left; relative error of the switch region is below 1e-11.
double norm_pdf(double x);
double norm_cdf(double x);
double norm_sf(double x);
double norm_logcdf(double x);
double norm_logsf(double x);

// Inverse distribution function, p in (0,1). Safeguarded Newton on the log
// CDF; accurate into both tails.
double norm_quantile(double p);

// x with norm_logsf(x) = L, L < 0. Used to invert tail-parameterized maps
// without forming e^L when it would underflow.
double norm_logsf_inverse(double L);

// Chi-square with one degree of freedom.
double chi2_1_cdf(double x);

}  // namespace lrd
