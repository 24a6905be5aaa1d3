#include <cmath>
#include <initializer_list>

#include "doctest.h"
#include "lrd/distributions.hpp"

// Expected values frozen from an established statistics library, with the
// deep log tails cross-checked in extended precision.

TEST_CASE("pdf") {
  CHECK(lrd::norm_pdf(0.0) ==
        doctest::Approx(0.3989422804014327).epsilon(1e-14));
  CHECK(lrd::norm_pdf(1.0) ==
        doctest::Approx(0.24197072451914337).epsilon(1e-14));
  CHECK(lrd::norm_pdf(-2.5) ==
        doctest::Approx(0.017528300493568537).epsilon(1e-14));
}

TEST_CASE("cdf and sf") {
  CHECK(lrd::norm_cdf(-5.0) ==
        doctest::Approx(2.866515718791933e-07).epsilon(1e-13));
  CHECK(lrd::norm_cdf(-1.0) ==
        doctest::Approx(0.15865525393145707).epsilon(1e-14));
  CHECK(lrd::norm_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lrd::norm_cdf(1.3) ==
        doctest::Approx(0.9031995154143897).epsilon(1e-14));
  CHECK(lrd::norm_cdf(5.0) ==
        doctest::Approx(0.9999997133484281).epsilon(1e-14));

  CHECK(lrd::norm_sf(-3.0) ==
        doctest::Approx(0.9986501019683699).epsilon(1e-14));
  CHECK(lrd::norm_sf(0.5) ==
        doctest::Approx(0.3085375387259869).epsilon(1e-14));
  CHECK(lrd::norm_sf(2.0) ==
        doctest::Approx(0.022750131948179195).epsilon(1e-13));
  CHECK(lrd::norm_sf(6.0) ==
        doctest::Approx(9.865876450376946e-10).epsilon(1e-12));
}

TEST_CASE("log tails") {
  CHECK(lrd::norm_logsf(0.0) ==
        doctest::Approx(-0.6931471805599453).epsilon(1e-14));
  CHECK(lrd::norm_logsf(1.0) ==
        doctest::Approx(-1.841021645009264).epsilon(1e-13));
  CHECK(lrd::norm_logsf(5.0) ==
        doctest::Approx(-15.064998393988727).epsilon(1e-13));
  // Past the erfc underflow point the asymptotic branch carries the value.
  CHECK(lrd::norm_logsf(30.0) ==
        doctest::Approx(-454.32124395634327).epsilon(1e-12));
  CHECK(lrd::norm_logsf(40.0) ==
        doctest::Approx(-804.6084420137539).epsilon(1e-12));
  CHECK(lrd::norm_logcdf(2.0) ==
        doctest::Approx(std::log(lrd::norm_cdf(2.0))).epsilon(1e-12));
}

TEST_CASE("quantile") {
  CHECK(lrd::norm_quantile(1e-12) ==
        doctest::Approx(-7.034483825301131).epsilon(1e-12));
  CHECK(lrd::norm_quantile(0.2) ==
        doctest::Approx(-0.8416212335729142).epsilon(1e-13));
  CHECK(std::abs(lrd::norm_quantile(0.5)) < 1e-12);
  CHECK(lrd::norm_quantile(0.975) ==
        doctest::Approx(1.959963984540054).epsilon(1e-13));
}

TEST_CASE("round trips") {
  // cdf saturates to 1.0 past x ~ 8.3, so the plain round trip stops at 5.
  for (double x : {-8.0, -2.0, -0.1, 0.4, 3.0, 5.0}) {
    CHECK(lrd::norm_quantile(lrd::norm_cdf(x)) ==
          doctest::Approx(x).epsilon(1e-9));
    CHECK(lrd::norm_logsf_inverse(lrd::norm_logsf(x)) ==
          doctest::Approx(x).epsilon(1e-10));
  }
  // Deep tail round trips where plain cdf would be exactly 1.
  for (double x : {9.0, 35.0})
    CHECK(lrd::norm_logsf_inverse(lrd::norm_logsf(x)) ==
          doctest::Approx(x).epsilon(1e-10));
}

TEST_CASE("chi square, one degree of freedom") {
  CHECK(lrd::chi2_1_cdf(0.1) ==
        doctest::Approx(0.24817036595415076).epsilon(1e-13));
  CHECK(lrd::chi2_1_cdf(1.0) ==
        doctest::Approx(0.6826894921370859).epsilon(1e-13));
  CHECK(lrd::chi2_1_cdf(3.841458820694124) ==
        doctest::Approx(0.95).epsilon(1e-12));
  CHECK(lrd::chi2_1_cdf(0.0) == 0.0);
}
