#include <cmath>

#include "doctest.h"
#include "lrd/constants.hpp"
#include "lrd/errors.hpp"

namespace {

// Independent route: the defining integral evaluates in closed form as
// B((1-alpha)/2, alpha), computed here through lgamma.
double b_alpha_beta(double a) {
  return std::exp(std::lgamma((1.0 - a) / 2.0) + std::lgamma(a) -
                  std::lgamma((1.0 + a) / 2.0));
}

}  // namespace

TEST_CASE("b_alpha against the Beta identity") {
  for (double a = 0.05; a < 0.96; a += 0.05) {
    CHECK(lrd::b_alpha(a) == doctest::Approx(b_alpha_beta(a)).epsilon(1e-10));
  }
}

TEST_CASE("frozen spot values") {
  CHECK(lrd::b_alpha(0.4) == doctest::Approx(5.112091244457).epsilon(1e-10));
  CHECK(lrd::b_alpha(0.5) == doctest::Approx(5.244115109).epsilon(1e-8));
  CHECK(lrd::kappa_alpha2(0.4) == doctest::Approx(10.65019).epsilon(1e-6));
  CHECK(lrd::kappa_alpha(0.5) == doctest::Approx(3.739560).epsilon(1e-6));
}

TEST_CASE("kappa from b") {
  for (double a : {0.2, 0.4, 0.5, 0.6, 0.8}) {
    const double want = 2.0 * lrd::b_alpha(a) / ((1.0 - a) * (2.0 - a));
    CHECK(lrd::kappa_alpha2(a) == doctest::Approx(want).epsilon(1e-14));
    CHECK(lrd::kappa_alpha(a) ==
          doctest::Approx(std::sqrt(want)).epsilon(1e-14));
  }
}

TEST_CASE("rate exponents") {
  CHECK(lrd::gamma_rate(0.2) == doctest::Approx(1.6));
  CHECK(lrd::gamma_rate(0.4) == doctest::Approx(1.2));
  CHECK(lrd::gamma_rate(0.5) == doctest::Approx(1.0));
  CHECK(lrd::gamma_rate(0.8) == doctest::Approx(1.0));
  CHECK(lrd::hurst(0.4) == doctest::Approx(0.8));
  CHECK(lrd::hurst(0.5) == doctest::Approx(0.75));
}

TEST_CASE("scaling d_{n,m}") {
  CHECK(lrd::scaling_d(4096, 1, 0.5) ==
        doctest::Approx(std::pow(4096.0, 0.75)).epsilon(1e-14));
  CHECK(lrd::scaling_d(1000, 2, 0.4) ==
        doctest::Approx(std::pow(1000.0, 0.6)).epsilon(1e-14));
  CHECK_THROWS_AS(lrd::scaling_d(100, 3, 0.4), lrd::parameter_error);
  CHECK_THROWS_AS(lrd::scaling_d(100, 0, 0.4), lrd::parameter_error);
}

TEST_CASE("alpha domain") {
  CHECK_THROWS_AS(lrd::b_alpha(0.0), lrd::parameter_error);
  CHECK_THROWS_AS(lrd::b_alpha(1.0), lrd::parameter_error);
  CHECK_THROWS_AS(lrd::kappa_alpha2(-0.3), lrd::parameter_error);
}
