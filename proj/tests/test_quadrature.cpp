#include <cmath>

#include "doctest.h"
#include "lrd/errors.hpp"
#include "lrd/quadrature.hpp"

TEST_CASE("gauss-legendre rule shape") {
  const auto& r = lrd::gauss_legendre(16);
  REQUIRE(r.x.size() == 16);
  double wsum = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    wsum += r.w[i];
    CHECK(r.x[i] == doctest::Approx(-r.x[15 - i]).epsilon(1e-13));
    CHECK(r.w[i] > 0.0);
  }
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("gauss-legendre is exact for high-degree polynomials") {
  // n nodes integrate degree 2n-1 exactly: int_0^1 x^13 = 1/14 at n = 7.
  const double got =
      lrd::integrate([](double x) { return std::pow(x, 13); }, 0.0, 1.0, 7);
  CHECK(got == doctest::Approx(1.0 / 14.0).epsilon(1e-14));

  const double panels = lrd::integrate(
      [](double x) { return std::cos(x); }, 0.0, 3.0, 8, 4);
  CHECK(panels == doctest::Approx(std::sin(3.0)).epsilon(1e-13));
}

TEST_CASE("gauss-hermite normal moments") {
  const auto& r = lrd::gauss_hermite(32);
  double w = 0.0, m2 = 0.0, m4 = 0.0, m6 = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    w += r.w[i];
    m2 += r.w[i] * r.x[i] * r.x[i];
    m4 += r.w[i] * std::pow(r.x[i], 4);
    m6 += r.w[i] * std::pow(r.x[i], 6);
  }
  CHECK(w == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(m2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m4 == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(m6 == doctest::Approx(15.0).epsilon(1e-12));
}

TEST_CASE("normal expectation converges on smooth maps") {
  const double got =
      lrd::normal_expectation([](double x) { return std::cos(x); });
  CHECK(got == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));

  const double ex = lrd::normal_expectation(
      [](double x) { return std::exp(x); });
  CHECK(ex == doctest::Approx(std::exp(0.5)).epsilon(1e-9));
}

TEST_CASE("normal expectation reports non-convergence with its estimates") {
  // |x| has a kink at zero; Gauss-Hermite gains digits far too slowly to
  // reach 1e-12 under the node cap.
  const double target = std::sqrt(2.0 / M_PI);
  try {
    lrd::normal_expectation([](double x) { return std::abs(x); }, 1e-12, 64,
                            1024);
    FAIL("expected numerical_error");
  } catch (const lrd::numerical_error& e) {
    CHECK(std::abs(e.last_estimate() - target) < 1e-3);
    CHECK(std::abs(e.previous_estimate() - target) < 1e-3);
    CHECK(e.last_estimate() != e.previous_estimate());
  }
}
