#include <cmath>
#include <vector>

#include "doctest.h"
#include "lrd/errors.hpp"
#include "lrd/processes.hpp"
#include "lrd/rng.hpp"
#include "lrd/subordination.hpp"

namespace {

lrd::sample_path unit_path(std::size_t n) {
  return lrd::sample_path(std::vector<double>(n, 1.0), 1.0);
}

lrd::sample_path random_path(std::size_t n, std::uint64_t seed) {
  const lrd::subordinator qexp = lrd::make_quantile_exponential(1.0);
  const lrd::normal_stream s(seed, 0);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = qexp.g(s.normal(std::int64_t(i)));
  return lrd::sample_path(std::move(y), qexp.mu);
}

}  // namespace

TEST_CASE("step function and counting basics") {
  const lrd::sample_path p(std::vector<double>{2.0, 1.0, 3.0}, 1.5);
  CHECK(p.S(0.0) == 0.0);
  CHECK(p.S(0.99) == 0.0);
  CHECK(p.S(1.0) == 2.0);
  CHECK(p.S(2.5) == 3.0);
  CHECK(p.S(3.0) == 6.0);
  CHECK(p.N(0.0) == 1.0);
  CHECK(p.N(1.9) == 1.0);
  CHECK(p.N(2.0) == 2.0);  // S(1) = 2 is not strictly above 2
  CHECK(p.N(2.9) == 2.0);
  CHECK(p.N(5.9) == 3.0);
  CHECK_THROWS_AS(p.N(6.0), lrd::horizon_error);
}

TEST_CASE("horizon error carries the query") {
  const lrd::sample_path p(std::vector<double>{1.0, 1.0}, 1.0);
  try {
    p.N(5.0);
    FAIL("expected horizon_error");
  } catch (const lrd::horizon_error& e) {
    CHECK(e.level() == 5.0);
    CHECK(e.horizon_sum() == 2.0);
  }
}

TEST_CASE("renewal objects need nonnegative increments") {
  const lrd::sample_path p(std::vector<double>{1.0, -0.5, 2.0}, 1.0);
  CHECK(p.S(2.0) == 0.5);  // plain partial sums still work
  CHECK_THROWS_AS(p.N(0.5), lrd::data_error);
  CHECK_THROWS_AS(p.Z(1.5), lrd::data_error);
}

TEST_CASE("unit increments have analytic functionals") {
  const lrd::sample_path p = unit_path(16);
  // Q(t) = 2 floor(t) + 1 - 2t integrates to zero over each whole interval.
  for (std::size_t k = 1; k <= 8; ++k)
    CHECK(p.Z(double(k)) == doctest::Approx(0.0).epsilon(1e-13));
  // Below t = 1: Z(t) = t - t^2.
  CHECK(p.Z(0.3) == doctest::Approx(0.21).epsilon(1e-13));
  CHECK(p.Z(0.5) == doctest::Approx(0.25).epsilon(1e-13));
  // Partial interval past an integer: int_2^2.25 (5 - 2s) ds = 0.1875.
  CHECK(p.Z(2.25) == doctest::Approx(0.1875).epsilon(1e-13));
  CHECK(p.Q(2.25) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("the pathwise identity holds exactly") {
  const lrd::sample_path p = random_path(400, 12);
  const double mu = p.mu();
  for (double t :
       {0.3, 0.7, 1.5, 2.5, 17.25, 33.7, 100.01, 250.6, 379.9}) {
    const double z = p.Z(t);
    const double s = p.S(t) - mu * t;
    const double q = p.Q(t);
    const double rhs = 0.5 * s * s + p.A(t) - 0.5 * q * q;
    CHECK(std::abs(z - rhs) <= 1e-10 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("batch Z equals the exact integrator at integers") {
  const lrd::sample_path p = random_path(300, 77);
  for (std::size_t t : {1u, 2u, 3u, 10u, 57u, 120u, 144u}) {
    const double direct = p.Z(double(t));
    const double batch = p.Z_integer(t);
    CHECK(batch == doctest::Approx(direct).epsilon(1e-11));
  }
}

TEST_CASE("grids match pointwise queries") {
  const lrd::sample_path p = random_path(600, 5);
  const std::size_t T = 250;
  const std::vector<double> ng = p.N_grid(T);
  const std::vector<double> zg = p.Z_grid(T);
  REQUIRE(ng.size() == T);
  REQUIRE(zg.size() == T);
  for (std::size_t t = 1; t <= T; t += 13) {
    CHECK(ng[t - 1] == p.N(p.mu() * double(t)));
    CHECK(zg[t - 1] == doctest::Approx(p.Z_integer(t)).epsilon(1e-12));
  }
}

TEST_CASE("scaled functionals") {
  const lrd::sample_path p = random_path(512, 9);
  const std::size_t n = 128;
  const double alpha = 0.4;
  const double s = 0.75;
  const double want_r =
      std::pow(double(n), alpha / 2.0 - 1.0) * p.Q(double(n) * s);
  CHECK(p.R_star(s, n, alpha) == doctest::Approx(want_r).epsilon(1e-13));
  const double t = 0.9;
  const double want_v =
      p.Z(double(n) * t) / (p.mu() * std::pow(double(n), 2.0 - alpha));
  CHECK(p.V(t, n, alpha) == doctest::Approx(want_v).epsilon(1e-13));
}

TEST_CASE("A is signed past the time diagonal") {
  // With unit increments N(mu t) = floor(t) + 1 > t, so the excursion window
  // [N(mu t), t] is reversed and A carries a sign.
  const lrd::sample_path p = unit_path(8);
  const double t = 2.25;
  const double z = p.Z(t);
  const double s = p.S(t) - t;
  const double q = p.Q(t);
  const double a = p.A(t);
  CHECK(z == doctest::Approx(0.5 * s * s + a - 0.5 * q * q).epsilon(1e-12));
  CHECK(a != 0.0);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(lrd::sample_path(std::vector<double>{1.0}, 0.0),
                  lrd::parameter_error);
  CHECK_THROWS_AS(lrd::sample_path(std::vector<double>{}, 1.0),
                  lrd::parameter_error);
  const lrd::sample_path p = unit_path(4);
  CHECK_THROWS_AS(p.Z(-0.5), lrd::parameter_error);
  CHECK_THROWS_AS(p.S(4.5), lrd::parameter_error);
}
