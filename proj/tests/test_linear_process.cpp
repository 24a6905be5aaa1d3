#include <cmath>
#include <vector>

#include "doctest.h"
#include "lrd/constants.hpp"
#include "lrd/errors.hpp"
#include "lrd/linear_process.hpp"
#include "lrd/rng.hpp"

TEST_CASE("small model weights and autocorrelation") {
  const lrd::linear_model m(0.5, 2);
  REQUIRE(m.psi().size() == 3);
  CHECK(m.psi()[0] == 1.0);
  CHECK(m.psi()[1] == 1.0);
  CHECK(m.psi()[2] == doctest::Approx(std::pow(2.0, -0.75)).epsilon(1e-15));
  const double s2 = 1.0 + 1.0 + std::pow(2.0, -1.5);
  CHECK(m.sigma2() == doctest::Approx(s2).epsilon(1e-14));

  const std::vector<double> rho = m.rho(5);
  REQUIRE(rho.size() == 6);
  CHECK(rho[0] == 1.0);
  // Hand value: (psi0 psi1 + psi1 psi2) / sigma^2 for M = 2.
  CHECK(rho[1] == doctest::Approx(0.6775302247).epsilon(1e-9));
  CHECK(rho[2] == doctest::Approx(std::pow(2.0, -0.75) / s2).epsilon(1e-12));
  CHECK(rho[3] == 0.0);
  CHECK(rho[5] == 0.0);
}

TEST_CASE("partial sum variance matches the quadratic form") {
  const lrd::linear_model m(0.3, 16);
  const std::vector<double> rho = m.rho(16);
  for (std::size_t n : {1u, 2u, 5u, 24u}) {
    double want = double(n);
    for (std::size_t k = 1; k < n; ++k)
      want += 2.0 * double(n - k) * (k <= 16 ? rho[k] : 0.0);
    CHECK(m.exact_partial_sum_variance(n) ==
          doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("variance ratio regression at the deep truncation") {
  // Frozen from the prototype sweep: the truncated model tops out short of
  // the limit constant and recedes once n runs past the memory horizon.
  const lrd::linear_model m(0.4, std::size_t{1} << 20);
  CHECK(m.variance_ratio(std::size_t{1} << 12) ==
        doctest::Approx(0.905846).epsilon(2e-5));
  CHECK(m.variance_ratio(std::size_t{1} << 14) ==
        doctest::Approx(0.909766).epsilon(2e-5));
  CHECK(m.variance_ratio(std::size_t{1} << 16) ==
        doctest::Approx(0.891881).epsilon(2e-5));
  CHECK(m.sigma2() == doctest::Approx(4.095781654840).epsilon(1e-10));
  CHECK(m.covariance_ratio(std::size_t{1} << 10) ==
        doctest::Approx(0.925949).epsilon(2e-5));
}

TEST_CASE("generation routes agree") {
  const std::size_t n = 4096, M = 512;
  const lrd::linear_model m(0.5, M);
  const lrd::normal_stream s(11, 0);
  const std::vector<double> direct =
      m.generate(n, s, 0, lrd::conv_route::direct);
  const std::vector<double> fft = m.generate(n, s, 0, lrd::conv_route::fft);
  REQUIRE(direct.size() == n);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(fft[i] == doctest::Approx(direct[i]).epsilon(1e-11));
}

TEST_CASE("generate and generate_from are the same map") {
  const std::size_t n = 257, M = 40;
  const lrd::linear_model m(0.35, M);
  const lrd::normal_stream s(3, 0);
  const std::vector<double> a = m.generate(n, s);
  const std::vector<double> xi = s.take(-std::int64_t(M), n + M);
  const std::vector<double> b =
      m.generate_from(xi, n, lrd::conv_route::direct);
  for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("windows of one stream are coupled") {
  const lrd::linear_model m(0.5, 8);
  const lrd::normal_stream s(5, 0);
  const std::vector<double> full = m.generate(64, s, 0);
  const std::vector<double> tail = m.generate(32, s, 32);
  for (std::size_t i = 0; i < 32; ++i)
    CHECK(tail[i] == doctest::Approx(full[32 + i]).epsilon(1e-15));
}

TEST_CASE("normalized marginal variance") {
  const std::size_t n = 20000;
  const lrd::linear_model m(0.4, 1024);
  const lrd::normal_stream s(17, 0);
  const std::vector<double> eta = m.generate(n, s);
  double v = 0.0;
  for (double e : eta) v += e * e;
  v /= double(n);

  // eta~^2 - 1 = H_2(eta~), so the mean-square estimator has variance
  // (2/n) sum_{|k|<n} (1 - |k|/n) rho_k^2; a 4 sigma band around 1 stays
  // tight enough to catch a missing 1/sigma normalization (v would be ~4).
  const std::vector<double> rho = m.rho(1024);
  double acc = 1.0;
  for (std::size_t k = 1; k < rho.size(); ++k)
    acc += 2.0 * (1.0 - double(k) / double(n)) * rho[k] * rho[k];
  const double sd = std::sqrt(2.0 * acc / double(n));
  CHECK(std::abs(v - 1.0) < 4.0 * sd);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(lrd::linear_model(1.2, 8), lrd::parameter_error);
  CHECK_THROWS_AS(lrd::linear_model(0.5, 0), lrd::parameter_error);
  const lrd::linear_model m(0.5, 4);
  const std::vector<double> xi(7, 0.0);
  CHECK_THROWS_AS(m.generate_from(xi, 4, lrd::conv_route::direct),
                  lrd::parameter_error);
}
