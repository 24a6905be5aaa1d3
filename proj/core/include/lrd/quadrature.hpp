#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace lrd {

struct quadrature_rule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre on [-1, 1]. Nodes from the Jacobi matrix (Golub-Welsch);
// rules are cached per n.
const quadrature_rule& gauss_legendre(std::size_t n);

// Gauss-Hermite against the standard normal density: E f(X) ~ sum w_i f(x_i),
// sum w_i = 1. Derived from the physicists' rule by x -> sqrt(2) x,
// w -> w / sqrt(pi). Cached per n.
const quadrature_rule& gauss_hermite(std::size_t n);

// Composite Gauss-Legendre of f over [a, b]: `panels` equal panels, n nodes
// each.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::size_t n, std::size_t panels = 1);

// E f(X), X ~ N(0,1), by node doubling from n0 until successive estimates
// agree to tol*(1 + |value|). Throws numerical_error carrying the last two
// estimates when max_nodes is reached without agreement.
double normal_expectation(const std::function<double(double)>& f,
                          double tol = 1e-8, std::size_t n0 = 64,
                          std::size_t max_nodes = 4096);

}  // namespace lrd
