#pragma once

#include <vector>

namespace lrd {

// Probabilists' Hermite polynomials: H_0 = 1, H_1 = x,
// H_{q+1}(x) = x H_q(x) - q H_{q-1}(x). E H_p(X) H_q(X) = q! delta_pq.
double hermite(int q, double x);

// H_0(x)..H_q(x) in one recurrence pass.
std::vector<double> hermite_values(int q, double x);

}  // namespace lrd
