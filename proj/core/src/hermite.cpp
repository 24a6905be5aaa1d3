#include "lrd/hermite.hpp"

#include "lrd/errors.hpp"

namespace lrd {

std::vector<double> hermite_values(int q, double x) {
  if (q < 0) throw parameter_error("hermite_values: q must be >= 0");
  std::vector<double> h(static_cast<std::size_t>(q) + 1);
  h[0] = 1.0;
  if (q >= 1) h[1] = x;
  for (int k = 1; k < q; ++k)
    h[static_cast<std::size_t>(k) + 1] =
        x * h[static_cast<std::size_t>(k)] -
        static_cast<double>(k) * h[static_cast<std::size_t>(k) - 1];
  return h;
}

double hermite(int q, double x) { return hermite_values(q, x).back(); }

}  // namespace lrd
