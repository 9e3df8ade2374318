#include "coxlab/hitchin.hpp"

#include <string>
#include <vector>

#include "coxlab/error.hpp"
#include "coxlab/lorentz/polygon.hpp"

namespace coxlab {

std::int64_t hitchin_dimension(int n, std::span<const int> angles) {
  if (n < 2) throw PreconditionError("hitchin_dimension: n must be at least 2");
  std::vector<lorentz::PiFraction> theta;
  for (int m : angles) {
    if (m < 2) throw PreconditionError("hitchin_dimension: angle label " + std::to_string(m) +
                                       " is below 2");
    theta.push_back({1, m});
  }
  if (theta.size() < 3 || !lorentz::polygon_exists(theta)) {
    throw PreconditionError("hitchin_dimension: no compact hyperbolic polygon has these angles");
  }
  const std::int64_t nn = n;
  std::int64_t dim = -(nn * nn - 1);
  for (std::int64_t l = 2; l <= nn; ++l) {
    // floor(l (1 - 1/m)) = floor(l (m - 1) / m), all terms non-negative.
    for (int m : angles) dim += l * (m - 1) / m;
  }
  return dim;
}

}  // namespace coxlab
