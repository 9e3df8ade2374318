#pragma once

#include <random>

#include "coxlab/coxeter_matrix.hpp"

namespace testing_support {

/// Connected diagram on `rank` nodes with labels drawn from `labels`; pairs are
/// redrawn until the diagram is connected.
inline coxlab::CoxeterMatrix random_connected(std::mt19937& rng, int rank,
                                              const std::vector<int>& labels,
                                              double edge_probability = 0.5) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  while (true) {
    coxlab::CoxeterMatrix m(coxlab::default_node_names(rank));
    for (int s = 0; s < rank; ++s) {
      for (int t = s + 1; t < rank; ++t) {
        if (coin(rng) < edge_probability) m.set(s, t, labels[pick(rng)]);
      }
    }
    if (coxlab::is_connected(m, coxlab::full_mask(rank))) return m;
  }
}

}  // namespace testing_support
