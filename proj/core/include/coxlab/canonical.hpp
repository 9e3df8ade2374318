#pragma once

#include <vector>

#include "coxlab/coxeter_matrix.hpp"

namespace coxlab {

/// Canonical labeling of a Coxeter matrix up to relabeling of generators.
///
/// Components are canonized separately by colour refinement followed by
/// individualization over the first non-singleton cell (exhaustive over the
/// remaining choices), then sorted. Two matrices are isomorphic exactly when
/// their codes are equal.
struct CanonicalForm {
  /// Node i of the canonical matrix is node order[i] of the input.
  std::vector<int> order;
  /// Rank followed by the upper triangle of the canonical matrix, row by row.
  std::vector<int> code;
};

CanonicalForm canonical_form(const CoxeterMatrix& m);

/// The input relabeled by canonical_form(m).order, nodes renamed s1..sn.
CoxeterMatrix canonical_matrix(const CoxeterMatrix& m);

bool isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b);

}  // namespace coxlab
