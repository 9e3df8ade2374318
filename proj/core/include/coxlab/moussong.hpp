#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxlab/coxeter_matrix.hpp"

namespace coxlab {

enum class MoussongWitness { None, AffineSubset, OrthogonalPair };

struct MoussongResult {
  bool hyperbolic = true;
  MoussongWitness witness = MoussongWitness::None;
  /// Node indices. For AffineSubset only `first` is used.
  std::vector<int> first;
  std::vector<int> second;

  /// Human-readable description of the witness using node names.
  std::string describe(const CoxeterMatrix& m) const;
};

/// Word-hyperbolicity test: no connected affine subdiagram on three or more
/// nodes and no two orthogonal connected non-spherical subdiagrams. Affine
/// witnesses are searched first. Rank <= 24.
MoussongResult moussong_hyperbolic(const CoxeterDiagram& d);

/// Nonempty connected subsets, ordered by size and then by bit pattern.
std::vector<NodeMask> connected_subsets(const CoxeterMatrix& m);

/// First pair of orthogonal non-spherical subsets, in the order above, as
/// minimal connected non-spherical subsets.
std::optional<std::pair<NodeMask, NodeMask>> orthogonal_nonspherical_pair(const CoxeterMatrix& m);

}  // namespace coxlab
