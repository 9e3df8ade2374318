#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxlab/moussong.hpp"
#include "coxlab/vinberg/cartan.hpp"

namespace coxlab::vinberg {

enum class AnosovFailure {
  /// The Coxeter group is not word-hyperbolic.
  NotHyperbolic,
  /// An infinite pair with product in [4, 4 + tol]: the strict inequality fails.
  BoundaryProduct,
};

struct AnosovReason {
  AnosovFailure code = AnosovFailure::NotHyperbolic;
  int s = -1;
  int t = -1;
  double product = 0.0;
  std::string message;
};

struct AnosovReport {
  bool anosov = false;
  MoussongResult hyperbolicity;
  std::vector<AnosovReason> reasons;
};

/// P_1-Anosov test for the reflection representation: the compatible Coxeter
/// group is word-hyperbolic and every infinite pair has a_{s,t} a_{t,s} > 4 + tol.
/// Throws PreconditionError if the matrix is not of Coxeter type.
AnosovReport is_anosov(const CartanMatrix& a, double tol = kDefaultTolerance);

struct ConvexCocompactReport {
  bool cc = false;
  /// No two orthogonal non-spherical subsets.
  bool condition_i = false;
  /// Every irreducible affine subset of rank >= 3 is of type ~A_k.
  bool condition_ii = false;
  /// Evaluated only when (i) and (ii) hold.
  std::optional<bool> no_zero_type_submatrix;
  std::optional<bool> nonsingular_on_affine_a;
  /// A connected subset whose Cartan submatrix is of zero type or, on a ~A_k
  /// subset, singular.
  std::vector<int> zero_type_witness;
  std::vector<std::string> reasons;
};

/// Convex cocompactness in S(V) of the reflection group of an infinite
/// irreducible Coxeter group. When (i) and (ii) hold, both equivalent criteria
/// are evaluated; if they disagree ConsistencyError is thrown. Throws
/// PreconditionError when W is finite, reducible, or the matrix is not of
/// Coxeter type.
ConvexCocompactReport convex_cocompact_status(const CartanMatrix& a,
                                              double tol = kDefaultTolerance);

}  // namespace coxlab::vinberg
