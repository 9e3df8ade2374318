#pragma once

#include <optional>

#include <Eigen/Dense>

#include "coxlab/linalg.hpp"
#include "coxlab/vinberg/cartan.hpp"

namespace coxlab::vinberg {

struct InvariantForm {
  /// Symmetric B with sigma_s^T B sigma_s = B for every generator, scaled to
  /// unit max entry and signed so that positive >= negative.
  Eigen::Matrix3d form;
  SignatureTriple signature;
};

struct KacVinbergReport {
  bool integral = false;
  bool negative_det = false;
  /// a12 a23 a31 != a13 a32 a21.
  bool cyclic_asymmetric = false;
  /// Every reflection has integer entries and determinant +-1.
  bool in_SL3Z = false;
  bool kac_vinberg = false;
  /// Dimension of the space of invariant symmetric forms.
  int invariant_space_dim = 0;
  /// A nondegenerate invariant form, if one exists.
  std::optional<InvariantForm> invariant_form;
  /// The invariant form exists and has signature (2,1).
  bool hyperbolic_form = false;
};

/// Checks the three Kac-Vinberg conditions on a 3x3 Cartan matrix and solves
/// the 6-unknown linear system for invariant symmetric forms. Throws
/// PreconditionError on other sizes.
KacVinbergReport kac_vinberg_check(const CartanMatrix& a, double tol = kDefaultTolerance);

}  // namespace coxlab::vinberg
