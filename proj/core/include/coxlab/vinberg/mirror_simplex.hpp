#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "coxlab/vinberg/cartan.hpp"

namespace coxlab::vinberg {

/// Mirror simplex of a Cartan matrix on V = R^S: alpha_s = e*_s, v_s = column
/// s of A, sigma_s = Id - alpha_s (x) v_s, acting on column vectors. The
/// simplex itself is the negative quadrant {alpha_s <= 0 for all s}.
struct MirrorSimplex {
  CartanMatrix cartan;
  std::vector<Eigen::RowVectorXd> alphas;
  std::vector<Eigen::VectorXd> vs;
  std::vector<Eigen::MatrixXd> reflections;
  /// Present when the Cartan matrix is rational.
  std::optional<std::vector<RationalMatrix>> exact_reflections;

  int rank() const noexcept { return cartan.rank(); }
  /// Projective dimension #S - 1.
  int dimension() const noexcept { return cartan.rank() - 1; }
};

MirrorSimplex tits_simplex(const CartanMatrix& a);

/// Link at the vertex opposite facet `deleted`: the mirror simplex of the
/// principal submatrix on S \ {deleted}. Throws PreconditionError for a bad id
/// or a rank-1 simplex.
MirrorSimplex vertex_link(const MirrorSimplex& s, int deleted);

}  // namespace coxlab::vinberg
