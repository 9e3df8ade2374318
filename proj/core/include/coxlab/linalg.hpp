#pragma once

#include <string>

#include <Eigen/Dense>

namespace coxlab {

inline constexpr double kDefaultTolerance = 1e-9;

/// Indices of inertia (p, q, r) of a real symmetric matrix.
struct SignatureTriple {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  double tolerance = kDefaultTolerance;

  int dimension() const noexcept { return positive + negative + zero; }
  bool same_counts(const SignatureTriple& o) const noexcept {
    return positive == o.positive && negative == o.negative && zero == o.zero;
  }
};

std::string to_string(const SignatureTriple& s);

/// Eigenvalue sign counts; |lambda| < tol * spectral radius counts as zero.
/// Throws InvalidInput if the matrix is not symmetric within tol (relative to
/// its largest entry).
SignatureTriple signature(const Eigen::MatrixXd& sym, double tol = kDefaultTolerance);

/// Number of singular values above tol * largest singular value.
int numeric_rank(const Eigen::MatrixXd& m, double tol = kDefaultTolerance);

double determinant(const Eigen::MatrixXd& m);

}  // namespace coxlab
