#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "coxlab/coxeter_matrix.hpp"
#include "coxlab/linalg.hpp"
#include "coxlab/moussong.hpp"

namespace coxlab::lorentz {

/// Symmetric matrix with unit diagonal and non-positive off-diagonal entries.
class GramMatrix {
 public:
  GramMatrix() = default;
  /// Throws InvalidInput when the invariants fail beyond tol; entries within
  /// tol of 1 (diagonal) or of the transpose are snapped.
  explicit GramMatrix(Eigen::MatrixXd entries, std::optional<int> dimension_hint = std::nullopt,
                      double tol = kDefaultTolerance);

  int size() const noexcept { return static_cast<int>(g_.rows()); }
  const Eigen::MatrixXd& matrix() const noexcept { return g_; }
  double operator()(int i, int j) const { return g_(i, j); }
  std::optional<int> dimension_hint() const noexcept { return hint_; }

 private:
  Eigen::MatrixXd g_;
  std::optional<int> hint_;
};

/// G = cosine matrix / 2, so m = infinity gives -1.
GramMatrix gram_from_coxeter(const CoxeterMatrix& m);

struct GramReport {
  bool irreducible = false;
  SignatureTriple signature;
  /// Irreducible with signature (d, 1, N - d - 1).
  bool vinberg_ok = false;
  /// The d of the signature when vinberg_ok.
  int d = 0;
  std::vector<std::string> problems;
};

GramReport validate_gram(const GramMatrix& g, double tol = kDefaultTolerance);

/// Unit normals u_i in R^{d,1} with <u_i, u_j> = g_{i,j}, for the form
/// x_1^2 + ... + x_d^2 - x_{d+1}^2.
struct LorentzRealization {
  int d = 0;
  /// Column vectors of length d + 1.
  std::vector<Eigen::VectorXd> normals;

  /// diag(1, ..., 1, -1).
  Eigen::MatrixXd form() const;
  double inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  /// max |<u_i, u_j> - g_{i,j}|.
  double reconstruction_error(const GramMatrix& g) const;
};

/// Factorizes G through its eigen-decomposition. Eigenvalues with |lambda| <
/// tol * spectral radius form the radical and are projected out. Signature
/// (d, 1, r) gives normals in R^{d,1}; signature (d, 0, r) with r >= 1 (a
/// degenerate configuration such as two parallel walls) is realized in R^{d,1}
/// with zero last coordinate. Anything else throws PreconditionError.
LorentzRealization realize_normals(const GramMatrix& g, double tol = kDefaultTolerance);

/// sigma_i = Id - 2 u_i u_i^T J, the reflection x -> x - 2 <x, u_i> u_i.
std::vector<Eigen::MatrixXd> reflections_lorentz(const LorentzRealization& r);

/// max over reflections of ||sigma^T J sigma - J||_inf.
double form_preservation_error(const LorentzRealization& r,
                               const std::vector<Eigen::MatrixXd>& reflections);

struct DhReport {
  bool convex_cocompact = false;
  MoussongResult hyperbolicity;
  /// Pairs with g_{s,t} within tol of -1 (asymptotic facets).
  std::vector<std::pair<int, int>> asymptotic_pairs;
  std::vector<std::string> reasons;
};

/// Convex cocompactness of a hyperbolic reflection group: W word-hyperbolic
/// and no g_{s,t} in (-1 - tol, -1 + tol). Throws PreconditionError when G
/// disagrees with -cos(pi/m) on a finite pair (beyond 1e-9) or sizes differ.
DhReport dh_convex_cocompact(const CoxeterMatrix& m, const GramMatrix& g,
                             double tol = kDefaultTolerance);

}  // namespace coxlab::lorentz
