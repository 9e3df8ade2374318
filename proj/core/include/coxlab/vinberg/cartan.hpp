#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "coxlab/coxeter_matrix.hpp"
#include "coxlab/linalg.hpp"
#include "coxlab/vinberg/exact.hpp"

namespace coxlab::vinberg {

/// Real square matrix with a_{s,s} = 2, a_{s,t} <= 0 off the diagonal and
/// a_{s,t} = 0 exactly when a_{t,s} = 0. When every entry is a small-denominator
/// rational the exact matrix is kept alongside.
class CartanMatrix {
 public:
  CartanMatrix() = default;

  /// Throws InvalidInput naming the violated clause. Comparisons use `tol`;
  /// entries within tol of 2 or 0 are snapped to them.
  explicit CartanMatrix(Eigen::MatrixXd entries, std::vector<std::string> nodes = {},
                        double tol = kDefaultTolerance);

  int rank() const noexcept { return static_cast<int>(a_.rows()); }
  const Eigen::MatrixXd& matrix() const noexcept { return a_; }
  double operator()(int s, int t) const { return a_(s, t); }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::optional<RationalMatrix>& exact() const noexcept { return exact_; }

  /// Principal submatrix on the given generators, in that order.
  CartanMatrix restrict(const std::vector<int>& indices) const;

  /// Components of the support graph (s ~ t iff a_{s,t} != 0), sorted by
  /// smallest index.
  std::vector<std::vector<int>> components() const;
  bool irreducible() const { return components().size() == 1; }

 private:
  Eigen::MatrixXd a_;
  std::vector<std::string> nodes_;
  std::optional<RationalMatrix> exact_;
};

struct CartanReport {
  bool valid = false;
  /// Which clause failed when !valid.
  std::string invalid_reason;
  bool coxeter_type = false;
  /// First pair whose product is not 4 cos^2(pi/m) for an integer m >= 2.
  std::optional<std::pair<int, int>> offending_pair;
  std::optional<CoxeterMatrix> compatible;
};

/// Validates the Cartan axioms and, when they hold, decides Coxeter type: every
/// pair with product below 4 must have pi / arccos(sqrt(product) / 2) within
/// `tol` of an integer >= 2; products >= 4 give m = infinity.
CartanReport cartan_analyze(const Eigen::MatrixXd& a, double tol = kDefaultTolerance,
                            std::vector<std::string> nodes = {});

/// The unique Coxeter matrix compatible with a Coxeter-type Cartan matrix.
/// Throws PreconditionError naming the offending pair otherwise.
CoxeterMatrix compatible_coxeter(const CartanMatrix& a, double tol = kDefaultTolerance);

/// Pairs are keyed (s, t) with s < t for products; an asymmetry entry for
/// (s, t) is the ratio a_{s,t} / a_{t,s} (a key (t, s) means the inverse).
using PairMap = std::map<std::pair<int, int>, double>;

/// Cartan matrix realizing a Coxeter matrix: finite pairs get product
/// 4 cos^2(pi/m), infinite pairs the requested product (default 4), split by
/// the asymmetry ratio (default 1). Throws PreconditionError for a product
/// below 4 on an infinite pair, or for keys that are not pairs of M.
CartanMatrix cartan_from_coxeter(const CoxeterMatrix& m, const PairMap& infinity_products = {},
                                 const PairMap& asymmetry = {});

enum class PerronType { Positive, Zero, Negative };

std::string to_string(PerronType t);

struct PerronReport {
  /// 2 - rho(2 Id - A).
  double lambda = 0.0;
  /// Perron vector of 2 Id - A, entries > 0, unit Euclidean norm.
  Eigen::VectorXd eigenvector;
  PerronType type = PerronType::Positive;
};

/// Distinguished eigenvalue of an irreducible Cartan matrix. The Perron root
/// of 2 Id - A comes from a full eigen-decomposition and is cross-checked by
/// power iteration; a disagreement throws ConsistencyError. Reducible input
/// throws PreconditionError. |lambda| < tol counts as Zero.
PerronReport perron_type(const CartanMatrix& a, double tol = kDefaultTolerance);

}  // namespace coxlab::vinberg
