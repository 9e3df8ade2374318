#pragma once

#include <string>
#include <vector>

#include "coxlab/coxeter_matrix.hpp"
#include "coxlab/linalg.hpp"

namespace coxlab {

enum class LannerStatus { Lanner, QuasiLannerNotLanner, Neither };

std::string to_string(LannerStatus s);

struct LannerReport {
  LannerStatus status = LannerStatus::Neither;
  double determinant = 0.0;
  /// Every proper standard subgroup is spherical.
  bool proper_spherical = false;
  /// Every proper standard subgroup is spherical or irreducible affine.
  bool proper_spherical_or_affine = false;
};

/// Lanner: det(cosine matrix) < -tol and every proper standard subgroup is
/// spherical. Quasi-Lanner (not Lanner): det < -tol and every proper standard
/// subgroup is spherical or irreducible affine, without being Lanner.
///
/// A determinant with |det| < tol on a diagram whose proper subgroups pass the
/// quasi-Lanner test must come from an affine component; anything else throws
/// ConsistencyError. Rank <= 64.
LannerReport lanner_report(const CoxeterDiagram& d, double tol = kDefaultTolerance);
LannerStatus lanner_status(const CoxeterDiagram& d, double tol = kDefaultTolerance);

enum class FamilyMode {
  Lanner,
  /// Quasi-Lanner diagrams that are not Lanner (the finite-volume, non-compact
  /// simplices).
  QuasiLanner,
};

std::string to_string(FamilyMode m);

struct EnumerationOptions {
  /// Worker threads for the final extension step; 0 picks hardware concurrency.
  unsigned threads = 0;
  double tol = kDefaultTolerance;
};

/// All diagrams of the given rank (4..10) with the given status, one per
/// isomorphism class, in canonical form (nodes s1..sn) and sorted by canonical
/// code. The result does not depend on the thread count.
///
/// Diagrams are grown node by node over the labels {2, 3, 4, 5, 6}: each
/// level keeps the admissible diagrams (spherical, or irreducible affine in
/// QuasiLanner mode), and every prefix of a partially labeled new node must
/// stay admissible. Each result is checked against the label-bound lemma
/// (see verify_label_bound) and a violation throws ConsistencyError.
std::vector<CoxeterDiagram> enumerate_lanner_family(int rank, FamilyMode mode,
                                                    const EnumerationOptions& options = {});

/// For a connected diagram of rank >= 4 whose proper subgroups are all
/// spherical or irreducible affine: raising any pair's label to 7 or to
/// infinity must create a connected 3-node subset that is neither spherical
/// nor irreducible affine. Returns false if some pair escapes.
bool verify_label_bound(const CoxeterMatrix& m);

}  // namespace coxlab
