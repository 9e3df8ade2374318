#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxlab/coxeter_matrix.hpp"
#include "coxlab/linalg.hpp"

namespace coxlab {

/// Irreducible spherical and affine Coxeter types, plus Large for everything
/// else. Affine families carry the usual index: AffX(n) has n + 1 nodes.
enum class Family {
  A, B, D, E, F, H, I2,
  AffA, AffB, AffC, AffD, AffE, AffF, AffG,
  Large,
};

enum class Kind { Spherical, Affine, Large };

struct TypeTag {
  Family family = Family::Large;
  /// Family index: n for X_n and for affine X~_n. For Large, the node count.
  int rank = 0;
  /// Only for I2: the label p.
  int label = 0;

  Kind kind() const noexcept;
  /// Number of generators of a diagram of this type.
  int node_count() const noexcept;

  friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

/// "A4", "I2(7)", "~A2", "~C2", "Large".
std::string to_string(const TypeTag& t);
std::string to_string(Kind k);

/// Parses the output of to_string(TypeTag); nullopt when unrecognized.
std::optional<TypeTag> parse_type(const std::string& s);

/// Exact match of a connected diagram against the catalog of irreducible
/// spherical and affine diagrams. Throws PreconditionError when disconnected.
TypeTag recognize_irreducible_type(const CoxeterMatrix& m);
TypeTag recognize_irreducible_type(const CoxeterDiagram& d);

struct ComponentType {
  std::vector<int> nodes;
  TypeTag type;
};

struct Classification {
  std::vector<ComponentType> components;
  bool is_spherical = false;
  bool is_affine = false;
  bool is_large_somewhere = false;
};

/// Catalog classification of every component. With `verify`, each component's
/// cosine-matrix signature is checked against its catalog type (positive
/// definite, one-dimensional kernel, or a negative direction) and a mismatch
/// throws ConsistencyError.
Classification classify(const CoxeterDiagram& d, bool verify = true,
                        double tol = kDefaultTolerance);

/// Kind a cosine-matrix signature implies for a connected diagram.
Kind kind_from_signature(const SignatureTriple& s);

/// Subset predicates, by catalog. Empty subsets are spherical.
Kind irreducible_kind(const CoxeterMatrix& m, NodeMask connected_subset);
bool is_spherical(const CoxeterMatrix& m, NodeMask subset);
bool is_irreducible_affine(const CoxeterMatrix& m, NodeMask subset);
bool is_affine(const CoxeterMatrix& m, NodeMask subset);

}  // namespace coxlab
