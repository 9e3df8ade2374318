#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxlab/andreev/polytope.hpp"

namespace coxlab::andreev {

enum class CircuitClass { Spherical, Euclidean, Hyperbolic };

std::string to_string(CircuitClass c);

struct Circuit {
  /// Cyclic facet sequence, rotated to start at its smallest facet and
  /// oriented so the second entry is the smaller neighbour.
  std::vector<int> facets;
  /// edges[i] joins facets[i] and facets[i + 1 mod k].
  std::vector<int> edges;
  bool prismatic = false;
  /// Angle sum as a multiple of pi.
  PiFraction angle_sum;
  CircuitClass cls = CircuitClass::Hyperbolic;
};

/// Every k-circuit (k >= 3) whose closed edges are pairwise disjoint, one per
/// dihedral class, sorted by facet sequence.
std::vector<Circuit> prismatic_circuits(const LabeledPolytope3& p, int k);

/// Class of the circuit of facets around vertex v: angle sum against
/// (deg v - 2) pi, exactly. Throws PreconditionError for a bad vertex.
CircuitClass vertex_class(const LabeledPolytope3& p, int v);

enum class AndreevMode { Compact, FiniteVolume };

enum class AndreevException {
  None,
  /// (i) and (ii) hold and W_P is disconnected because P is a right
  /// triangular prism.
  RightTriangularPrism,
  /// Likewise for a quadrilateral pyramid with Euclidean apex and two
  /// opposite right-angled base edges.
  QuadrilateralPyramid,
};

std::string to_string(AndreevException e);

struct AndreevWitness {
  /// "vertex", "circuit" or "graph".
  std::string kind;
  std::string message;
  std::optional<int> vertex;
  std::optional<Circuit> circuit;
  /// For "graph": the facet components of W_P.
  std::vector<std::vector<int>> components;
};

struct AndreevVerdict {
  bool realizable = false;
  bool vertices_ok = false;
  bool circuits_ok = false;
  bool graph_connected = false;
  AndreevException exception = AndreevException::None;
  std::vector<AndreevWitness> witnesses;
};

/// Facet graph W_P: s ~ t when s and t share no edge, or share an edge with
/// label < pi/2. Returns its connected components, sorted.
std::vector<std::vector<int>> facet_graph_components(const LabeledPolytope3& p);

/// Andreev's three conditions. Tetrahedra throw PreconditionError (route
/// them through the simplex classification instead).
AndreevVerdict andreev_check(const LabeledPolytope3& p, AndreevMode mode);

}  // namespace coxlab::andreev
