#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxlab/classify.hpp"
#include "coxlab/dsl.hpp"

namespace coxlab::catalog {

/// Standard diagram of a spherical or affine type, built directly from the
/// shape of its family (paths, forks, cycles). Nodes are named s1..sn.
/// Throws PreconditionError for Large or for an index outside the family's range.
CoxeterDiagram instantiate(const TypeTag& type);

/// Every irreducible spherical and affine type whose diagram has at most
/// `max_nodes` nodes. I2(p) is listed for 5 <= p <= max_dihedral_label
/// (I2(3) = A2 and I2(4) = B2 are listed under their own names).
std::vector<TypeTag> irreducible_types(int max_nodes, int max_dihedral_label = 12);

/// Embedded fixture catalogs. Known names: "table1_examples",
/// "table3_compact_tetrahedra", "table4_finite_volume_tetrahedra".
std::vector<std::string> catalog_names();
const std::vector<NamedDiagram>& fixtures(std::string_view catalog);
const std::string& catalog_text(std::string_view catalog);

/// Looks up "<catalog>/<entry>" or a bare entry name across all catalogs.
/// Throws InvalidInput when absent.
CoxeterDiagram fixture(std::string_view name);

}  // namespace coxlab::catalog
