#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxlab/coxeter_matrix.hpp"

namespace coxlab {

/// Reads the diagram language
///
///     nodes <id>+ ; ( edge <id> <id> (<int >= 3> | inf) ; )*
///
/// Identifiers match [A-Za-z0-9_]+, whitespace is free-form and `#` starts a
/// comment running to the end of the line. The final `;` may be omitted.
/// Pairs never mentioned in an edge commute (m = 2). Errors throw ParseError
/// carrying the 1-based line and column of the offending token.
CoxeterDiagram parse_diagram(std::string_view text);

/// Canonical text for a diagram; parse_diagram(render_dsl(d)) == d.
std::string render_dsl(const CoxeterDiagram& d);

struct NamedDiagram {
  std::string name;
  CoxeterDiagram diagram;
};

/// A catalog file is a sequence of entries, each introduced by a line
/// `@diagram <name>` and followed by one diagram in the language above.
std::vector<NamedDiagram> parse_catalog(std::string_view text);

}  // namespace coxlab
