#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxlab/andreev/polytope.hpp"
#include "coxlab/coxeter_matrix.hpp"
#include "coxlab/lorentz/gram.hpp"
#include "coxlab/lorentz/polygon.hpp"
#include "coxlab/vinberg/cartan.hpp"

namespace coxlab::cli {

/// Input sources shared by the subcommands. At most one of dsl, file, fixture
/// and matrix may be set.
struct Source {
  std::string dsl;
  std::string file;
  std::string fixture;
  std::string matrix;
  /// Product used on every infinite pair when a Cartan matrix is built from a diagram.
  std::optional<double> inf_product;
};

std::string read_file(const std::string& path);

CoxeterDiagram load_diagram(const Source& src);
/// A diagram source gives the symmetric cosine Cartan matrix.
vinberg::CartanMatrix load_cartan(const Source& src, double tol);
/// A diagram source gives half the cosine matrix.
lorentz::GramMatrix load_gram(const Source& src, double tol);
andreev::LabeledPolytope3 load_polytope(const Source& src);

/// Comma-separated angles: "m" means pi/m, "p/q" means p pi/q.
std::vector<lorentz::PiFraction> parse_angles(const std::string& text);
/// Comma-separated integers >= 2.
std::vector<int> parse_orders(const std::string& text);

}  // namespace coxlab::cli
