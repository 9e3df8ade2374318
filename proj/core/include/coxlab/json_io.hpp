#pragma once

#include <string_view>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "coxlab/andreev/polytope.hpp"
#include "coxlab/coxeter_matrix.hpp"
#include "coxlab/linalg.hpp"
#include "coxlab/lorentz/gram.hpp"
#include "coxlab/render/tiling.hpp"
#include "coxlab/vinberg/group.hpp"

namespace coxlab::json_io {

/// Keys keep insertion order so dumps are stable and readable.
using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors throw ParseError with line and column.
Json parse(std::string_view text);

/// A label as a number, with infinity written "inf".
Json label_to_json(int m);
int label_from_json(const Json& j);

/// {nodes, edges:[{a,b,m}]} with a, b node names.
Json diagram_to_json(const CoxeterDiagram& d);
CoxeterDiagram diagram_from_json(const Json& j);

/// Diagram plus components:[{nodes, type, rank}] and
/// flags:{spherical, affine, lanner, quasi_lanner, moussong_hyperbolic}.
/// quasi_lanner holds for Lanner diagrams too. moussong_hyperbolic is null
/// above rank 24.
Json diagram_report(const CoxeterDiagram& d, double tol = kDefaultTolerance);

/// Row-major nested arrays of numbers. Reading rejects anything that is not a
/// non-empty square array of numbers (strings such as "inf" included).
Json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_json(const Json& j);

/// [{length, word, matrix}], words as generator indices.
Json group_to_json(const vinberg::GroupEnumeration& g);

/// {d, normals, form}, form spelled out as "diag(+1,...,+1,-1)".
Json realization_to_json(const lorentz::LorentzRealization& r);

/// {vertices, faces, labels:[{face_a, face_b, theta_num, theta_den}]}; faces
/// refer to vertices by id.
Json polytope_to_json(const andreev::LabeledPolytope3& p);
andreev::LabeledPolytope3 polytope_from_json(const Json& j);

/// {depth, phi, tiles:[{word, length, chart:[[x,y]x3]}]}.
Json tiling_to_json(const render::Tiling2D& t);

}  // namespace coxlab::json_io
