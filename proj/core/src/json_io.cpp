#include "coxlab/json_io.hpp"

#include <map>

#include "coxlab/classify.hpp"
#include "coxlab/error.hpp"
#include "coxlab/lanner.hpp"
#include "coxlab/moussong.hpp"

namespace coxlab::json_io {
namespace {

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("JSON: missing field \"") + key + "\"");
  }
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string("JSON: ") + what + " must be an integer");
  return j.get<int>();
}

std::string as_id(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InvalidInput(std::string("JSON: ") + what + " must be a string or integer id");
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON", line, col);
  }
}

Json label_to_json(int m) {
  if (m == kInfinity) return "inf";
  return m;
}

int label_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfinity;
    throw InvalidInput("JSON: label must be an integer >= 3 or \"inf\"");
  }
  const int m = as_int(j, "label");
  if (m < 3) throw InvalidInput("JSON: label must be an integer >= 3 or \"inf\"");
  return m;
}

Json diagram_to_json(const CoxeterDiagram& d) {
  Json out;
  out["nodes"] = d.nodes();
  Json edges = Json::array();
  for (const Edge& e : d.edges()) {
    edges.push_back({{"a", d.nodes()[e.a]}, {"b", d.nodes()[e.b]}, {"m", label_to_json(e.m)}});
  }
  out["edges"] = std::move(edges);
  return out;
}

CoxeterDiagram diagram_from_json(const Json& j) {
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) throw InvalidInput("JSON: nodes must be an array");
  std::vector<std::string> names;
  for (const auto& n : nodes) names.push_back(as_id(n, "node"));
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], static_cast<int>(i)).second) {
      throw InvalidInput("JSON: repeated node " + names[i]);
    }
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    const Json& list = j.at("edges");
    if (!list.is_array()) throw InvalidInput("JSON: edges must be an array");
    for (const auto& e : list) {
      const std::string a = as_id(field(e, "a"), "edge end");
      const std::string b = as_id(field(e, "b"), "edge end");
      if (!index.contains(a) || !index.contains(b)) {
        throw InvalidInput("JSON: edge refers to an unknown node");
      }
      int ia = index[a];
      int ib = index[b];
      if (ia > ib) std::swap(ia, ib);
      edges.push_back({ia, ib, label_from_json(field(e, "m"))});
    }
  }
  return CoxeterDiagram(std::move(names), edges);
}

Json diagram_report(const CoxeterDiagram& d, double tol) {
  Json out = diagram_to_json(d);
  const Classification c = classify(d, true, tol);
  Json comps = Json::array();
  for (const auto& comp : c.components) {
    Json names = Json::array();
    for (int i : comp.nodes) names.push_back(d.nodes()[i]);
    comps.push_back({{"nodes", std::move(names)},
                     {"type", to_string(comp.type)},
                     {"rank", static_cast<int>(comp.nodes.size())}});
  }
  out["components"] = std::move(comps);
  Json flags;
  flags["spherical"] = c.is_spherical;
  flags["affine"] = c.is_affine;
  if (d.rank() <= 64 && d.rank() > 0) {
    const LannerStatus s = lanner_status(d, tol);
    flags["lanner"] = s == LannerStatus::Lanner;
    flags["quasi_lanner"] = s != LannerStatus::Neither;
  } else {
    flags["lanner"] = false;
    flags["quasi_lanner"] = false;
  }
  if (d.rank() <= 24) {
    flags["moussong_hyperbolic"] = moussong_hyperbolic(d).hyperbolic;
  } else {
    flags["moussong_hyperbolic"] = nullptr;
  }
  out["flags"] = std::move(flags);
  return out;
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    out.push_back(std::move(row));
  }
  return out;
}

Eigen::MatrixXd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("JSON: matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw InvalidInput("JSON: matrix must be square");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      const Json& x = row[static_cast<std::size_t>(k)];
      if (!x.is_number()) {
        throw InvalidInput("JSON: matrix entry (" + std::to_string(i) + ", " + std::to_string(k) +
                           ") is not a number");
      }
      m(i, k) = x.get<double>();
    }
  }
  return m;
}

Json group_to_json(const vinberg::GroupEnumeration& g) {
  Json out = Json::array();
  for (const auto& e : g.elements) {
    out.push_back({{"length", e.length()}, {"word", e.word}, {"matrix", matrix_to_json(e.matrix)}});
  }
  return out;
}

Json realization_to_json(const lorentz::LorentzRealization& r) {
  Json normals = Json::array();
  for (const auto& u : r.normals) normals.push_back(vector_to_json(u));
  std::string form = "diag(";
  for (int i = 0; i < r.d; ++i) form += "+1,";
  form += "-1)";
  Json out;
  out["d"] = r.d;
  out["normals"] = std::move(normals);
  out["form"] = form;
  return out;
}

Json polytope_to_json(const andreev::LabeledPolytope3& lp) {
  const auto& p = lp.polytope();
  Json faces = Json::array();
  for (const auto& f : p.faces()) {
    Json face = Json::array();
    for (int v : f) face.push_back(p.vertices()[v]);
    faces.push_back(std::move(face));
  }
  Json labels = Json::array();
  for (int e = 0; e < p.edge_count(); ++e) {
    const auto& edge = p.edges()[e];
    labels.push_back({{"face_a", edge.face_a},
                      {"face_b", edge.face_b},
                      {"theta_num", lp.theta(e).num},
                      {"theta_den", lp.theta(e).den}});
  }
  Json out;
  out["vertices"] = p.vertices();
  out["faces"] = std::move(faces);
  out["labels"] = std::move(labels);
  return out;
}

andreev::LabeledPolytope3 polytope_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) throw InvalidInput("JSON: vertices must be an array");
  std::vector<std::string> vertices;
  std::map<std::string, int> index;
  for (const auto& v : vs) {
    vertices.push_back(as_id(v, "vertex"));
    if (!index.emplace(vertices.back(), static_cast<int>(vertices.size()) - 1).second) {
      throw InvalidInput("JSON: repeated vertex " + vertices.back());
    }
  }
  const Json& fs = field(j, "faces");
  if (!fs.is_array()) throw InvalidInput("JSON: faces must be an array");
  std::vector<std::vector<int>> faces;
  for (const auto& f : fs) {
    if (!f.is_array()) throw InvalidInput("JSON: each face must be an array of vertex ids");
    std::vector<int> face;
    for (const auto& v : f) {
      const std::string id = as_id(v, "face vertex");
      const auto it = index.find(id);
      if (it == index.end()) throw InvalidInput("JSON: face uses unknown vertex " + id);
      face.push_back(it->second);
    }
    faces.push_back(std::move(face));
  }
  const Json& ls = field(j, "labels");
  if (!ls.is_array()) throw InvalidInput("JSON: labels must be an array");
  std::vector<andreev::FaceLabel> labels;
  for (const auto& l : ls) {
    andreev::FaceLabel label;
    label.face_a = as_int(field(l, "face_a"), "face_a");
    label.face_b = as_int(field(l, "face_b"), "face_b");
    label.theta.num = as_int(field(l, "theta_num"), "theta_num");
    label.theta.den = as_int(field(l, "theta_den"), "theta_den");
    labels.push_back(label);
  }
  return andreev::build_labeled_polytope(std::move(vertices), std::move(faces), labels);
}

Json tiling_to_json(const render::Tiling2D& t) {
  Json tiles = Json::array();
  for (const auto& tile : t.tiles) {
    Json chart = Json::array();
    for (const auto& p : tile.chart) chart.push_back({p.x(), p.y()});
    tiles.push_back({{"word", tile.word}, {"length", tile.length()}, {"chart", std::move(chart)}});
  }
  Json out;
  out["depth"] = t.depth;
  out["phi"] = {t.phi.x(), t.phi.y(), t.phi.z()};
  out["tiles"] = std::move(tiles);
  return out;
}

}  // namespace coxlab::json_io
