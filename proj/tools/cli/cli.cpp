#include "cli/cli.hpp"

#include <fstream>
#include <functional>
#include <map>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli/input.hpp"
#include "coxlab/andreev/andreev.hpp"
#include "coxlab/catalog.hpp"
#include "coxlab/classify.hpp"
#include "coxlab/dsl.hpp"
#include "coxlab/error.hpp"
#include "coxlab/hitchin.hpp"
#include "coxlab/json_io.hpp"
#include "coxlab/lanner.hpp"
#include "coxlab/moussong.hpp"
#include "coxlab/render/svg.hpp"
#include "coxlab/render/tiling.hpp"
#include "coxlab/vinberg/character.hpp"
#include "coxlab/vinberg/criteria.hpp"
#include "coxlab/vinberg/group.hpp"
#include "coxlab/vinberg/kac_vinberg.hpp"
#include "coxlab/vinberg/mirror_simplex.hpp"

namespace coxlab::cli {
namespace {

using json_io::Json;

struct Options {
  Source src;
  bool json = false;
  bool strict = false;
  double tol = kDefaultTolerance;
  int depth = -1;
  int rank = 4;
  std::string mode;
  std::string svg_out;
  std::string angles;
  int n = 0;
  int dim = 0;
  bool right_angled = false;
  bool finite_volume = false;
  std::string catalog_name;
};

struct Context {
  Options opt;
  std::ostream& out;
};

std::string num(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  return fmt::format("{:.10g}", x);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string label_text(int m) { return m == kInfinity ? "inf" : std::to_string(m); }

std::string node_set(const std::vector<std::string>& names, const std::vector<int>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += names[idx[i]];
  }
  return s + "}";
}

void print_matrix(std::ostream& out, const Eigen::MatrixXd& m, const std::string& indent = "  ") {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << indent;
    for (Eigen::Index k = 0; k < m.cols(); ++k) out << (k ? " " : "") << num(m(i, k));
    out << "\n";
  }
}

void emit(Context& c, const Json& j) { c.out << j.dump(2) << "\n"; }

int verdict(const Context& c, bool ok) { return c.opt.strict && !ok ? kFalseVerdict : kOk; }

Json signature_json(const SignatureTriple& s) {
  return {{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

Json optional_bool(const std::optional<bool>& b) {
  if (b) return *b;
  return nullptr;
}

// --- diagrams --------------------------------------------------------------

int cmd_classify(Context& c) {
  const CoxeterDiagram d = load_diagram(c.opt.src);
  if (c.opt.json) {
    emit(c, json_io::diagram_report(d, c.opt.tol));
    return kOk;
  }
  const Classification cl = classify(d, true, c.opt.tol);
  c.out << "diagram: " << render_dsl(d) << "\n";
  for (const auto& comp : cl.components) {
    c.out << "component " << node_set(d.nodes(), comp.nodes) << ": " << to_string(comp.type)
          << " (" << to_string(comp.type.kind()) << ")\n";
  }
  c.out << "spherical: " << yes_no(cl.is_spherical) << "\n";
  c.out << "affine: " << yes_no(cl.is_affine) << "\n";
  return kOk;
}

int cmd_lanner(Context& c) {
  const CoxeterDiagram d = load_diagram(c.opt.src);
  const LannerReport r = lanner_report(d, c.opt.tol);
  if (c.opt.json) {
    emit(c, {{"status", to_string(r.status)},
             {"determinant", r.determinant},
             {"proper_spherical", r.proper_spherical},
             {"proper_spherical_or_affine", r.proper_spherical_or_affine}});
  } else {
    c.out << "status: " << to_string(r.status) << "\n";
    c.out << "determinant: " << num(r.determinant) << "\n";
    c.out << "proper subgroups spherical: " << yes_no(r.proper_spherical) << "\n";
    c.out << "proper subgroups spherical or affine: " << yes_no(r.proper_spherical_or_affine)
          << "\n";
  }
  return verdict(c, r.status != LannerStatus::Neither);
}

int cmd_enumerate(Context& c) {
  FamilyMode mode;
  if (c.opt.mode == "lanner" || c.opt.mode.empty()) {
    mode = FamilyMode::Lanner;
  } else if (c.opt.mode == "quasi-lanner" || c.opt.mode == "quasi") {
    mode = FamilyMode::QuasiLanner;
  } else {
    throw InvalidInput("--mode must be lanner or quasi-lanner");
  }
  EnumerationOptions eo;
  eo.tol = c.opt.tol;
  const auto found = enumerate_lanner_family(c.opt.rank, mode, eo);
  if (c.opt.json) {
    Json list = Json::array();
    for (const auto& d : found) list.push_back(json_io::diagram_report(d, c.opt.tol));
    emit(c, {{"mode", to_string(mode)},
             {"rank", c.opt.rank},
             {"count", found.size()},
             {"diagrams", std::move(list)}});
  } else {
    c.out << "mode: " << to_string(mode) << "\n";
    c.out << "rank: " << c.opt.rank << "\n";
    c.out << "count: " << found.size() << "\n";
    for (const auto& d : found) c.out << render_dsl(d) << "\n";
  }
  return kOk;
}

int cmd_moussong(Context& c) {
  const CoxeterDiagram d = load_diagram(c.opt.src);
  const MoussongResult r = moussong_hyperbolic(d);
  if (c.opt.json) {
    Json j;
    j["hyperbolic"] = r.hyperbolic;
    j["witness"] = r.witness == MoussongWitness::None           ? "none"
                   : r.witness == MoussongWitness::AffineSubset ? "affine_subset"
                                                                : "orthogonal_pair";
    Json first = Json::array();
    for (int i : r.first) first.push_back(d.nodes()[i]);
    Json second = Json::array();
    for (int i : r.second) second.push_back(d.nodes()[i]);
    j["first"] = std::move(first);
    j["second"] = std::move(second);
    j["message"] = r.hyperbolic ? "" : r.describe(d.matrix());
    emit(c, j);
  } else {
    c.out << "hyperbolic: " << yes_no(r.hyperbolic) << "\n";
    if (!r.hyperbolic) c.out << "witness: " << r.describe(d.matrix()) << "\n";
  }
  return verdict(c, r.hyperbolic);
}

int cmd_fixtures(Context& c) {
  std::vector<std::string> names =
      c.opt.catalog_name.empty() ? catalog::catalog_names()
                                 : std::vector<std::string>{c.opt.catalog_name};
  Json j = Json::object();
  for (const auto& cat : names) {
    Json entries = Json::array();
    for (const auto& e : catalog::fixtures(cat)) {
      if (c.opt.json) {
        Json item = json_io::diagram_to_json(e.diagram);
        item["name"] = e.name;
        entries.push_back(std::move(item));
      } else {
        c.out << cat << "/" << e.name << ": " << render_dsl(e.diagram) << "\n";
      }
    }
    j[cat] = std::move(entries);
  }
  if (c.opt.json) emit(c, j);
  return kOk;
}

// --- Cartan matrices ---------------------------------------------------------

Json perron_json(const vinberg::PerronReport& p) {
  Json v = Json::array();
  for (Eigen::Index i = 0; i < p.eigenvector.size(); ++i) v.push_back(p.eigenvector[i]);
  return {{"type", vinberg::to_string(p.type)}, {"lambda", p.lambda}, {"eigenvector", v}};
}

int cmd_cartan(Context& c) {
  const vinberg::CartanMatrix a = load_cartan(c.opt.src, c.opt.tol);
  const vinberg::CartanReport r = vinberg::cartan_analyze(a.matrix(), c.opt.tol, a.nodes());
  std::optional<vinberg::PerronReport> perron;
  if (r.valid && a.irreducible()) perron = vinberg::perron_type(a, c.opt.tol);
  if (c.opt.json) {
    Json j;
    j["matrix"] = json_io::matrix_to_json(a.matrix());
    j["valid"] = r.valid;
    j["coxeter_type"] = r.coxeter_type;
    if (r.offending_pair) {
      j["offending_pair"] = {a.nodes()[r.offending_pair->first],
                             a.nodes()[r.offending_pair->second]};
    } else {
      j["offending_pair"] = nullptr;
    }
    if (r.compatible) {
      j["compatible"] = json_io::diagram_to_json(CoxeterDiagram(*r.compatible));
    } else {
      j["compatible"] = nullptr;
    }
    j["irreducible"] = a.irreducible();
    j["perron"] = perron ? perron_json(*perron) : Json(nullptr);
    emit(c, j);
  } else {
    c.out << "matrix:\n";
    print_matrix(c.out, a.matrix());
    c.out << "coxeter type: " << yes_no(r.coxeter_type) << "\n";
    if (r.offending_pair) {
      c.out << "offending pair: (" << a.nodes()[r.offending_pair->first] << ", "
            << a.nodes()[r.offending_pair->second] << ")\n";
    }
    if (r.compatible) c.out << "compatible diagram: " << render_dsl(CoxeterDiagram(*r.compatible)) << "\n";
    c.out << "irreducible: " << yes_no(a.irreducible()) << "\n";
    if (perron) {
      c.out << "perron type: " << vinberg::to_string(perron->type) << " (lambda "
            << num(perron->lambda) << ")\n";
    }
  }
  return verdict(c, r.coxeter_type);
}

int cmd_tits(Context& c) {
  const vinberg::MirrorSimplex s = vinberg::tits_simplex(load_cartan(c.opt.src, c.opt.tol));
  double involution_error = 0.0;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(s.rank(), s.rank());
  for (const auto& r : s.reflections) {
    involution_error = std::max(involution_error, (r * r - id).cwiseAbs().maxCoeff());
  }
  if (c.opt.json) {
    Json refl = Json::array();
    for (const auto& r : s.reflections) refl.push_back(json_io::matrix_to_json(r));
    emit(c, {{"dimension", s.dimension()},
             {"cartan", json_io::matrix_to_json(s.cartan.matrix())},
             {"exact", s.exact_reflections.has_value()},
             {"reflections", std::move(refl)},
             {"involution_error", involution_error}});
  } else {
    c.out << "simplex dimension: " << s.dimension() << "\n";
    c.out << "exact arithmetic: " << yes_no(s.exact_reflections.has_value()) << "\n";
    for (int i = 0; i < s.rank(); ++i) {
      c.out << "sigma_" << s.cartan.nodes()[i] << ":\n";
      print_matrix(c.out, s.reflections[i]);
    }
    c.out << "max |sigma^2 - Id|: " << num(involution_error) << "\n";
  }
  return kOk;
}

int cmd_enumerate_group(Context& c) {
  const vinberg::MirrorSimplex s = vinberg::tits_simplex(load_cartan(c.opt.src, c.opt.tol));
  const int depth = c.opt.depth < 0 ? 10 : c.opt.depth;
  const vinberg::GroupEnumeration g = vinberg::enumerate_group(s, depth);
  if (c.opt.json) {
    emit(c, {{"depth", depth},
             {"count", g.elements.size()},
             {"closed", g.closed},
             {"exact", g.exact},
             {"growth", g.growth},
             {"elements", json_io::group_to_json(g)}});
  } else {
    c.out << "depth: " << depth << "\n";
    c.out << "elements: " << g.elements.size() << "\n";
    c.out << "closed: " << yes_no(g.closed) << "\n";
    c.out << "exact: " << yes_no(g.exact) << "\n";
    c.out << "growth:";
    for (auto x : g.growth) c.out << " " << x;
    c.out << "\n";
  }
  return kOk;
}

int cmd_anosov(Context& c) {
  const vinberg::CartanMatrix a = load_cartan(c.opt.src, c.opt.tol);
  const vinberg::AnosovReport r = vinberg::is_anosov(a, c.opt.tol);
  if (c.opt.json) {
    Json reasons = Json::array();
    for (const auto& x : r.reasons) reasons.push_back(x.message);
    emit(c, {{"anosov", r.anosov},
             {"word_hyperbolic", r.hyperbolicity.hyperbolic},
             {"reasons", std::move(reasons)}});
  } else {
    c.out << "anosov: " << yes_no(r.anosov) << "\n";
    c.out << "word hyperbolic: " << yes_no(r.hyperbolicity.hyperbolic) << "\n";
    for (const auto& x : r.reasons) c.out << "reason: " << x.message << "\n";
  }
  return verdict(c, r.anosov);
}

int cmd_cc(Context& c) {
  const vinberg::CartanMatrix a = load_cartan(c.opt.src, c.opt.tol);
  const vinberg::ConvexCocompactReport r = vinberg::convex_cocompact_status(a, c.opt.tol);
  if (c.opt.json) {
    Json witness = Json::array();
    for (int i : r.zero_type_witness) witness.push_back(a.nodes()[i]);
    emit(c, {{"convex_cocompact", r.cc},
             {"condition_i", r.condition_i},
             {"condition_ii", r.condition_ii},
             {"no_zero_type_submatrix", optional_bool(r.no_zero_type_submatrix)},
             {"nonsingular_on_affine_a", optional_bool(r.nonsingular_on_affine_a)},
             {"zero_type_witness", std::move(witness)},
             {"reasons", r.reasons}});
  } else {
    c.out << "convex cocompact: " << yes_no(r.cc) << "\n";
    c.out << "condition (i): " << yes_no(r.condition_i) << "\n";
    c.out << "condition (ii): " << yes_no(r.condition_ii) << "\n";
    for (const auto& x : r.reasons) c.out << "reason: " << x << "\n";
  }
  return verdict(c, r.cc);
}

int cmd_perfection(Context& c) {
  const vinberg::MirrorSimplex s = vinberg::tits_simplex(load_cartan(c.opt.src, c.opt.tol));
  const vinberg::CharacterTag ch = vinberg::polytope_character(s, c.opt.tol);
  const vinberg::PerfectionReport r = vinberg::perfection_status(s, c.opt.tol);
  if (c.opt.json) {
    Json links = Json::array();
    for (auto x : r.link_characters) links.push_back(vinberg::to_string(x));
    emit(c, {{"character", vinberg::to_string(ch.character)},
             {"cartan_rank", ch.cartan_rank},
             {"level", vinberg::to_string(r.level)},
             {"link_characters", std::move(links)},
             {"conclusions", r.conclusions}});
  } else {
    c.out << "character: " << vinberg::to_string(ch.character) << "\n";
    c.out << "level: " << vinberg::to_string(r.level) << "\n";
    c.out << "vertex links:";
    for (auto x : r.link_characters) c.out << " " << vinberg::to_string(x);
    c.out << "\n";
    for (const auto& x : r.conclusions) c.out << "conclusion: " << x << "\n";
  }
  return verdict(c, r.level != vinberg::PerfectionLevel::None);
}

int cmd_kac_vinberg(Context& c) {
  const vinberg::CartanMatrix a = load_cartan(c.opt.src, c.opt.tol);
  const vinberg::KacVinbergReport r = vinberg::kac_vinberg_check(a, c.opt.tol);
  if (c.opt.json) {
    Json j;
    j["integral"] = r.integral;
    j["negative_det"] = r.negative_det;
    j["cyclic_asymmetric"] = r.cyclic_asymmetric;
    j["in_SL3Z"] = r.in_SL3Z;
    j["kac_vinberg"] = r.kac_vinberg;
    j["invariant_space_dim"] = r.invariant_space_dim;
    if (r.invariant_form) {
      j["invariant_form"] = {{"form", json_io::matrix_to_json(r.invariant_form->form)},
                             {"signature", signature_json(r.invariant_form->signature)}};
    } else {
      j["invariant_form"] = nullptr;
    }
    j["hyperbolic_form"] = r.hyperbolic_form;
    emit(c, j);
  } else {
    c.out << "integral: " << yes_no(r.integral) << "\n";
    c.out << "negative determinant: " << yes_no(r.negative_det) << "\n";
    c.out << "cyclic products differ: " << yes_no(r.cyclic_asymmetric) << "\n";
    c.out << "reflections in SL(3,Z) up to sign: " << yes_no(r.in_SL3Z) << "\n";
    c.out << "kac-vinberg: " << yes_no(r.kac_vinberg) << "\n";
    c.out << "invariant forms: dimension " << r.invariant_space_dim << "\n";
    if (r.invariant_form) {
      c.out << "invariant form, signature " << to_string(r.invariant_form->signature) << ":\n";
      print_matrix(c.out, r.invariant_form->form);
    }
  }
  return verdict(c, r.kac_vinberg);
}

// --- Lorentzian realizations -------------------------------------------------

int cmd_gram(Context& c) {
  const lorentz::GramMatrix g = load_gram(c.opt.src, c.opt.tol);
  const lorentz::GramReport r = lorentz::validate_gram(g, c.opt.tol);
  if (c.opt.json) {
    emit(c, {{"matrix", json_io::matrix_to_json(g.matrix())},
             {"irreducible", r.irreducible},
             {"signature", signature_json(r.signature)},
             {"vinberg_ok", r.vinberg_ok},
             {"d", r.d},
             {"problems", r.problems}});
  } else {
    c.out << "signature: " << to_string(r.signature) << "\n";
    c.out << "irreducible: " << yes_no(r.irreducible) << "\n";
    c.out << "hyperbolic polytope gram matrix: " << yes_no(r.vinberg_ok) << "\n";
    if (r.vinberg_ok) c.out << "d: " << r.d << "\n";
    for (const auto& p : r.problems) c.out << "problem: " << p << "\n";
  }
  return verdict(c, r.vinberg_ok);
}

int cmd_realize(Context& c) {
  const lorentz::GramMatrix g = load_gram(c.opt.src, c.opt.tol);
  const lorentz::LorentzRealization r = lorentz::realize_normals(g, c.opt.tol);
  const double rec = r.reconstruction_error(g);
  const double form = lorentz::form_preservation_error(r, lorentz::reflections_lorentz(r));
  if (c.opt.json) {
    Json j = json_io::realization_to_json(r);
    j["reconstruction_error"] = rec;
    j["form_preservation_error"] = form;
    emit(c, j);
  } else {
    c.out << "d: " << r.d << "\n";
    c.out << "normals (rows):\n";
    Eigen::MatrixXd rows(static_cast<Eigen::Index>(r.normals.size()), r.d + 1);
    for (std::size_t i = 0; i < r.normals.size(); ++i) {
      rows.row(static_cast<Eigen::Index>(i)) = r.normals[i].transpose();
    }
    print_matrix(c.out, rows);
    c.out << "reconstruction error: " << num(rec) << "\n";
    c.out << "form preservation error: " << num(form) << "\n";
  }
  return kOk;
}

int cmd_dh_cc(Context& c) {
  Source diagram_src = c.opt.src;
  diagram_src.matrix.clear();
  const CoxeterDiagram d = load_diagram(diagram_src);
  const lorentz::GramMatrix g =
      c.opt.src.matrix.empty() ? lorentz::gram_from_coxeter(d.matrix())
                               : load_gram(Source{.matrix = c.opt.src.matrix}, c.opt.tol);
  const lorentz::DhReport r = lorentz::dh_convex_cocompact(d.matrix(), g, c.opt.tol);
  if (c.opt.json) {
    Json pairs = Json::array();
    for (auto [s, t] : r.asymptotic_pairs) pairs.push_back({d.nodes()[s], d.nodes()[t]});
    emit(c, {{"convex_cocompact", r.convex_cocompact},
             {"word_hyperbolic", r.hyperbolicity.hyperbolic},
             {"asymptotic_pairs", std::move(pairs)},
             {"reasons", r.reasons}});
  } else {
    c.out << "convex cocompact: " << yes_no(r.convex_cocompact) << "\n";
    c.out << "word hyperbolic: " << yes_no(r.hyperbolicity.hyperbolic) << "\n";
    for (const auto& x : r.reasons) c.out << "reason: " << x << "\n";
  }
  return verdict(c, r.convex_cocompact);
}

int cmd_polygon(Context& c) {
  if (c.opt.angles.empty()) throw InvalidInput("polygon needs --angles");
  const auto angles = parse_angles(c.opt.angles);
  const bool ok = lorentz::polygon_exists(angles);
  if (c.opt.json) {
    emit(c, {{"sides", angles.size()}, {"exists", ok}});
  } else {
    c.out << "sides: " << angles.size() << "\n";
    c.out << "compact hyperbolic polygon exists: " << yes_no(ok) << "\n";
  }
  return verdict(c, ok);
}

int cmd_bounds(Context& c) {
  const bool compact = !c.opt.finite_volume;
  const lorentz::DimensionVerdict v = lorentz::dimension_bounds(c.opt.dim, compact, c.opt.right_angled);
  if (c.opt.json) {
    emit(c, {{"d", c.opt.dim},
             {"compact", compact},
             {"right_angled", c.opt.right_angled},
             {"feasibility", lorentz::to_string(v.feasibility)},
             {"bound", v.bound},
             {"notes", v.notes}});
  } else {
    c.out << "feasibility: " << lorentz::to_string(v.feasibility) << "\n";
    c.out << "bound: d <= " << v.bound << "\n";
    for (const auto& x : v.notes) c.out << "note: " << x << "\n";
  }
  return verdict(c, v.feasibility != lorentz::Feasibility::Impossible);
}

// --- polytopes, polygons, rendering ------------------------------------------

int cmd_andreev(Context& c) {
  andreev::AndreevMode mode;
  if (c.opt.mode == "compact" || c.opt.mode.empty()) {
    mode = andreev::AndreevMode::Compact;
  } else if (c.opt.mode == "finite-volume") {
    mode = andreev::AndreevMode::FiniteVolume;
  } else {
    throw InvalidInput("--mode must be compact or finite-volume");
  }
  const andreev::LabeledPolytope3 p = load_polytope(c.opt.src);
  const andreev::AndreevVerdict v = andreev::andreev_check(p, mode);
  if (c.opt.json) {
    Json witnesses = Json::array();
    for (const auto& w : v.witnesses) {
      Json x{{"kind", w.kind}, {"message", w.message}};
      if (w.vertex) x["vertex"] = p.polytope().vertices()[*w.vertex];
      if (w.circuit) {
        x["circuit"] = {{"facets", w.circuit->facets},
                        {"class", andreev::to_string(w.circuit->cls)},
                        {"angle_sum_num", w.circuit->angle_sum.num},
                        {"angle_sum_den", w.circuit->angle_sum.den}};
      }
      if (!w.components.empty()) x["components"] = w.components;
      witnesses.push_back(std::move(x));
    }
    emit(c, {{"realizable", v.realizable},
             {"vertices_ok", v.vertices_ok},
             {"circuits_ok", v.circuits_ok},
             {"graph_connected", v.graph_connected},
             {"exception", andreev::to_string(v.exception)},
             {"witnesses", std::move(witnesses)}});
  } else {
    c.out << "realizable: " << yes_no(v.realizable) << "\n";
    c.out << "vertices: " << (v.vertices_ok ? "ok" : "fail") << "\n";
    c.out << "prismatic circuits: " << (v.circuits_ok ? "ok" : "fail") << "\n";
    c.out << "W_P connected: " << yes_no(v.graph_connected) << "\n";
    if (v.exception != andreev::AndreevException::None) {
      c.out << "exception: " << andreev::to_string(v.exception) << "\n";
    }
    for (const auto& w : v.witnesses) c.out << "witness: " << w.message << "\n";
  }
  return verdict(c, v.realizable);
}

int cmd_hitchin(Context& c) {
  if (c.opt.angles.empty()) throw InvalidInput("hitchin-dim needs --angles");
  const auto orders = parse_orders(c.opt.angles);
  const std::int64_t d = hitchin_dimension(c.opt.n, orders);
  if (c.opt.json) {
    emit(c, {{"n", c.opt.n}, {"orders", orders}, {"dimension", d}});
  } else {
    c.out << d << "\n";
  }
  return kOk;
}

int cmd_render(Context& c) {
  const vinberg::MirrorSimplex s = vinberg::tits_simplex(load_cartan(c.opt.src, c.opt.tol));
  const int depth = c.opt.depth < 0 ? 6 : c.opt.depth;
  const render::Tiling2D t = render::tile_orbit(s, depth);
  const std::string svg = render::emit_svg(t);
  if (!c.opt.svg_out.empty()) {
    std::ofstream f(c.opt.svg_out, std::ios::binary);
    if (!f) throw InvalidInput("cannot write '" + c.opt.svg_out + "'");
    f << svg;
  }
  if (c.opt.json) {
    emit(c, json_io::tiling_to_json(t));
  } else if (c.opt.svg_out.empty()) {
    c.out << svg;
  } else {
    c.out << "tiles: " << t.tiles.size() << "\n";
    c.out << "wrote: " << c.opt.svg_out << "\n";
  }
  return kOk;
}

using Handler = std::function<int(Context&)>;

void add_input(CLI::App* sub, Options& o, bool with_matrix) {
  sub->add_option("--dsl", o.src.dsl, "Coxeter diagram in the diagram language");
  sub->add_option("--file", o.src.file, "Input file (DSL text or JSON)");
  sub->add_option("--fixture", o.src.fixture, "Embedded fixture, e.g. table3_compact_tetrahedra/cycle_4333");
  if (with_matrix) {
    sub->add_option("--matrix", o.src.matrix, "Matrix as a JSON array of rows");
  }
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "Print JSON");
  sub->add_flag("--strict", o.strict, "Exit 1 on a false or refused verdict");
  sub->add_option("--tol", o.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter groups, reflection representations and hyperbolic polytopes", "coxlab"};
  app.require_subcommand(1);
  Options o;
  std::map<std::string, Handler> handlers;

  auto sub = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, o);
    handlers[name] = std::move(h);
    return s;
  };

  add_input(sub("classify", "Spherical / affine / large type of each component", cmd_classify), o,
            false);
  add_input(sub("lanner", "Lanner and quasi-Lanner status", cmd_lanner), o, false);
  {
    CLI::App* s = sub("enumerate", "Enumerate Lanner or quasi-Lanner diagrams of a rank",
                      cmd_enumerate);
    s->add_option("--mode", o.mode, "lanner or quasi-lanner");
    s->add_option("--rank", o.rank, "Rank (4..10)");
  }
  add_input(sub("moussong", "Word-hyperbolicity of the Coxeter group", cmd_moussong), o, false);
  {
    CLI::App* s = sub("fixtures", "List the embedded diagram catalogs", cmd_fixtures);
    s->add_option("--catalog", o.catalog_name, "Only this catalog");
  }
  add_input(sub("cartan", "Validate a Cartan matrix; Coxeter type and Perron type", cmd_cartan),
            o, true);
  add_input(sub("tits", "Reflections of the Tits simplex", cmd_tits), o, true);
  {
    CLI::App* s = sub("enumerate-group", "Breadth-first enumeration of the reflection group",
                      cmd_enumerate_group);
    add_input(s, o, true);
    s->add_option("--depth", o.depth, "Maximal word length (default 10)");
  }
  for (const char* name : {"anosov", "cc", "perfection", "kac-vinberg", "render"}) {
    static const std::map<std::string, std::pair<std::string, Handler>> table{
        {"anosov", {"P_1-Anosov test", cmd_anosov}},
        {"cc", {"Convex cocompactness in S(V)", cmd_cc}},
        {"perfection", {"Character and perfection of the Tits simplex", cmd_perfection}},
        {"kac-vinberg", {"Kac-Vinberg conditions and invariant forms", cmd_kac_vinberg}},
        {"render", {"SVG tiling of a rank-3 Tits simplex orbit", cmd_render}},
    };
    const auto& [help, h] = table.at(name);
    CLI::App* s = sub(name, help, h);
    add_input(s, o, true);
    s->add_option("--inf-product", o.src.inf_product,
                  "Product a_st a_ts on infinite pairs of a diagram input (default 4)");
    if (std::string(name) == "render") {
      s->add_option("--depth", o.depth, "Maximal word length (default 6)");
      s->add_option("--svg-out", o.svg_out, "Write the SVG document here");
    }
  }
  add_input(sub("gram", "Validate a Gram matrix", cmd_gram), o, true);
  add_input(sub("realize", "Unit normals in Minkowski space for a Gram matrix", cmd_realize), o,
            true);
  add_input(sub("dh-cc", "Convex cocompactness of a hyperbolic reflection group", cmd_dh_cc), o,
            true);
  sub("polygon", "Existence of a compact hyperbolic polygon with given angles", cmd_polygon)
      ->add_option("--angles", o.angles, "Comma list: m for pi/m, p/q for p pi/q");
  {
    CLI::App* s = sub("bounds", "Known dimension bounds for hyperbolic Coxeter polytopes",
                      cmd_bounds);
    s->add_option("--dim", o.dim, "Dimension d")->required();
    s->add_flag("--finite-volume", o.finite_volume, "Finite volume instead of compact");
    s->add_flag("--right-angled", o.right_angled, "Right-angled polytopes only");
  }
  {
    CLI::App* s = sub("andreev", "Andreev's conditions for a labeled 3-polytope", cmd_andreev);
    s->add_option("--file", o.src.file, "Polytope JSON");
    s->add_option("--fixture", o.src.fixture,
                  "Bundled polytope: cube, dodecahedron, right_triangular_prism, ...");
    s->add_option("--mode", o.mode, "compact or finite-volume");
  }
  {
    CLI::App* s = sub("hitchin-dim", "Dimension of the Hitchin component of a polygon group",
                      cmd_hitchin);
    s->add_option("--n", o.n, "n for PGL(n, R)")->required();
    s->add_option("--angles", o.angles, "Comma list of orders m (angles pi/m)")->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Context ctx{o, out};
  try {
    return handlers.at(chosen->get_name())(ctx);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    if (o.json) {
      out << Json{{"refused", e.what()}}.dump(2) << "\n";
    } else {
      out << "refused: " << e.what() << "\n";
    }
    return o.strict ? kFalseVerdict : kOk;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace coxlab::cli
