#include "cli/input.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "coxlab/catalog.hpp"
#include "coxlab/dsl.hpp"
#include "coxlab/error.hpp"
#include "coxlab/json_io.hpp"

namespace coxlab::cli {
namespace {

int source_count(const Source& s) {
  return !s.dsl.empty() + !s.file.empty() + !s.fixture.empty() + !s.matrix.empty();
}

void require_one(const Source& s) {
  const int n = source_count(s);
  if (n == 0) throw InvalidInput("no input: give one of --dsl, --file, --fixture, --matrix");
  if (n > 1) throw InvalidInput("give only one of --dsl, --file, --fixture, --matrix");
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (text[p] == '[' || text[p] == '{');
}

bool is_diagram_source(const Source& s) {
  if (!s.dsl.empty() || !s.fixture.empty()) return true;
  if (!s.file.empty()) {
    const std::string text = read_file(s.file);
    if (!looks_like_json(text)) return true;
    const auto j = json_io::parse(text);
    return j.is_object() && j.contains("nodes");
  }
  return false;
}

Eigen::MatrixXd matrix_from_text(const std::string& text) {
  const auto j = json_io::parse(text);
  if (j.is_object() && j.contains("matrix")) return json_io::matrix_from_json(j.at("matrix"));
  return json_io::matrix_from_json(j);
}

long long to_integer(const std::string& tok) {
  long long v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end) throw InvalidInput("not an integer: '" + tok + "'");
  return v;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto a = tok.find_first_not_of(" \t");
    const auto b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw InvalidInput("empty entry in list '" + text + "'");
    out.push_back(tok.substr(a, b - a + 1));
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CoxeterDiagram load_diagram(const Source& src) {
  require_one(src);
  if (!src.dsl.empty()) return parse_diagram(src.dsl);
  if (!src.fixture.empty()) return catalog::fixture(src.fixture);
  if (!src.file.empty()) {
    const std::string text = read_file(src.file);
    if (looks_like_json(text)) return json_io::diagram_from_json(json_io::parse(text));
    return parse_diagram(text);
  }
  throw InvalidInput("this subcommand reads a Coxeter diagram, not a matrix");
}

vinberg::CartanMatrix load_cartan(const Source& src, double tol) {
  require_one(src);
  if (is_diagram_source(src)) {
    const CoxeterDiagram d = load_diagram(src);
    vinberg::PairMap products;
    if (src.inf_product) {
      for (int s = 0; s < d.rank(); ++s) {
        for (int t = s + 1; t < d.rank(); ++t) {
          if (d.matrix()(s, t) == kInfinity) products[{s, t}] = *src.inf_product;
        }
      }
    }
    return vinberg::cartan_from_coxeter(d.matrix(), products);
  }
  const std::string text = src.matrix.empty() ? read_file(src.file) : src.matrix;
  return vinberg::CartanMatrix(matrix_from_text(text), {}, tol);
}

lorentz::GramMatrix load_gram(const Source& src, double tol) {
  require_one(src);
  if (is_diagram_source(src)) return lorentz::gram_from_coxeter(load_diagram(src).matrix());
  const std::string text = src.matrix.empty() ? read_file(src.file) : src.matrix;
  return lorentz::GramMatrix(matrix_from_text(text), std::nullopt, tol);
}

andreev::LabeledPolytope3 load_polytope(const Source& src) {
  if (!src.dsl.empty() || !src.matrix.empty()) {
    throw InvalidInput("andreev reads a polytope from --file or --fixture");
  }
  std::string path = src.file;
  if (!src.fixture.empty()) {
    if (!path.empty()) throw InvalidInput("give only one of --file, --fixture");
    path = std::string(COXLAB_POLYTOPE_DIR) + "/" + src.fixture + ".json";
  }
  if (path.empty()) throw InvalidInput("no input: give --file or --fixture");
  return json_io::polytope_from_json(json_io::parse(read_file(path)));
}

std::vector<lorentz::PiFraction> parse_angles(const std::string& text) {
  std::vector<lorentz::PiFraction> out;
  for (const auto& tok : split_commas(text)) {
    const auto slash = tok.find('/');
    if (slash == std::string::npos) {
      const long long m = to_integer(tok);
      if (m < 1) throw InvalidInput("angle order must be positive: '" + tok + "'");
      out.push_back({1, m});
    } else {
      const long long p = to_integer(tok.substr(0, slash));
      const long long q = to_integer(tok.substr(slash + 1));
      if (q <= 0) throw InvalidInput("angle denominator must be positive: '" + tok + "'");
      out.push_back({p, q});
    }
  }
  return out;
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : split_commas(text)) {
    const long long m = to_integer(tok);
    if (m < 2 || m > 1'000'000) throw InvalidInput("order must be an integer >= 2: '" + tok + "'");
    out.push_back(static_cast<int>(m));
  }
  return out;
}

}  // namespace coxlab::cli
