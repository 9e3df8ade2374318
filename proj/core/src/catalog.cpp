#include "coxlab/catalog.hpp"

#include <map>
#include <mutex>

#include "coxlab/error.hpp"

namespace coxlab::catalog {
namespace {

struct EmbeddedCatalog {
  const char* name;
  const char* text;
};

constexpr EmbeddedCatalog kEmbedded[] = {
#include "catalog_data.inc"
};

class Builder {
 public:
  explicit Builder(int n) : m_(default_node_names(n)) {}
  // 1-based node numbers, as in the usual pictures.
  Builder& edge(int a, int b, int label = 3) {
    m_.set(a - 1, b - 1, label);
    return *this;
  }
  Builder& path(int first, int last) {
    for (int i = first; i < last; ++i) edge(i, i + 1);
    return *this;
  }
  CoxeterDiagram done() { return CoxeterDiagram(std::move(m_)); }

 private:
  CoxeterMatrix m_;
};

[[noreturn]] void bad(const TypeTag& t) {
  throw PreconditionError("no standard diagram for type " + to_string(t));
}

}  // namespace

CoxeterDiagram instantiate(const TypeTag& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      if (n < 1) bad(t);
      return Builder(n).path(1, n).done();
    case Family::B:
      if (n < 2) bad(t);
      return Builder(n).path(1, n).edge(1, 2, 4).done();
    case Family::D:
      if (n < 4) bad(t);
      return Builder(n).path(1, n - 1).edge(n - 2, n).done();
    case Family::E:
      if (n < 6 || n > 8) bad(t);
      return Builder(n).path(1, n - 1).edge(3, n).done();
    case Family::F:
      if (n != 4) bad(t);
      return Builder(4).path(1, 4).edge(2, 3, 4).done();
    case Family::H:
      if (n != 3 && n != 4) bad(t);
      return Builder(n).path(1, n).edge(1, 2, 5).done();
    case Family::I2:
      if (t.label < 5) bad(t);
      return Builder(2).edge(1, 2, t.label).done();
    case Family::AffA:
      if (n < 1) bad(t);
      if (n == 1) return Builder(2).edge(1, 2, kInfinity).done();
      return Builder(n + 1).path(1, n + 1).edge(n + 1, 1).done();
    case Family::AffB:
      if (n < 3) bad(t);
      return Builder(n + 1).path(1, n).edge(n - 1, n, 4).edge(2, n + 1).done();
    case Family::AffC:
      if (n < 2) bad(t);
      return Builder(n + 1).path(1, n + 1).edge(1, 2, 4).edge(n, n + 1, 4).done();
    case Family::AffD:
      if (n < 4) bad(t);
      return Builder(n + 1).path(1, n - 1).edge(2, n).edge(n - 2, n + 1).done();
    case Family::AffE:
      if (n == 6) return Builder(7).path(1, 5).edge(3, 6).edge(6, 7).done();
      if (n == 7) return Builder(8).path(1, 7).edge(4, 8).done();
      if (n == 8) return Builder(9).path(1, 8).edge(3, 9).done();
      bad(t);
    case Family::AffF:
      if (n != 4) bad(t);
      return Builder(5).path(1, 5).edge(3, 4, 4).done();
    case Family::AffG:
      if (n != 2) bad(t);
      return Builder(3).path(1, 3).edge(1, 2, 6).done();
    case Family::Large:
      bad(t);
  }
  bad(t);
}

std::vector<TypeTag> irreducible_types(int max_nodes, int max_dihedral_label) {
  std::vector<TypeTag> out;
  for (int n = 1; n <= max_nodes; ++n) out.push_back({Family::A, n, 0});
  for (int n = 2; n <= max_nodes; ++n) out.push_back({Family::B, n, 0});
  for (int n = 4; n <= max_nodes; ++n) out.push_back({Family::D, n, 0});
  for (int n = 6; n <= std::min(8, max_nodes); ++n) out.push_back({Family::E, n, 0});
  if (max_nodes >= 4) out.push_back({Family::F, 4, 0});
  for (int n = 3; n <= std::min(4, max_nodes); ++n) out.push_back({Family::H, n, 0});
  if (max_nodes >= 2) {
    for (int p = 5; p <= max_dihedral_label; ++p) out.push_back({Family::I2, 2, p});
  }
  for (int n = 1; n + 1 <= max_nodes; ++n) out.push_back({Family::AffA, n, 0});
  for (int n = 3; n + 1 <= max_nodes; ++n) out.push_back({Family::AffB, n, 0});
  for (int n = 2; n + 1 <= max_nodes; ++n) out.push_back({Family::AffC, n, 0});
  for (int n = 4; n + 1 <= max_nodes; ++n) out.push_back({Family::AffD, n, 0});
  for (int n = 6; n <= 8 && n + 1 <= max_nodes; ++n) out.push_back({Family::AffE, n, 0});
  if (max_nodes >= 5) out.push_back({Family::AffF, 4, 0});
  if (max_nodes >= 3) out.push_back({Family::AffG, 2, 0});
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& c : kEmbedded) out.emplace_back(c.name);
  return out;
}

const std::string& catalog_text(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> texts = [] {
    std::map<std::string, std::string, std::less<>> m;
    for (const auto& c : kEmbedded) m.emplace(c.name, c.text);
    return m;
  }();
  const auto it = texts.find(name);
  if (it == texts.end()) throw InvalidInput("unknown catalog '" + std::string(name) + "'");
  return it->second;
}

const std::vector<NamedDiagram>& fixtures(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, std::vector<NamedDiagram>, std::less<>> parsed;
  const std::scoped_lock lock(mu);
  auto it = parsed.find(name);
  if (it == parsed.end()) {
    it = parsed.emplace(std::string(name), parse_catalog(catalog_text(name))).first;
  }
  return it->second;
}

CoxeterDiagram fixture(std::string_view name) {
  const auto slash = name.find('/');
  if (slash != std::string_view::npos) {
    for (const auto& entry : fixtures(name.substr(0, slash))) {
      if (entry.name == name.substr(slash + 1)) return entry.diagram;
    }
  } else {
    for (const auto& cat : catalog_names()) {
      for (const auto& entry : fixtures(cat)) {
        if (entry.name == name) return entry.diagram;
      }
    }
  }
  throw InvalidInput("unknown fixture '" + std::string(name) + "'");
}

}  // namespace coxlab::catalog
