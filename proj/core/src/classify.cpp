#include "coxlab/classify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>

#include "coxlab/error.hpp"

namespace coxlab {
namespace {

TypeTag large(int n) { return {Family::Large, n, 0}; }

// Catalog matcher over a connected labeled graph on n nodes; `label(i, j)`
// yields m_{i,j}. Affine families use the index n - 1.
template <class Label>
TypeTag recognize_impl(int n, const Label& label) {
  if (n == 1) return {Family::A, 1, 0};

  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  bool has_inf = false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int m = label(i, j);
      if (m >= 3) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
        has_inf = has_inf || m == kInfinity;
      }
    }
  }

  if (n == 2) {
    const int m = label(0, 1);
    if (m == kInfinity) return {Family::AffA, 1, 0};
    if (m == 3) return {Family::A, 2, 0};
    if (m == 4) return {Family::B, 2, 0};
    return {Family::I2, 2, m};
  }
  if (has_inf) return large(n);

  if (edges == n) {
    for (int i = 0; i < n; ++i) {
      if (adj[i].size() != 2) return large(n);
      for (int j : adj[i]) {
        if (label(i, j) != 3) return large(n);
      }
    }
    return {Family::AffA, n - 1, 0};
  }
  if (edges != n - 1) return large(n);

  // A tree from here on.
  std::size_t max_degree = 0;
  std::vector<int> branch;
  for (int i = 0; i < n; ++i) {
    max_degree = std::max(max_degree, adj[i].size());
    if (adj[i].size() == 3) branch.push_back(i);
  }
  auto all_simple = [&] {
    for (int i = 0; i < n; ++i) {
      for (int j : adj[i]) {
        if (label(i, j) != 3) return false;
      }
    }
    return true;
  };

  if (max_degree > 4) return large(n);
  if (max_degree == 4) {
    return (n == 5 && all_simple()) ? TypeTag{Family::AffD, 4, 0} : large(n);
  }

  // Walks from `from` through `start` away from `from` until a leaf; returns
  // the visited nodes and the labels along the way (first label on from-start).
  auto walk = [&](int from, int start, std::vector<int>& nodes, std::vector<int>& labels) {
    int prev = from;
    int cur = start;
    labels.push_back(label(from, start));
    nodes.push_back(cur);
    while (adj[cur].size() == 2) {
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      labels.push_back(label(cur, next));
      nodes.push_back(next);
      prev = cur;
      cur = next;
    }
  };

  if (branch.empty()) {
    int end = 0;
    while (adj[end].size() != 1) ++end;
    std::vector<int> nodes{end};
    std::vector<int> labels;
    walk(end, adj[end][0], nodes, labels);
    std::vector<int> big;
    for (int p = 0; p < static_cast<int>(labels.size()); ++p) {
      if (labels[p] > 3) big.push_back(p);
    }
    const int last = n - 2;
    if (big.empty()) return {Family::A, n, 0};
    if (big.size() == 1) {
      const int p = big[0];
      const int x = labels[p];
      const bool at_end = p == 0 || p == last;
      if (x == 4) {
        if (at_end) return {Family::B, n, 0};
        if (n == 4 && p == 1) return {Family::F, 4, 0};
        if (n == 5 && (p == 1 || p == 2)) return {Family::AffF, 4, 0};
        return large(n);
      }
      if (x == 5 && at_end && n == 3) return {Family::H, 3, 0};
      if (x == 5 && at_end && n == 4) return {Family::H, 4, 0};
      if (x == 6 && at_end && n == 3) return {Family::AffG, 2, 0};
      return large(n);
    }
    if (big.size() == 2 && labels[big[0]] == 4 && labels[big[1]] == 4 && big[0] == 0 &&
        big[1] == last) {
      return {Family::AffC, n - 1, 0};
    }
    return large(n);
  }

  if (branch.size() == 1) {
    const int c = branch[0];
    struct Arm {
      std::vector<int> nodes;
      std::vector<int> labels;
    };
    std::array<Arm, 3> arms;
    for (int k = 0; k < 3; ++k) walk(c, adj[c][k], arms[k].nodes, arms[k].labels);

    int fours = 0;
    int four_arm = -1;
    for (int k = 0; k < 3; ++k) {
      for (std::size_t p = 0; p < arms[k].labels.size(); ++p) {
        const int x = arms[k].labels[p];
        if (x > 4) return large(n);
        if (x == 4) {
          ++fours;
          four_arm = k;
          if (p + 1 != arms[k].labels.size()) return large(n);
        }
      }
    }
    if (fours == 0) {
      std::array<int, 3> len{};
      for (int k = 0; k < 3; ++k) len[k] = static_cast<int>(arms[k].nodes.size());
      std::sort(len.begin(), len.end());
      if (len[0] == 1 && len[1] == 1) return {Family::D, n, 0};
      if (len[0] == 1 && len[1] == 2 && len[2] >= 2 && len[2] <= 4) return {Family::E, n, 0};
      if (len == std::array<int, 3>{2, 2, 2}) return {Family::AffE, 6, 0};
      if (len == std::array<int, 3>{1, 3, 3}) return {Family::AffE, 7, 0};
      if (len == std::array<int, 3>{1, 2, 5}) return {Family::AffE, 8, 0};
      return large(n);
    }
    if (fours == 1) {
      for (int k = 0; k < 3; ++k) {
        if (k != four_arm && arms[k].nodes.size() != 1) return large(n);
      }
      return {Family::AffB, n - 1, 0};
    }
    return large(n);
  }

  if (branch.size() == 2 && all_simple()) {
    for (int i = 0; i < n; ++i) {
      if (adj[i].size() != 1) continue;
      if (adj[adj[i][0]].size() != 3) return large(n);
    }
    return {Family::AffD, n - 1, 0};
  }
  return large(n);
}

}  // namespace

Kind TypeTag::kind() const noexcept {
  switch (family) {
    case Family::Large: return Kind::Large;
    case Family::AffA: case Family::AffB: case Family::AffC: case Family::AffD:
    case Family::AffE: case Family::AffF: case Family::AffG:
      return Kind::Affine;
    default: return Kind::Spherical;
  }
}

int TypeTag::node_count() const noexcept {
  switch (kind()) {
    case Kind::Affine: return rank + 1;
    default: return family == Family::I2 ? 2 : rank;
  }
}

std::string to_string(const TypeTag& t) {
  static constexpr std::array<const char*, 15> names{
      "A", "B", "D", "E", "F", "H", "I2", "A", "B", "C", "D", "E", "F", "G", "Large"};
  const auto idx = static_cast<std::size_t>(t.family);
  if (t.family == Family::Large) return "Large";
  if (t.family == Family::I2) return "I2(" + std::to_string(t.label) + ")";
  const std::string prefix = t.kind() == Kind::Affine ? "~" : "";
  return prefix + names[idx] + std::to_string(t.rank);
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Spherical: return "spherical";
    case Kind::Affine: return "affine";
    case Kind::Large: return "large";
  }
  return "?";
}

std::optional<TypeTag> parse_type(const std::string& s) {
  if (s == "Large") return TypeTag{Family::Large, 0, 0};
  auto number = [](std::string_view v) -> std::optional<int> {
    int x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size()) return std::nullopt;
    return x;
  };
  std::string_view v = s;
  if (v.starts_with("I2(") && v.ends_with(")")) {
    const auto p = number(v.substr(3, v.size() - 4));
    if (!p) return std::nullopt;
    return TypeTag{Family::I2, 2, *p};
  }
  const bool affine = v.starts_with("~");
  if (affine) v.remove_prefix(1);
  if (v.size() < 2) return std::nullopt;
  const auto r = number(v.substr(1));
  if (!r) return std::nullopt;
  static constexpr std::string_view letters = "ABCDEFGH";
  const auto pos = letters.find(v[0]);
  if (pos == std::string_view::npos) return std::nullopt;
  if (affine) {
    static constexpr std::array<Family, 8> aff{Family::AffA, Family::AffB, Family::AffC,
                                               Family::AffD, Family::AffE, Family::AffF,
                                               Family::AffG, Family::Large};
    if (aff[pos] == Family::Large) return std::nullopt;
    return TypeTag{aff[pos], *r, 0};
  }
  static constexpr std::array<Family, 8> sph{Family::A, Family::B, Family::Large, Family::D,
                                             Family::E, Family::F, Family::Large, Family::H};
  if (sph[pos] == Family::Large) return std::nullopt;
  return TypeTag{sph[pos], *r, 0};
}

TypeTag recognize_irreducible_type(const CoxeterMatrix& m) {
  if (m.rank() == 0 || component_indices(m).size() != 1) {
    throw PreconditionError("recognize_irreducible_type: diagram is not connected");
  }
  return recognize_impl(m.rank(), [&](int i, int j) { return m(i, j); });
}

TypeTag recognize_irreducible_type(const CoxeterDiagram& d) {
  return recognize_irreducible_type(d.matrix());
}

Kind kind_from_signature(const SignatureTriple& s) {
  if (s.negative > 0) return Kind::Large;
  if (s.zero == 0) return Kind::Spherical;
  if (s.zero == 1) return Kind::Affine;
  return Kind::Large;
}

Classification classify(const CoxeterDiagram& d, bool verify, double tol) {
  Classification out;
  out.is_spherical = true;
  out.is_affine = d.rank() > 0;
  for (auto& idx : component_indices(d.matrix())) {
    const CoxeterMatrix sub = d.matrix().restrict(std::span<const int>(idx));
    const TypeTag t = recognize_impl(sub.rank(), [&](int i, int j) { return sub(i, j); });
    if (verify) {
      const Kind numeric = kind_from_signature(signature(cosine_matrix(sub), tol));
      if (numeric != t.kind()) {
        throw ConsistencyError("classify: catalog type " + to_string(t) +
                               " disagrees with cosine-matrix signature (" +
                               to_string(numeric) + ")");
      }
    }
    out.is_spherical = out.is_spherical && t.kind() == Kind::Spherical;
    out.is_affine = out.is_affine && t.kind() == Kind::Affine;
    out.is_large_somewhere = out.is_large_somewhere || t.kind() == Kind::Large;
    out.components.push_back({std::move(idx), t});
  }
  return out;
}

Kind irreducible_kind(const CoxeterMatrix& m, NodeMask connected_subset) {
  const auto idx = mask_indices(connected_subset);
  return recognize_impl(static_cast<int>(idx.size()),
                        [&](int i, int j) { return m(idx[i], idx[j]); })
      .kind();
}

bool is_spherical(const CoxeterMatrix& m, NodeMask subset) {
  for (NodeMask c : component_masks(m, subset)) {
    if (irreducible_kind(m, c) != Kind::Spherical) return false;
  }
  return true;
}

bool is_irreducible_affine(const CoxeterMatrix& m, NodeMask subset) {
  return is_connected(m, subset) && irreducible_kind(m, subset) == Kind::Affine;
}

bool is_affine(const CoxeterMatrix& m, NodeMask subset) {
  if (subset == 0) return false;
  for (NodeMask c : component_masks(m, subset)) {
    if (irreducible_kind(m, c) != Kind::Affine) return false;
  }
  return true;
}

}  // namespace coxlab
