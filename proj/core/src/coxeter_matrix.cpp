#include "coxlab/coxeter_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "coxlab/error.hpp"

namespace coxlab {

std::vector<int> mask_indices(NodeMask mask) {
  std::vector<int> out;
  out.reserve(std::popcount(mask));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::vector<std::string> default_node_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> nodes)
    : nodes_(std::move(nodes)), entries_(nodes_.size() * nodes_.size(), 2) {
  for (int s = 0; s < rank(); ++s) entries_[s * rank() + s] = 1;
}

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> nodes, std::vector<int> entries)
    : nodes_(std::move(nodes)), entries_(std::move(entries)) {
  const int n = rank();
  if (entries_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidInput("Coxeter matrix: expected " + std::to_string(n * n) +
                       " entries, got " + std::to_string(entries_.size()));
  }
  for (int s = 0; s < n; ++s) {
    if ((*this)(s, s) != 1) {
      throw InvalidInput("Coxeter matrix: diagonal entry at " + nodes_[s] + " is not 1");
    }
    for (int t = s + 1; t < n; ++t) {
      if ((*this)(s, t) != (*this)(t, s)) {
        throw InvalidInput("Coxeter matrix: not symmetric at (" + nodes_[s] + ", " +
                           nodes_[t] + ")");
      }
      if ((*this)(s, t) < 2) {
        throw InvalidInput("Coxeter matrix: off-diagonal entry below 2 at (" + nodes_[s] +
                           ", " + nodes_[t] + ")");
      }
    }
  }
}

void CoxeterMatrix::set(int s, int t, int m) {
  if (s == t || m < 2) throw InvalidInput("Coxeter matrix: invalid entry assignment");
  entries_[s * rank() + t] = m;
  entries_[t * rank() + s] = m;
}

int CoxeterMatrix::index_of(std::string_view name) const noexcept {
  const auto it = std::find(nodes_.begin(), nodes_.end(), name);
  return it == nodes_.end() ? -1 : static_cast<int>(it - nodes_.begin());
}

CoxeterMatrix CoxeterMatrix::restrict(std::span<const int> indices) const {
  std::vector<std::string> names;
  names.reserve(indices.size());
  for (int i : indices) names.push_back(nodes_.at(i));
  CoxeterMatrix out(std::move(names));
  const int k = static_cast<int>(indices.size());
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) out.set(a, b, (*this)(indices[a], indices[b]));
  }
  return out;
}

CoxeterMatrix CoxeterMatrix::restrict(NodeMask mask) const {
  const auto idx = mask_indices(mask);
  return restrict(std::span<const int>(idx));
}

NodeMask CoxeterMatrix::neighbours(int s) const {
  NodeMask out = 0;
  for (int t = 0; t < rank(); ++t) {
    if (joined(s, t)) out |= bit(t);
  }
  return out;
}

CoxeterDiagram::CoxeterDiagram(std::vector<std::string> nodes, const std::vector<Edge>& edges)
    : matrix_(std::move(nodes)) {
  const int n = matrix_.rank();
  for (const Edge& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n || e.a == e.b) {
      throw InvalidInput("Coxeter diagram: edge with invalid endpoints");
    }
    if (e.m < 3) {
      throw InvalidInput("Coxeter diagram: edge label " + std::to_string(e.m) +
                         " below 3 between " + matrix_.node(e.a) + " and " + matrix_.node(e.b));
    }
    if (matrix_(e.a, e.b) != 2) {
      throw InvalidInput("Coxeter diagram: repeated edge between " + matrix_.node(e.a) +
                         " and " + matrix_.node(e.b));
    }
    matrix_.set(e.a, e.b, e.m);
  }
}

std::vector<Edge> CoxeterDiagram::edges() const {
  std::vector<Edge> out;
  for (int a = 0; a < rank(); ++a) {
    for (int b = a + 1; b < rank(); ++b) {
      if (matrix_.joined(a, b)) out.push_back({a, b, matrix_(a, b)});
    }
  }
  return out;
}

double cosine_entry(int m) {
  switch (m) {
    case 1: return 2.0;
    case 2: return 0.0;
    case 3: return -1.0;
    case 4: return -std::numbers::sqrt2;
    case 6: return -std::numbers::sqrt3;
    case kInfinity: return -2.0;
    default: return -2.0 * std::cos(std::numbers::pi / m);
  }
}

Eigen::MatrixXd cosine_matrix(const CoxeterMatrix& m) {
  const int n = m.rank();
  Eigen::MatrixXd c(n, n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) c(s, t) = cosine_entry(m(s, t));
  }
  return c;
}

std::vector<NodeMask> component_masks(const CoxeterMatrix& m, NodeMask within) {
  if (m.rank() > 64) throw PreconditionError("subset operations need rank <= 64");
  std::vector<NodeMask> out;
  NodeMask left = within;
  while (left != 0) {
    NodeMask comp = left & (~left + 1);
    NodeMask frontier = comp;
    while (frontier != 0) {
      const int s = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const NodeMask fresh = m.neighbours(s) & within & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<NodeMask> component_masks(const CoxeterMatrix& m) {
  return component_masks(m, full_mask(m.rank()));
}

bool is_connected(const CoxeterMatrix& m, NodeMask within) {
  return within != 0 && component_masks(m, within).size() == 1;
}

std::vector<std::vector<int>> component_indices(const CoxeterMatrix& m) {
  const int n = m.rank();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{root};
    comp[root] = id;
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      out[id].push_back(s);
      for (int t = 0; t < n; ++t) {
        if (comp[t] < 0 && m.joined(s, t)) {
          comp[t] = id;
          stack.push_back(t);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<CoxeterDiagram> components(const CoxeterDiagram& d) {
  std::vector<CoxeterDiagram> out;
  for (const auto& idx : component_indices(d.matrix())) {
    out.emplace_back(d.matrix().restrict(std::span<const int>(idx)));
  }
  return out;
}

bool orthogonal(const CoxeterMatrix& m, NodeMask a, NodeMask b) {
  if ((a & b) != 0) return false;
  for (int s : mask_indices(a)) {
    if ((m.neighbours(s) & b) != 0) return false;
  }
  return true;
}

}  // namespace coxlab
