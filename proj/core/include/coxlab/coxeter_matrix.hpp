#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace coxlab {

/// Label of a pair of generators whose product has infinite order.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Subset of generators as a bit set. Subset-based routines require rank <= 64.
using NodeMask = std::uint64_t;

inline constexpr NodeMask bit(int i) { return NodeMask{1} << i; }
inline constexpr NodeMask full_mask(int n) {
  return n >= 64 ? ~NodeMask{0} : (NodeMask{1} << n) - 1;
}
std::vector<int> mask_indices(NodeMask mask);

/// "s1", "s2", ..., "sn".
std::vector<std::string> default_node_names(int n);

/// Symmetric matrix (m_{s,t}) over an ordered generating set S, with
/// m_{s,s} = 1 and m_{s,t} in {2, 3, ..., kInfinity} off the diagonal.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;

  /// All pairs commuting (m = 2).
  explicit CoxeterMatrix(std::vector<std::string> nodes);

  /// Row-major entries; throws InvalidInput unless the invariants hold.
  CoxeterMatrix(std::vector<std::string> nodes, std::vector<int> entries);

  int rank() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::string& node(int s) const { return nodes_.at(s); }

  int operator()(int s, int t) const noexcept { return entries_[s * rank() + t]; }

  /// Sets m_{s,t} = m_{t,s} = m. Requires s != t and m >= 2.
  void set(int s, int t, int m);

  /// Index of a node name, or -1.
  int index_of(std::string_view name) const noexcept;

  /// Standard subdiagram on the given generators, in the given order.
  CoxeterMatrix restrict(std::span<const int> indices) const;
  CoxeterMatrix restrict(NodeMask mask) const;

  /// Relabels generators: node i of the result is node order[i] of *this.
  CoxeterMatrix permuted(std::span<const int> order) const { return restrict(order); }

  /// True when m_{s,t} >= 3 (the pair is joined in the diagram).
  bool joined(int s, int t) const noexcept { return s != t && (*this)(s, t) >= 3; }

  NodeMask neighbours(int s) const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::string> nodes_;
  std::vector<int> entries_;
};

/// Edge of a Coxeter diagram; a < b are node indices and m >= 3.
struct Edge {
  int a = 0;
  int b = 0;
  int m = 3;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled graph view of a Coxeter matrix: edges exactly for m >= 3.
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;
  explicit CoxeterDiagram(CoxeterMatrix matrix) : matrix_(std::move(matrix)) {}

  /// Throws InvalidInput on labels below 3, repeated pairs or bad indices.
  CoxeterDiagram(std::vector<std::string> nodes, const std::vector<Edge>& edges);

  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  int rank() const noexcept { return matrix_.rank(); }
  const std::vector<std::string>& nodes() const noexcept { return matrix_.nodes(); }

  /// Edges ordered by (a, b).
  std::vector<Edge> edges() const;

  friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;

 private:
  CoxeterMatrix matrix_;
};

/// -2 cos(pi / m), with m = kInfinity giving -2. Labels 2, 3, 4, 6 and
/// infinity come out exact (0, -1, -sqrt 2, -sqrt 3, -2).
double cosine_entry(int m);

/// Cosine matrix (-2 cos(pi / m_{s,t}))_{s,t}; diagonal 2.
Eigen::MatrixXd cosine_matrix(const CoxeterMatrix& m);

/// Connected components of the diagram restricted to `within`, ordered by
/// their lowest node index.
std::vector<NodeMask> component_masks(const CoxeterMatrix& m, NodeMask within);
std::vector<NodeMask> component_masks(const CoxeterMatrix& m);
bool is_connected(const CoxeterMatrix& m, NodeMask within);

/// Connected components as node index lists (any rank), sorted by smallest index.
std::vector<std::vector<int>> component_indices(const CoxeterMatrix& m);

/// Connected subdiagrams, ordered by smallest node index.
std::vector<CoxeterDiagram> components(const CoxeterDiagram& d);

/// True when every t in a and u in b has m_{t,u} = 2 (and a, b are disjoint).
bool orthogonal(const CoxeterMatrix& m, NodeMask a, NodeMask b);

}  // namespace coxlab
