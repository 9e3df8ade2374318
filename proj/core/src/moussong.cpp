#include "coxlab/moussong.hpp"

#include <algorithm>
#include <bit>

#include "coxlab/classify.hpp"
#include "coxlab/error.hpp"

namespace coxlab {
namespace {

std::string names(const CoxeterMatrix& m, const std::vector<int>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += m.node(idx[i]);
  }
  return out + "}";
}

}  // namespace

std::string MoussongResult::describe(const CoxeterMatrix& m) const {
  switch (witness) {
    case MoussongWitness::None: return "word-hyperbolic";
    case MoussongWitness::AffineSubset:
      return "affine subdiagram of rank >= 3: " + names(m, first);
    case MoussongWitness::OrthogonalPair:
      return "orthogonal non-spherical subdiagrams: " + names(m, first) + " and " +
             names(m, second);
  }
  return "?";
}

std::vector<NodeMask> connected_subsets(const CoxeterMatrix& m) {
  const int n = m.rank();
  if (n > 24) throw PreconditionError("connected subset search: rank above 24");
  std::vector<NodeMask> out;
  for (NodeMask s = 1; s <= full_mask(n); ++s) {
    if (is_connected(m, s)) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](NodeMask a, NodeMask b) {
    return std::popcount(a) < std::popcount(b);
  });
  return out;
}

namespace {

std::optional<std::pair<NodeMask, NodeMask>> orthogonal_pair(
    const CoxeterMatrix& m, const std::vector<NodeMask>& connected) {
  std::vector<NodeMask> minimal;
  for (NodeMask s : connected) {
    if (irreducible_kind(m, s) == Kind::Spherical) continue;
    if (std::none_of(minimal.begin(), minimal.end(), [&](NodeMask t) { return (t & s) == t; })) {
      minimal.push_back(s);
    }
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      if (orthogonal(m, minimal[i], minimal[j])) return std::pair{minimal[i], minimal[j]};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<NodeMask, NodeMask>> orthogonal_nonspherical_pair(const CoxeterMatrix& m) {
  return orthogonal_pair(m, connected_subsets(m));
}

MoussongResult moussong_hyperbolic(const CoxeterDiagram& d) {
  const CoxeterMatrix& m = d.matrix();
  const std::vector<NodeMask> connected = connected_subsets(m);
  MoussongResult r;
  for (NodeMask s : connected) {
    if (std::popcount(s) >= 3 && irreducible_kind(m, s) == Kind::Affine) {
      r.hyperbolic = false;
      r.witness = MoussongWitness::AffineSubset;
      r.first = mask_indices(s);
      return r;
    }
  }
  if (const auto pair = orthogonal_pair(m, connected)) {
    r.hyperbolic = false;
    r.witness = MoussongWitness::OrthogonalPair;
    r.first = mask_indices(pair->first);
    r.second = mask_indices(pair->second);
  }
  return r;
}

}  // namespace coxlab
