#include "coxlab/vinberg/mirror_simplex.hpp"

#include "coxlab/error.hpp"

namespace coxlab::vinberg {

MirrorSimplex tits_simplex(const CartanMatrix& a) {
  MirrorSimplex s;
  s.cartan = a;
  const int n = a.rank();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  for (int k = 0; k < n; ++k) {
    s.alphas.push_back(id.row(k));
    s.vs.push_back(a.matrix().col(k));
    s.reflections.push_back(id - s.vs.back() * s.alphas.back());
  }
  if (const auto& exact = a.exact()) {
    std::vector<RationalMatrix> refl;
    for (int k = 0; k < n; ++k) {
      RationalMatrix r = RationalMatrix::identity(n);
      for (int i = 0; i < n; ++i) r(i, k) -= (*exact)(i, k);
      refl.push_back(std::move(r));
    }
    s.exact_reflections = std::move(refl);
  }
  return s;
}

MirrorSimplex vertex_link(const MirrorSimplex& s, int deleted) {
  const int n = s.rank();
  if (deleted < 0 || deleted >= n) {
    throw PreconditionError("vertex_link: no generator with index " + std::to_string(deleted));
  }
  if (n < 2) throw PreconditionError("vertex_link: a rank-1 simplex has no vertex links");
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    if (i != deleted) keep.push_back(i);
  }
  return tits_simplex(s.cartan.restrict(keep));
}

}  // namespace coxlab::vinberg
