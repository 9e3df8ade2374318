#include "coxlab/lorentz/gram.hpp"

#include <cmath>

#include "coxlab/error.hpp"

namespace coxlab::lorentz {

GramMatrix::GramMatrix(Eigen::MatrixXd entries, std::optional<int> dimension_hint, double tol)
    : g_(std::move(entries)), hint_(dimension_hint) {
  if (g_.rows() != g_.cols()) throw InvalidInput("Gram matrix is not square");
  if (g_.rows() == 0) throw InvalidInput("Gram matrix is empty");
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(g_(i, i)) || std::abs(g_(i, i) - 1.0) > tol) {
      throw InvalidInput("Gram matrix: diagonal entry " + std::to_string(i) + " is not 1");
    }
    g_(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      if (!std::isfinite(g_(i, j)) || std::abs(g_(i, j) - g_(j, i)) > tol) {
        throw InvalidInput("Gram matrix: not symmetric at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
      }
      if (g_(i, j) > tol) {
        throw InvalidInput("Gram matrix: positive off-diagonal entry at (" + std::to_string(i) +
                           ", " + std::to_string(j) + ")");
      }
      g_(j, i) = g_(i, j);
    }
  }
}

GramMatrix gram_from_coxeter(const CoxeterMatrix& m) {
  return GramMatrix(0.5 * cosine_matrix(m));
}

GramReport validate_gram(const GramMatrix& g, double tol) {
  GramReport r;
  const int n = g.size();
  CoxeterMatrix pattern(default_node_names(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(g(i, j)) > tol) pattern.set(i, j, 3);
    }
  }
  r.irreducible = component_indices(pattern).size() == 1;
  r.signature = signature(g.matrix(), tol);
  if (!r.irreducible) r.problems.push_back("reducible: G is a direct sum of blocks");
  if (r.signature.negative != 1) {
    r.problems.push_back("negative index is " + std::to_string(r.signature.negative) +
                         ", not 1");
  }
  r.vinberg_ok = r.irreducible && r.signature.negative == 1;
  if (r.vinberg_ok) r.d = r.signature.positive;
  if (r.vinberg_ok && g.dimension_hint() && *g.dimension_hint() != r.d) {
    r.vinberg_ok = false;
    r.problems.push_back("signature gives d = " + std::to_string(r.d) + ", hint says " +
                         std::to_string(*g.dimension_hint()));
  }
  return r;
}

Eigen::MatrixXd LorentzRealization::form() const {
  Eigen::MatrixXd j = Eigen::MatrixXd::Identity(d + 1, d + 1);
  j(d, d) = -1.0;
  return j;
}

double LorentzRealization::inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  return x.head(d).dot(y.head(d)) - x[d] * y[d];
}

double LorentzRealization::reconstruction_error(const GramMatrix& g) const {
  double worst = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      worst = std::max(worst, std::abs(inner(normals[i], normals[j]) - g(i, j)));
    }
  }
  return worst;
}

LorentzRealization realize_normals(const GramMatrix& g, double tol) {
  const SignatureTriple sig = signature(g.matrix(), tol);
  const bool lorentzian = sig.negative == 1;
  const bool degenerate_flat = sig.negative == 0 && sig.zero >= 1 && sig.positive >= 1;
  if (!lorentzian && !degenerate_flat) {
    throw PreconditionError("realize_normals: signature " + to_string(sig) +
                            " is not of the form (d, 1, r)");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g.matrix());
  const Eigen::VectorXd& values = eig.eigenvalues();
  const Eigen::MatrixXd& vectors = eig.eigenvectors();
  const double cut = tol * values.cwiseAbs().maxCoeff();

  LorentzRealization r;
  r.d = sig.positive;
  const int n = g.size();
  r.normals.assign(n, Eigen::VectorXd::Zero(r.d + 1));
  // Eigenvalues come sorted ascending: the negative one (if any) first.
  int column = 0;
  for (int k = static_cast<int>(values.size()) - 1; k >= 0 && column < r.d; --k) {
    if (values[k] <= cut) continue;
    const double scale = std::sqrt(values[k]);
    for (int i = 0; i < n; ++i) r.normals[i][column] = scale * vectors(i, k);
    ++column;
  }
  if (lorentzian) {
    const double scale = std::sqrt(-values[0]);
    for (int i = 0; i < n; ++i) r.normals[i][r.d] = scale * vectors(i, 0);
  }
  return r;
}

std::vector<Eigen::MatrixXd> reflections_lorentz(const LorentzRealization& r) {
  const Eigen::MatrixXd j = r.form();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(r.d + 1, r.d + 1);
  std::vector<Eigen::MatrixXd> out;
  for (const auto& u : r.normals) out.push_back(id - 2.0 * u * (j * u).transpose());
  return out;
}

double form_preservation_error(const LorentzRealization& r,
                               const std::vector<Eigen::MatrixXd>& reflections) {
  const Eigen::MatrixXd j = r.form();
  double worst = 0.0;
  for (const auto& s : reflections) {
    worst = std::max(worst, (s.transpose() * j * s - j).cwiseAbs().maxCoeff());
  }
  return worst;
}

DhReport dh_convex_cocompact(const CoxeterMatrix& m, const GramMatrix& g, double tol) {
  if (m.rank() != g.size()) {
    throw PreconditionError("dh_convex_cocompact: Coxeter and Gram matrices differ in size");
  }
  const int n = m.rank();
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (m(s, t) == kInfinity) continue;
      if (std::abs(g(s, t) - 0.5 * cosine_entry(m(s, t))) > 1e-9) {
        throw PreconditionError("dh_convex_cocompact: g at (" + m.node(s) + ", " + m.node(t) +
                                ") is not -cos(pi/" + std::to_string(m(s, t)) + ")");
      }
    }
  }
  DhReport r;
  r.hyperbolicity = moussong_hyperbolic(CoxeterDiagram(m));
  if (!r.hyperbolicity.hyperbolic) {
    r.reasons.push_back("not word-hyperbolic: " + r.hyperbolicity.describe(m));
  }
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (std::abs(g(s, t) + 1.0) < tol) {
        r.asymptotic_pairs.emplace_back(s, t);
        r.reasons.push_back("asymptotic facets (" + m.node(s) + ", " + m.node(t) +
                            "): g = -1");
      }
    }
  }
  r.convex_cocompact = r.reasons.empty();
  return r;
}

}  // namespace coxlab::lorentz
