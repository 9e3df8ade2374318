#include "coxlab/vinberg/cartan.hpp"

#include <cmath>
#include <numbers>

#include "coxlab/error.hpp"

namespace coxlab::vinberg {
namespace {

std::string pair_text(const std::vector<std::string>& nodes, int s, int t) {
  return "(" + nodes[s] + ", " + nodes[t] + ")";
}

// m_{s,t} from a pair product; 0 when the product is not of Coxeter type.
int label_from_product(double p, double tol) {
  if (p == 0.0) return 2;
  if (p >= 4.0 - tol) return kInfinity;
  const double m = std::numbers::pi / std::acos(std::sqrt(p) / 2.0);
  const double r = std::round(m);
  if (r < 2.0 || std::abs(m - r) > tol) return 0;
  return static_cast<int>(r);
}

}  // namespace

CartanMatrix::CartanMatrix(Eigen::MatrixXd entries, std::vector<std::string> nodes, double tol)
    : a_(std::move(entries)), nodes_(std::move(nodes)) {
  if (a_.rows() != a_.cols()) throw InvalidInput("Cartan matrix is not square");
  const int n = rank();
  if (n == 0) throw InvalidInput("Cartan matrix is empty");
  if (nodes_.empty()) nodes_ = default_node_names(n);
  if (static_cast<int>(nodes_.size()) != n) {
    throw InvalidInput("Cartan matrix: node list does not match the matrix size");
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      double& x = a_(s, t);
      if (!std::isfinite(x)) throw InvalidInput("Cartan matrix: non-finite entry");
      if (s == t) {
        if (std::abs(x - 2.0) > tol) {
          throw InvalidInput("Cartan matrix: diagonal entry at " + nodes_[s] + " is " +
                             std::to_string(x) + ", not 2");
        }
        x = 2.0;
      } else {
        if (x > tol) {
          throw InvalidInput("Cartan matrix: positive off-diagonal entry at " +
                             pair_text(nodes_, s, t));
        }
        if (std::abs(x) <= tol) x = 0.0;
      }
    }
  }
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if ((a_(s, t) == 0.0) != (a_(t, s) == 0.0)) {
        throw InvalidInput("Cartan matrix: zero pattern is not symmetric at " +
                           pair_text(nodes_, s, t));
      }
    }
  }
  exact_ = recognize_rational(a_);
}

CartanMatrix CartanMatrix::restrict(const std::vector<int>& indices) const {
  const int k = static_cast<int>(indices.size());
  Eigen::MatrixXd sub(k, k);
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    names.push_back(nodes_.at(indices[i]));
    for (int j = 0; j < k; ++j) sub(i, j) = a_(indices[i], indices[j]);
  }
  return CartanMatrix(std::move(sub), std::move(names));
}

std::vector<std::vector<int>> CartanMatrix::components() const {
  const int n = rank();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int v = 0; v < n; ++v) {
        if (v != u && comp[v] < 0 && a_(u, v) != 0.0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

CartanReport cartan_analyze(const Eigen::MatrixXd& a, double tol, std::vector<std::string> nodes) {
  CartanReport r;
  std::optional<CartanMatrix> cm;
  try {
    cm.emplace(a, std::move(nodes), tol);
  } catch (const InvalidInput& e) {
    r.invalid_reason = e.what();
    return r;
  }
  r.valid = true;
  const int n = cm->rank();
  CoxeterMatrix m(cm->nodes());
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const int label = label_from_product((*cm)(s, t) * (*cm)(t, s), tol);
      if (label == 0) {
        r.offending_pair = std::pair{s, t};
        return r;
      }
      m.set(s, t, label);
    }
  }
  r.coxeter_type = true;
  r.compatible = std::move(m);
  return r;
}

CoxeterMatrix compatible_coxeter(const CartanMatrix& a, double tol) {
  CartanReport r = cartan_analyze(a.matrix(), tol, a.nodes());
  if (!r.coxeter_type) {
    const auto [s, t] = *r.offending_pair;
    throw PreconditionError("Cartan matrix is not of Coxeter type: the product at " +
                            pair_text(a.nodes(), s, t) + " is not 4 cos^2(pi/m)");
  }
  return std::move(*r.compatible);
}

CartanMatrix cartan_from_coxeter(const CoxeterMatrix& m, const PairMap& infinity_products,
                                 const PairMap& asymmetry) {
  const int n = m.rank();
  auto check_pair = [&](int s, int t, const char* what) {
    if (s < 0 || t < 0 || s >= n || t >= n || s == t) {
      throw PreconditionError(std::string("cartan_from_coxeter: ") + what +
                              " key is not a pair of generators");
    }
  };
  for (const auto& [key, product] : infinity_products) {
    check_pair(key.first, key.second, "infinity product");
    if (m(key.first, key.second) != kInfinity) {
      throw PreconditionError("cartan_from_coxeter: infinity product given for a finite pair " +
                              pair_text(m.nodes(), key.first, key.second));
    }
    if (!(product >= 4.0)) {
      throw PreconditionError("cartan_from_coxeter: product below 4 requested for " +
                              pair_text(m.nodes(), key.first, key.second));
    }
  }
  for (const auto& [key, ratio] : asymmetry) {
    check_pair(key.first, key.second, "asymmetry");
    if (m(key.first, key.second) == 2) {
      throw PreconditionError("cartan_from_coxeter: asymmetry given for a commuting pair " +
                              pair_text(m.nodes(), key.first, key.second));
    }
    if (!(ratio > 0.0)) throw PreconditionError("cartan_from_coxeter: ratio must be positive");
  }

  Eigen::MatrixXd a = 2.0 * Eigen::MatrixXd::Identity(n, n);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const int label = m(s, t);
      if (label == 2) continue;
      double ratio = 1.0;
      if (auto it = asymmetry.find({s, t}); it != asymmetry.end()) ratio = it->second;
      if (auto it = asymmetry.find({t, s}); it != asymmetry.end()) ratio = 1.0 / it->second;
      double symmetric = cosine_entry(label);
      if (label == kInfinity) {
        auto it = infinity_products.find({s, t});
        if (it == infinity_products.end()) it = infinity_products.find({t, s});
        if (it != infinity_products.end()) symmetric = -std::sqrt(it->second);
      }
      if (ratio == 1.0) {
        a(s, t) = symmetric;
        a(t, s) = symmetric;
      } else {
        const double product = symmetric * symmetric;
        a(s, t) = -std::sqrt(product * ratio);
        a(t, s) = -std::sqrt(product / ratio);
      }
    }
  }
  return CartanMatrix(std::move(a), m.nodes());
}

std::string to_string(PerronType t) {
  switch (t) {
    case PerronType::Positive: return "positive";
    case PerronType::Zero: return "zero";
    case PerronType::Negative: return "negative";
  }
  return "?";
}

PerronReport perron_type(const CartanMatrix& a, double tol) {
  if (!a.irreducible()) throw PreconditionError("perron_type: Cartan matrix is reducible");
  const int n = a.rank();
  const Eigen::MatrixXd b = 2.0 * Eigen::MatrixXd::Identity(n, n) - a.matrix();

  const Eigen::EigenSolver<Eigen::MatrixXd> es(b);
  const auto& values = es.eigenvalues();
  int best = -1;
  for (int i = 0; i < n; ++i) {
    const auto z = values[i];
    if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z))) continue;
    if (best < 0 || z.real() > values[best].real()) best = i;
  }
  if (best < 0) throw ConsistencyError("perron_type: no real eigenvalue found");
  const double rho = values[best].real();
  Eigen::VectorXd vec = es.eigenvectors().col(best).real();
  if (vec.sum() < 0) vec = -vec;
  vec.normalize();

  // Power iteration on the primitive matrix b + Id.
  const Eigen::MatrixXd shifted = b + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double estimate = 0.0;
  for (int it = 0; it < 1'000'000; ++it) {
    Eigen::VectorXd y = shifted * x;
    estimate = y.norm();
    y /= estimate;
    const double change = (y - x).cwiseAbs().maxCoeff();
    x = std::move(y);
    if (change < 1e-13) break;
  }
  const double rho_power = estimate - 1.0;
  if (std::abs(rho_power - rho) > 1e-6 * std::max(1.0, std::abs(rho))) {
    throw ConsistencyError("perron_type: eigen-decomposition and power iteration disagree (" +
                           std::to_string(rho) + " vs " + std::to_string(rho_power) + ")");
  }

  PerronReport r;
  r.lambda = 2.0 - rho;
  r.eigenvector = std::move(vec);
  if (std::abs(r.lambda) < tol) {
    r.type = PerronType::Zero;
  } else {
    r.type = r.lambda > 0 ? PerronType::Positive : PerronType::Negative;
  }
  return r;
}

}  // namespace coxlab::vinberg
