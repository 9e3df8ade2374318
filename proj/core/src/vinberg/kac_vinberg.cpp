#include "coxlab/vinberg/kac_vinberg.hpp"

#include <cmath>

#include "coxlab/error.hpp"
#include "coxlab/vinberg/mirror_simplex.hpp"

namespace coxlab::vinberg {
namespace {

constexpr int kPairs[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};

Eigen::Matrix3d symmetric_from(const Eigen::Matrix<double, 6, 1>& b) {
  Eigen::Matrix3d m;
  for (int k = 0; k < 6; ++k) {
    m(kPairs[k][0], kPairs[k][1]) = b[k];
    m(kPairs[k][1], kPairs[k][0]) = b[k];
  }
  return m;
}

}  // namespace

KacVinbergReport kac_vinberg_check(const CartanMatrix& a, double tol) {
  if (a.rank() != 3) throw PreconditionError("kac_vinberg_check: needs a 3x3 Cartan matrix");
  KacVinbergReport r;
  const Eigen::MatrixXd& m = a.matrix();
  r.integral = a.exact() && a.exact()->is_integral();
  r.negative_det = determinant(m) < -tol;
  const double forward = m(0, 1) * m(1, 2) * m(2, 0);
  const double backward = m(0, 2) * m(2, 1) * m(1, 0);
  r.cyclic_asymmetric = std::abs(forward - backward) > tol * std::max(1.0, std::abs(forward));
  r.kac_vinberg = r.integral && r.negative_det && r.cyclic_asymmetric;

  const MirrorSimplex simplex = tits_simplex(a);
  if (simplex.exact_reflections) {
    r.in_SL3Z = true;
    for (const auto& refl : *simplex.exact_reflections) {
      const Rational det = refl.determinant();
      r.in_SL3Z = r.in_SL3Z && refl.is_integral() && (det == 1 || det == -1);
    }
  }

  // sigma^T B sigma - B = 0 for each generator, linear in the 6 entries of B.
  Eigen::MatrixXd system(27, 6);
  for (int k = 0; k < 6; ++k) {
    Eigen::Matrix<double, 6, 1> unit = Eigen::Matrix<double, 6, 1>::Zero();
    unit[k] = 1.0;
    const Eigen::Matrix3d e = symmetric_from(unit);
    for (int s = 0; s < 3; ++s) {
      const Eigen::Matrix3d sigma = simplex.reflections[s];
      const Eigen::Matrix3d diff = sigma.transpose() * e * sigma - e;
      system.block<9, 1>(9 * s, k) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(diff.data());
    }
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv.maxCoeff());
  std::vector<Eigen::Matrix<double, 6, 1>> kernel;
  for (int k = 0; k < 6; ++k) {
    if (sv[k] <= cut) kernel.push_back(svd.matrixV().col(k));
  }
  r.invariant_space_dim = static_cast<int>(kernel.size());

  std::vector<Eigen::Matrix<double, 6, 1>> candidates = kernel;
  if (kernel.size() > 1) {
    Eigen::Matrix<double, 6, 1> sum = Eigen::Matrix<double, 6, 1>::Zero();
    for (const auto& k : kernel) sum += k;
    candidates.push_back(sum);
  }
  for (const auto& c : candidates) {
    Eigen::Matrix3d b = symmetric_from(c);
    b /= b.cwiseAbs().maxCoeff();
    if (std::abs(b.determinant()) <= 1e-6) continue;
    SignatureTriple sig = signature(b, tol);
    if (sig.negative > sig.positive) {
      b = -b;
      std::swap(sig.positive, sig.negative);
    }
    r.invariant_form = InvariantForm{b, sig};
    r.hyperbolic_form = sig.positive == 2 && sig.negative == 1 && sig.zero == 0;
    break;
  }
  return r;
}

}  // namespace coxlab::vinberg
