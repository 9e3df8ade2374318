#include "coxlab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "coxlab/error.hpp"

namespace coxlab {

std::string to_string(const SignatureTriple& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," +
         std::to_string(s.zero) + ")";
}

SignatureTriple signature(const Eigen::MatrixXd& sym, double tol) {
  if (sym.rows() != sym.cols()) throw InvalidInput("signature: matrix is not square");
  SignatureTriple out;
  out.tolerance = tol;
  if (sym.rows() == 0) return out;

  const double scale = std::max(1.0, sym.cwiseAbs().maxCoeff());
  if ((sym - sym.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw InvalidInput("signature: matrix is not symmetric within tolerance");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (sym + sym.transpose()),
                                                          Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& values = eig.eigenvalues();
  const double radius = values.cwiseAbs().maxCoeff();
  const double cut = tol * radius;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (radius == 0.0 || std::abs(values[i]) < cut) {
      ++out.zero;
    } else if (values[i] > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
  }
  return out;
}

int numeric_rank(const Eigen::MatrixXd& m, double tol) {
  if (m.size() == 0) return 0;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double top = sv.maxCoeff();
  if (top == 0.0) return 0;
  return static_cast<int>((sv.array() > tol * top).count());
}

double determinant(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 1.0;
  return m.fullPivLu().determinant();
}

}  // namespace coxlab
