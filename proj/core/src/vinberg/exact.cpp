#include "coxlab/vinberg/exact.hpp"

#include <cmath>

namespace coxlab::vinberg {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_integral() const {
  for (const auto& x : a_) {
    if (boost::multiprecision::denominator(x) != 1) return false;
  }
  return true;
}

Rational RationalMatrix::determinant() const {
  RationalMatrix w = *this;
  Rational det = 1;
  for (int c = 0; c < n_; ++c) {
    int pivot = c;
    while (pivot < n_ && w(pivot, c) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != c) {
      for (int j = 0; j < n_; ++j) std::swap(w(pivot, j), w(c, j));
      det = -det;
    }
    det *= w(c, c);
    for (int r = c + 1; r < n_; ++r) {
      if (w(r, c) == 0) continue;
      const Rational f = w(r, c) / w(c, c);
      for (int j = c; j < n_; ++j) w(r, j) -= f * w(c, j);
    }
  }
  return det;
}

Eigen::MatrixXd RationalMatrix::to_double() const {
  Eigen::MatrixXd m(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m(i, j) = static_cast<double>((*this)(i, j));
  }
  return m;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  const int n = x.n_;
  RationalMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Rational& xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (y(k, j) != 0) out(i, j) += xik * y(k, j);
      }
    }
  }
  return out;
}

std::optional<Rational> recognize_rational(double x, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  for (long q = 1; q <= max_den; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(p) > 9.0e15) return std::nullopt;
    if (p / static_cast<double>(q) == x) {
      return Rational(static_cast<long long>(p), static_cast<long long>(q));
    }
  }
  return std::nullopt;
}

std::optional<RationalMatrix> recognize_rational(const Eigen::MatrixXd& m, long max_den) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = static_cast<int>(m.rows());
  RationalMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto q = recognize_rational(m(i, j), max_den);
      if (!q) return std::nullopt;
      out(i, j) = *q;
    }
  }
  return out;
}

}  // namespace coxlab::vinberg
