#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace coxlab::vinberg {

using Rational = boost::multiprecision::cpp_rational;

/// Dense square matrix over the rationals; just enough algebra for exact
/// reflection products and dedup keys.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static RationalMatrix identity(int n);

  int size() const noexcept { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<Rational>& entries() const noexcept { return a_; }

  bool is_integral() const;
  Rational determinant() const;
  Eigen::MatrixXd to_double() const;

  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
  friend auto operator<=>(const RationalMatrix& x, const RationalMatrix& y) {
    return x.a_ <=> y.a_;
  }

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

/// The entry as p/q with 1 <= q <= max_den when the double is exactly the
/// nearest double to p/q; nullopt otherwise.
std::optional<Rational> recognize_rational(double x, long max_den = 1000);

/// Entrywise recognize_rational; nullopt if any entry fails.
std::optional<RationalMatrix> recognize_rational(const Eigen::MatrixXd& m, long max_den = 1000);

}  // namespace coxlab::vinberg
