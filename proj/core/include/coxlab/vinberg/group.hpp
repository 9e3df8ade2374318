#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "coxlab/vinberg/mirror_simplex.hpp"

namespace coxlab::vinberg {

struct GroupElement {
  /// Generator indices; the matrix is sigma_{word[0]} * sigma_{word[1]} * ...
  std::vector<int> word;
  Eigen::MatrixXd matrix;

  int length() const noexcept { return static_cast<int>(word.size()); }
};

struct GroupEnumeration {
  /// Ordered by word length, then lexicographically by word. Each word is the
  /// lexicographically least of its length for its element.
  std::vector<GroupElement> elements;
  /// growth[l] = number of elements of length l.
  std::vector<std::size_t> growth;
  /// A full level produced nothing new.
  bool closed = false;
  /// Dedup was exact (rational Cartan matrix).
  bool exact = false;
};

struct EnumerateOptions {
  std::size_t cap = 1'000'000;
  /// Hash grid for floating-point dedup; matches are confirmed within verify_tol.
  double dedup_tol = 1e-9;
  double verify_tol = 1e-7;
  /// Use exact rational arithmetic when the simplex has it.
  bool prefer_exact = true;
};

/// Breadth-first enumeration of the group generated by the reflections, up to
/// words of length max_length: level l + 1 consists of sigma_s * g for g at
/// level l. Stops early once a level is empty (closed). Throws
/// PreconditionError when the element count would exceed the cap or
/// max_length < 0.
GroupEnumeration enumerate_group(const MirrorSimplex& s, int max_length,
                                 const EnumerateOptions& options = {});

}  // namespace coxlab::vinberg
