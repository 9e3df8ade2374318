#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace coxlab::lorentz {

/// The angle pi * num / den.
struct PiFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double radians() const;
};

/// A compact hyperbolic polygon with these angles exists iff
/// sum theta_i < (n - 2) pi. The exact overload decides the strict inequality
/// in rational arithmetic. Angles must lie in [0, pi); n >= 3. Violations throw
/// PreconditionError.
bool polygon_exists(std::span<const PiFraction> angles);
bool polygon_exists(std::span<const double> radians);

enum class Feasibility { Impossible, PossibleKnownExample, Unknown };

std::string to_string(Feasibility f);

struct DimensionVerdict {
  Feasibility feasibility = Feasibility::Unknown;
  /// The applicable upper bound on d.
  int bound = 0;
  std::vector<std::string> notes;
};

/// Known constraints on the dimension d of hyperbolic Coxeter polytopes:
/// compact ones need d <= 29 and finite-volume ones d <= 995; right-angled
/// compact ones d <= 4 and right-angled finite-volume ones d <= 12. Inside the
/// bound the verdict records whether an example is known. Requires d >= 2.
DimensionVerdict dimension_bounds(int d, bool compact, bool right_angled);

}  // namespace coxlab::lorentz
