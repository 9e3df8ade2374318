#include "coxlab/lorentz/polygon.hpp"

#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxlab/error.hpp"

namespace coxlab::lorentz {

double PiFraction::radians() const {
  return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
}

bool polygon_exists(std::span<const PiFraction> angles) {
  using boost::multiprecision::cpp_rational;
  if (angles.size() < 3) throw PreconditionError("polygon_exists: need at least 3 angles");
  cpp_rational sum = 0;
  for (const auto& a : angles) {
    if (a.den <= 0) throw PreconditionError("polygon_exists: non-positive denominator");
    const cpp_rational q(a.num, a.den);
    if (q < 0 || q >= 1) throw PreconditionError("polygon_exists: angle outside [0, pi)");
    sum += q;
  }
  return sum < static_cast<long long>(angles.size()) - 2;
}

bool polygon_exists(std::span<const double> radians) {
  if (radians.size() < 3) throw PreconditionError("polygon_exists: need at least 3 angles");
  double sum = 0;
  for (double a : radians) {
    if (!(a >= 0 && a < std::numbers::pi)) {
      throw PreconditionError("polygon_exists: angle outside [0, pi)");
    }
    sum += a;
  }
  return sum < static_cast<double>(radians.size() - 2) * std::numbers::pi;
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Impossible: return "impossible";
    case Feasibility::PossibleKnownExample: return "possible (example known)";
    case Feasibility::Unknown: return "unknown";
  }
  return "?";
}

DimensionVerdict dimension_bounds(int d, bool compact, bool right_angled) {
  if (d < 2) throw PreconditionError("dimension_bounds: d must be at least 2");
  DimensionVerdict v;
  bool known = false;
  if (right_angled) {
    v.bound = compact ? 4 : 12;
    known = compact ? d <= 4 : d <= 8;
    v.notes.push_back(compact ? "right-angled compact: d <= 4; the 120-cell realizes d = 4"
                              : "right-angled finite volume: d <= 12; examples known for d <= 8");
  } else {
    v.bound = compact ? 29 : 995;
    known = compact ? d <= 8 : (d <= 21 && d != 20);
    v.notes.push_back(compact ? "compact: d <= 29; examples known for d <= 8"
                              : "finite volume: d <= 995; examples known for d <= 21, d != 20");
  }
  if (d > v.bound) {
    v.feasibility = Feasibility::Impossible;
  } else {
    v.feasibility = known ? Feasibility::PossibleKnownExample : Feasibility::Unknown;
  }
  return v;
}

}  // namespace coxlab::lorentz
