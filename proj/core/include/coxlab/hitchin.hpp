#pragma once

#include <cstdint>
#include <span>

namespace coxlab {

/// Dimension of the Hitchin component of PGL(n, R) for the reflection group
/// of a compact hyperbolic polygon with angles pi/m_i:
///
///     -(n^2 - 1) + sum_{l=2..n} sum_i floor(l (1 - 1/m_i)).
///
/// Throws PreconditionError when n < 2, some m_i < 2, or no compact
/// hyperbolic polygon has these angles.
std::int64_t hitchin_dimension(int n, std::span<const int> angles);

}  // namespace coxlab
