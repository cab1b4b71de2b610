#pragma once

#include "toric/number.hpp"

#include <optional>
#include <vector>

namespace toric {

/// Exact simplex for  max c.z  subject to  A z <= b, z >= 0  with b >= 0,
/// so the origin is a feasible start. Bland's rule; returns the optimum, or
/// nullopt when unbounded.
std::optional<Rational> maximize(const RatVector& c, const std::vector<RatVector>& a, const RatVector& b);

}  // namespace toric
