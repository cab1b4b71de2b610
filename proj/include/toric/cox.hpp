#pragma once

#include "toric/sysmap.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

class NotAffineIntersection : public std::invalid_argument {
 public:
  explicit NotAffineIntersection(const std::string& what) : std::invalid_argument(what) {}
};

/// Chart (tau, i, j) of the categorical construction, 0-based, i <= j.
struct GlueingIndex {
  Cone tau;
  std::size_t i, j;

  friend bool operator==(const GlueingIndex&, const GlueingIndex&) = default;
};

/// Basis vector of the auxiliary summand: a ray together with the chart
/// it is taken from (categorical) or a representative of its class (good).
struct AuxiliaryCoordinate {
  Cone ray;
  std::size_t chart;
};

struct Presentation {
  enum class Kind { categorical, good };

  Kind kind = Kind::categorical;
  /// Coordinates 0..rank(N)-1 are N; the rest follow `coordinates`.
  std::vector<AuxiliaryCoordinate> coordinates;
  /// One chart per maximal cone of the ambient fan.
  SystemOfFans ambient;
  /// The same cones as a single fan.
  SystemOfFans ambient_fan;
  /// Categorical kind only: the index of each ambient chart.
  std::vector<GlueingIndex> index;
  /// Ambient chart -> chart of the input.
  std::vector<std::size_t> mu;
  SystemMap q;
  /// Saturated kernel of Q.
  Sublattice h;
};

/// Requires S affine, irredundant and a fan system.
Presentation categorical_presentation(const SystemOfFans& s);

/// Requires S affine with every Delta_ij^max a single cone; throws
/// NotAffineIntersection otherwise.
Presentation good_presentation(const SystemOfFans& s);

std::string to_string(Presentation::Kind k);

}  // namespace toric
