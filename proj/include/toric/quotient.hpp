#pragma once

#include "toric/sysmap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

struct AffineQuotient {
  Sublattice l_hat;
  LatticeProjection projection;  // along l_hat
  Cone cone;                     // image of sigma, strictly convex
};

/// Quotient of a single strictly convex cone by L.
AffineQuotient affine_quotient_cone(const Cone& sigma, const Sublattice& l);

struct GoodPrequotientWitness {
  std::size_t i, j;  // 0-based charts; tau is checked against sigma(i)
  Cone tau;
  int condition;     // 1: image face condition, 2: preimage condition
};

struct GoodPrequotientReport {
  bool holds = false;
  std::vector<GoodPrequotientWitness> witnesses;
  std::optional<Sublattice> l_hat;
};

/// Face conditions on every maximal cone of every Delta_ij, against
/// sigma(i) and sigma(j). The second overload uses an explicit surjective
/// projection, whose kernel plays the role of L.
GoodPrequotientReport check_good_prequotient(const SystemOfFans& s, const Sublattice& l);
GoodPrequotientReport check_good_prequotient(const SystemOfFans& s, const LatticeProjection& p);

struct FanReduction {
  SystemOfFans system;
  SystemMap map;
  LatticeProjection projection;  // along the common minimal cone
};

/// Divides a system of quasi-fans by its common minimal cone.
FanReduction quasifans_to_fans(const SystemOfFans& s);

struct PrequotientResult {
  SystemOfFans target;
  SystemMap map;
  std::size_t loop1_steps = 0;
  std::size_t loop2_steps = 0;
  std::vector<std::string> trace;
};

/// Fan-system target, built directly from the images of the maximal
/// glueing cones. Throws std::invalid_argument if the check fails.
PrequotientResult build_good_prequotient(const SystemOfFans& s, const Sublattice& l);

struct PrequotientOptions {
  /// Scan (i, j, cone) in reverse lexicographic order.
  bool reverse_order = false;
  /// Assert the Loop 1 termination measure after each step.
  bool check_measure = false;
  /// Recompute the off-diagonal entries in Loop 1 from their maximal cones
  /// (the default). When false, every face of the replaced cone is removed
  /// literally before adding the faces of its enlargement.
  bool reclose_glueing = true;
};

/// Init, Loop 1 and Loop 2 on an affine system of quasi-fans. The target is
/// a system of quasi-fans in N/L.
PrequotientResult prequotient(const SystemOfFans& s, const Sublattice& l, const PrequotientOptions& opts = {});
PrequotientResult prequotient(const SystemOfFans& s, const LatticeProjection& p,
                              const PrequotientOptions& opts = {});

/// prequotient followed by quasifans_to_fans.
PrequotientResult toric_prequotient(const SystemOfFans& s, const Sublattice& l, const PrequotientOptions& opts = {});

struct SeparationOptions {
  std::size_t iteration_cap = 10000;
};

struct SeparationResult {
  SystemOfFans fan;  // a single chart
  SystemMap map;
  std::size_t merges = 0;
};

/// Reduction to a fan by merging working cones whose relative interiors
/// meet in different faces, and dividing out linealities.
SeparationResult toric_separation(const SystemOfFans& s, const SeparationOptions& opts = {});

/// toric_separation after toric_prequotient.
SeparationResult toric_quotient(const SystemOfFans& s, const Sublattice& l, const PrequotientOptions& opts = {});

/// Targets of two maps with the same source agree after the change of basis
/// between their (surjective, equal-kernel) lattice maps, up to a chart
/// permutation.
bool isomorphic_targets(const SystemMap& a, const SystemMap& b);

}  // namespace toric
