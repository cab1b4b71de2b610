#pragma once

#include "toric/lattice.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

class NotAFace : public std::invalid_argument {
 public:
  explicit NotAFace(const std::string& what) : std::invalid_argument(what) {}
};

/// Rational polyhedral cone in Z^rank, not necessarily strictly convex.
///
/// Canonical data: the lineality space (saturated Hermite basis), the
/// extreme rays modulo lineality (orthogonally projected onto the
/// complement of the lineality space, primitive, sorted), the facet normals
/// (primitive, taken inside the linear span of the cone, sorted) and the
/// equations (Hermite basis of the annihilator of the span). Two cones are
/// equal iff their canonical data agree.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::size_t rank, const std::vector<IntVector>& gens);
  /// {x : <a,x> >= 0 for a in ineqs, <e,x> = 0 for e in eqs}
  static Cone from_inequalities(std::size_t rank, const std::vector<IntVector>& ineqs,
                                const std::vector<IntVector>& eqs = {});
  static Cone zero(std::size_t rank);
  static Cone full(std::size_t rank);

  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const Sublattice& lineality() const { return lineality_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  bool is_pointed() const { return lineality_.rank() == 0; }
  bool is_zero() const { return dim_ == 0; }

  /// rays together with +- the lineality basis
  std::vector<IntVector> generators() const;
  /// Saturated lattice of the linear span.
  Sublattice span() const;
  /// An integral point of the relative interior (sum of the rays).
  IntVector relint_point() const;

  bool contains(const IntVector& v) const;
  bool contains(const RatVector& v) const;
  bool contains(const Cone& other) const;
  bool relint_contains(const IntVector& v) const;
  bool relint_contains(const RatVector& v) const;

  /// "cone((1,0),(0,1))", with "+span(...)" appended for a nontrivial
  /// lineality space; "cone()" is the zero cone.
  std::string to_string() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.lineality_ == b.lineality_ && a.rays_ == b.rays_;
  }
  /// Orders by rank, dim, then canonical data.
  friend bool operator<(const Cone& a, const Cone& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    if (a.lineality_ != b.lineality_) return a.lineality_ < b.lineality_;
    return a.rays_ < b.rays_;
  }

 private:
  static Cone build(std::size_t n, const std::vector<IntVector>& gens);

  std::size_t rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  Sublattice lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

struct FaceLattice {
  /// Sorted by (dim, canonical order); front() is the lineality space,
  /// back() the cone itself.
  std::vector<Cone> faces;
  /// (i, j): faces[i] is a facet of faces[j].
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

FaceLattice faces(const Cone& sigma);
std::vector<Cone> face_list(const Cone& sigma);
bool is_face(const Cone& tau, const Cone& sigma);

/// Smallest face of sigma containing the point v; v must lie in sigma.
Cone face_containing(const Cone& sigma, const RatVector& v);
Cone face_containing(const Cone& sigma, const IntVector& v);

/// Decided by an exact linear program.
bool relint_meets(const Cone& sigma, const Cone& tau);

Cone hull_union(const Cone& sigma, const Cone& tau);
Cone intersect(const Cone& sigma, const Cone& tau);

Cone image(const LatticeMap& f, const Cone& sigma);
/// f^{-1}(tau_prime) intersected with sigma.
Cone preimage_intersect(const LatticeMap& f, const Cone& tau_prime, const Cone& sigma);

struct SmallestFace {
  Cone face;         // sigma_W
  Sublattice w_hat;  // saturation of sigma_W + W
};

SmallestFace smallest_face_containing(const Cone& sigma, const Sublattice& w);

/// The three face conditions for tau a face of sigma and a primitive
/// sublattice L. Each throws NotAFace if tau is not a face of sigma.
/// (tau + L) face of (sigma + L) and (tau + L) cap sigma == tau.
bool projection_condition_sum(const Cone& sigma, const Cone& tau, const Sublattice& l);
/// P(tau) face of P(sigma) and P^{-1}(P(tau)) cap sigma == tau, for the
/// projection P along L.
bool projection_condition_projected(const Cone& sigma, const Cone& tau, const Sublattice& l);
/// The same with the projection along L_hat from smallest_face_containing.
bool projection_condition_saturated(const Cone& sigma, const Cone& tau, const Sublattice& l);

/// projection_condition_projected, along L or along an explicit projection.
bool face_projection_check(const Cone& sigma, const Cone& tau, const Sublattice& l);
bool face_projection_check(const Cone& sigma, const Cone& tau, const LatticeMap& projection);

}  // namespace toric
