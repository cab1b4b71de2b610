#pragma once

#include "toric/cone.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

/// A finite set of cones; quasi-fans are kept face-closed.
using ConeSet = std::set<Cone>;

ConeSet face_closure(const std::vector<Cone>& cones);
ConeSet face_closure(const ConeSet& cones);
/// Elements not properly contained in another element (as faces).
std::vector<Cone> maximal_cones(const ConeSet& cones);
/// The unique inclusion-minimal element, if there is one.
std::optional<Cone> minimal_cone(const ConeSet& cones);

class InvalidSystem : public std::invalid_argument {
 public:
  explicit InvalidSystem(const std::string& what) : std::invalid_argument(what) {}
};

struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;  // 0-based charts
  std::string detail;

  std::string to_string() const;
};

/// Family (Delta_ij) of quasi-fans indexed by 0..size()-1.
class SystemOfFans {
 public:
  SystemOfFans() = default;

  /// Full family, symmetric or not; validate() reports asymmetry.
  static SystemOfFans from_family(std::size_t rank, std::vector<std::vector<ConeSet>> delta);
  /// Diagonal plus off-diagonal entries for i < j; missing pairs get the
  /// common minimal cone of the diagonal.
  static SystemOfFans from_upper(std::size_t rank, std::vector<ConeSet> diagonal,
                                 const std::map<std::pair<std::size_t, std::size_t>, ConeSet>& glueing);
  /// Affine system: chart i is the face set of charts[i]; glueing entries
  /// are given by their generating cones and face-closed here.
  static SystemOfFans affine(std::size_t rank, const std::vector<Cone>& charts,
                             const std::map<std::pair<std::size_t, std::size_t>, std::vector<Cone>>& glueing);
  /// A single fan given by generating cones.
  static SystemOfFans single_fan(std::size_t rank, const std::vector<Cone>& cones);

  enum class Glueing { common_proper_faces, trivial, full_fan };
  /// One affine chart per cone with the given glueing pattern; full_fan
  /// requires the cones to be the maximal cones of a fan.
  static SystemOfFans from_cones(std::size_t rank, const std::vector<Cone>& cones, Glueing mode);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return delta_.size(); }
  const ConeSet& delta(std::size_t i, std::size_t j) const { return delta_.at(i).at(j); }

  /// Every Delta_ii has a unique maximal cone.
  bool is_affine() const;
  /// The maximal cone of Delta_ii; throws InvalidSystem if not affine there.
  const Cone& chart_cone(std::size_t i) const;
  /// All cones strictly convex.
  bool is_fan_system() const;
  /// The minimal cone of Delta_00 (zero cone for an empty system).
  Cone minimal() const;

  std::string to_string() const;

  friend bool operator==(const SystemOfFans&, const SystemOfFans&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::vector<ConeSet>> delta_;
};

/// Empty iff S is a system of (quasi-)fans.
std::vector<Violation> validate(const SystemOfFans& s);
void require_valid(const SystemOfFans& s);

struct OrbitClass {
  Cone cone;
  std::vector<std::size_t> charts;  // sorted, 0-based
};

/// Omega(S): classes sorted by (dim, cone, smallest chart), with the order
/// [tau,j] < [sigma,i] iff tau is a face of sigma and [tau,i] == [tau,j].
class OrbitClassTable {
 public:
  explicit OrbitClassTable(const SystemOfFans& s);

  std::size_t size() const { return classes_.size(); }
  const std::vector<OrbitClass>& classes() const { return classes_; }
  const OrbitClass& at(std::size_t c) const { return classes_.at(c); }
  /// Throws std::out_of_range for unknown labelled cones.
  std::size_t class_of(const Cone& cone, std::size_t chart) const;
  std::optional<std::size_t> find(const Cone& cone, std::size_t chart) const;

  /// Reflexive order.
  bool precedes(std::size_t a, std::size_t b) const { return below_.at(b).count(a) > 0; }
  /// Downward closure of c, sorted.
  std::vector<std::size_t> down_closure(std::size_t c) const;
  std::vector<std::size_t> maximal() const;
  /// (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  std::vector<OrbitClass> classes_;
  std::map<std::pair<Cone, std::size_t>, std::size_t> lookup_;
  std::vector<std::set<std::size_t>> below_;
};

OrbitClassTable orbit_classes(const SystemOfFans& s);
std::vector<std::size_t> chart_classes(const SystemOfFans& s, std::size_t c);

struct AffineSystem {
  SystemOfFans system;
  /// chart m of the new system is the class chart_class[m] of the input.
  std::vector<std::size_t> chart_class;
  /// class of the new system -> class of the input
  std::vector<std::size_t> class_map;
};

AffineSystem to_affine_system(const SystemOfFans& s);

bool is_affine_intersection(const SystemOfFans& s);
bool is_separated(const SystemOfFans& s);

struct IrredundantSystem {
  SystemOfFans system;
  std::vector<std::size_t> kept;  // old chart of each new chart
};

/// Drops chart j whenever some other surviving chart i has Delta_ij ==
/// Delta_jj; the smallest index of a group of duplicates survives.
IrredundantSystem make_irredundant(const SystemOfFans& s);
bool is_irredundant(const SystemOfFans& s);

/// Applies a lattice map to every cone (for a unimodular change of basis).
SystemOfFans transport(const LatticeMap& a, const SystemOfFans& s);

/// Equal up to a permutation of the charts; on success returns the
/// permutation p with a.delta(i,j) == b.delta(p[i],p[j]).
std::optional<std::vector<std::size_t>> isomorphism(const SystemOfFans& a, const SystemOfFans& b);

}  // namespace toric
