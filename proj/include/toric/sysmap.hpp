#pragma once

#include "toric/sysfan.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

class NoTargetCone : public std::invalid_argument {
 public:
  NoTargetCone(Cone cone, std::size_t chart)
      : std::invalid_argument("no target cone for " + cone.to_string() + " in chart " + std::to_string(chart + 1)),
        cone(std::move(cone)),
        chart(chart) {}
  Cone cone;
  std::size_t chart;
};

/// Condition (*) fails: F(cone) lies in no cone of the target glueing
/// Delta'_{mu(i) mu(j)}.
class IndexMapError : public std::invalid_argument {
 public:
  IndexMapError(std::size_t i, std::size_t j, Cone cone)
      : std::invalid_argument("no map: image of " + cone.to_string() + " from D" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + " lies in no cone of the target glueing"),
        i(i),
        j(j),
        cone(std::move(cone)) {}
  std::size_t i, j;
  Cone cone;
};

class InvalidMap : public std::invalid_argument {
 public:
  explicit InvalidMap(const std::string& what) : std::invalid_argument(what) {}
};

/// (F, f): class_map[c] is the image in orbit_classes(target) of the class
/// c of orbit_classes(source).
struct SystemMap {
  LatticeMap f;
  SystemOfFans source;
  SystemOfFans target;
  std::vector<std::size_t> class_map;
};

SystemMap identity_map(const SystemOfFans& s);

/// target must consist of a single chart.
SystemMap map_to_fan(const LatticeMap& f, const SystemOfFans& s, const SystemOfFans& target);

/// The map induced by F and an index map mu : I -> I'.
SystemMap induced_from_index_map(const LatticeMap& f, const std::vector<std::size_t>& mu, const SystemOfFans& s,
                                 const SystemOfFans& target);

/// Empty iff m is a map of systems of fans.
std::vector<std::string> validate_map(const SystemMap& m);

struct FiberComponent {
  std::size_t source_class;
  Sublattice stabilizer_pullback;
};

struct FiberDescription {
  std::size_t target_class;
  std::vector<FiberComponent> components;
};

FiberDescription fiber(const SystemMap& m, std::size_t target_class);

bool is_affine_map(const SystemMap& m);
bool is_surjective(const SystemMap& m);

/// second after first.
SystemMap compose(const SystemMap& second, const SystemMap& first);

}  // namespace toric
