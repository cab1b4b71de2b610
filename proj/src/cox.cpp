#include "toric/cox.hpp"

#include <map>

namespace toric {

namespace {

void require_presentable(const SystemOfFans& s) {
  require_valid(s);
  if (!s.is_affine()) throw InvalidSystem("a presentation needs an affine system");
  if (!s.is_fan_system()) throw InvalidSystem("a presentation needs strictly convex cones");
}

// Q = [id_N | v_1 ... v_s].
LatticeMap presentation_map(std::size_t n, const std::vector<AuxiliaryCoordinate>& coords) {
  std::vector<IntVector> cols;
  for (std::size_t k = 0; k < n; ++k) cols.push_back(unit_vector(n, k));
  for (const auto& c : coords) cols.push_back(c.ray.rays().front());
  return LatticeMap(IntMatrix::from_columns(n, cols));
}

Cone coordinate_cone(std::size_t rank, std::size_t offset, const std::vector<std::size_t>& slots) {
  std::vector<IntVector> gens;
  for (auto k : slots) gens.push_back(unit_vector(rank, offset + k));
  if (gens.empty()) return Cone::zero(rank);
  return Cone::from_generators(rank, gens);
}

std::vector<Cone> rays_of(const Cone& c) {
  std::vector<Cone> out;
  for (const auto& f : face_list(c))
    if (f.dim() == 1) out.push_back(f);
  return out;
}

void finish(Presentation& p, const SystemOfFans& s, const std::vector<Cone>& cones) {
  const std::size_t rank = s.rank() + p.coordinates.size();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Cone>> glue;
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b) glue[{a, b}] = {intersect(cones[a], cones[b])};
  p.ambient = SystemOfFans::affine(rank, cones, glue);
  p.ambient_fan = SystemOfFans::single_fan(rank, cones);
  LatticeMap q = presentation_map(s.rank(), p.coordinates);
  p.h = kernel(q);
  p.q = induced_from_index_map(q, p.mu, p.ambient, s);
}

}  // namespace

Presentation categorical_presentation(const SystemOfFans& s) {
  require_presentable(s);
  if (!is_irredundant(s)) throw InvalidSystem("the categorical presentation needs an irredundant system");
  Presentation p;
  p.kind = Presentation::Kind::categorical;

  std::map<std::pair<Cone, std::size_t>, std::size_t> slot;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const auto& r : rays_of(s.chart_cone(i))) {
      slot[{r, i}] = p.coordinates.size();
      p.coordinates.push_back({r, i});
    }
  const std::size_t rank = s.rank() + p.coordinates.size();

  std::vector<Cone> cones;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      for (const auto& tau : maximal_cones(s.delta(i, j))) {
        std::vector<std::size_t> slots;
        for (const auto& r : rays_of(tau)) {
          slots.push_back(slot.at({r, i}));
          if (j != i) slots.push_back(slot.at({r, j}));
        }
        cones.push_back(coordinate_cone(rank, s.rank(), slots));
        p.index.push_back({tau, i, j});
        p.mu.push_back(i);
      }
  finish(p, s, cones);
  return p;
}

Presentation good_presentation(const SystemOfFans& s) {
  require_presentable(s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (maximal_cones(s.delta(i, j)).size() != 1)
        throw NotAffineIntersection("charts " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                    " do not intersect in a single cone");
  Presentation p;
  p.kind = Presentation::Kind::good;

  OrbitClassTable t = orbit_classes(s);
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t c = 0; c < t.size(); ++c)
    if (t.at(c).cone.dim() == 1) {
      slot[c] = p.coordinates.size();
      p.coordinates.push_back({t.at(c).cone, t.at(c).charts.front()});
    }
  const std::size_t rank = s.rank() + p.coordinates.size();

  std::vector<Cone> cones;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<std::size_t> slots;
    for (const auto& r : rays_of(s.chart_cone(i))) slots.push_back(slot.at(t.class_of(r, i)));
    cones.push_back(coordinate_cone(rank, s.rank(), slots));
    p.mu.push_back(i);
  }
  finish(p, s, cones);
  return p;
}

std::string to_string(Presentation::Kind k) { return k == Presentation::Kind::good ? "good" : "categorical"; }

}  // namespace toric
