#include "toric/sysmap.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

void require_lattice(const LatticeMap& f, const SystemOfFans& s, const SystemOfFans& t) {
  if (f.source_rank() != s.rank() || f.target_rank() != t.rank())
    throw RankMismatch("lattice map " + std::to_string(f.target_rank()) + "x" + std::to_string(f.source_rank()) +
                       " does not fit systems of rank " + std::to_string(s.rank()) + " and " +
                       std::to_string(t.rank()));
}

// F(sigma) inside sigma' and F of a relint point in the relint of sigma'.
bool maps_interior(const LatticeMap& f, const Cone& sigma, const Cone& sigma_prime) {
  return sigma_prime.contains(image(f, sigma)) && sigma_prime.relint_contains(f(sigma.relint_point()));
}

}  // namespace

SystemMap identity_map(const SystemOfFans& s) {
  OrbitClassTable t = orbit_classes(s);
  SystemMap m{LatticeMap::identity(s.rank()), s, s, {}};
  for (std::size_t c = 0; c < t.size(); ++c) m.class_map.push_back(c);
  return m;
}

SystemMap map_to_fan(const LatticeMap& f, const SystemOfFans& s, const SystemOfFans& target) {
  require_lattice(f, s, target);
  if (target.size() != 1) throw InvalidSystem("map_to_fan needs a single-fan target");
  OrbitClassTable src = orbit_classes(s);
  OrbitClassTable dst = orbit_classes(target);
  SystemMap m{f, s, target, {}};
  for (const auto& c : src.classes()) {
    IntVector x = f(c.cone.relint_point());
    Cone img = image(f, c.cone);
    std::optional<std::size_t> hit;
    for (const auto& tau : target.delta(0, 0))
      if (tau.relint_contains(x)) {
        if (tau.contains(img)) hit = dst.class_of(tau, 0);
        break;
      }
    if (!hit) throw NoTargetCone(c.cone, c.charts.front());
    m.class_map.push_back(*hit);
  }
  return m;
}

SystemMap induced_from_index_map(const LatticeMap& f, const std::vector<std::size_t>& mu, const SystemOfFans& s,
                                 const SystemOfFans& target) {
  require_lattice(f, s, target);
  if (mu.size() != s.size()) throw InvalidMap("index map has the wrong length");
  for (auto i : mu)
    if (i >= target.size()) throw InvalidMap("index map points outside the target index set");

  auto enclosing = [&](const Cone& sigma, std::size_t a, std::size_t b) -> std::optional<Cone> {
    Cone img = image(f, sigma);
    for (const auto& c : maximal_cones(target.delta(a, b)))
      if (c.contains(img)) return c;
    return std::nullopt;
  };
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      for (const auto& sigma : maximal_cones(s.delta(i, j)))
        if (!enclosing(sigma, mu[i], mu[j])) throw IndexMapError(i, j, sigma);

  OrbitClassTable src = orbit_classes(s);
  OrbitClassTable dst = orbit_classes(target);
  SystemMap m{f, s, target, {}};
  for (const auto& c : src.classes()) {
    std::size_t i = c.charts.front();
    Cone outer = *enclosing(c.cone, mu[i], mu[i]);
    Cone inner = face_containing(outer, f(c.cone.relint_point()));
    m.class_map.push_back(dst.class_of(inner, mu[i]));
  }
  return m;
}

std::vector<std::string> validate_map(const SystemMap& m) {
  std::vector<std::string> out;
  if (m.f.source_rank() != m.source.rank() || m.f.target_rank() != m.target.rank()) {
    out.push_back("lattice map ranks do not match the systems");
    return out;
  }
  OrbitClassTable src = orbit_classes(m.source);
  OrbitClassTable dst = orbit_classes(m.target);
  if (m.class_map.size() != src.size()) {
    out.push_back("class map has " + std::to_string(m.class_map.size()) + " entries for " +
                  std::to_string(src.size()) + " classes");
    return out;
  }
  for (auto c : m.class_map)
    if (c >= dst.size()) {
      out.push_back("class map points outside the target classes");
      return out;
    }
  for (std::size_t b = 0; b < src.size(); ++b)
    for (auto a : src.down_closure(b))
      if (!dst.precedes(m.class_map[a], m.class_map[b]))
        out.push_back("order: class " + std::to_string(a) + " < " + std::to_string(b) + " but images " +
                      std::to_string(m.class_map[a]) + ", " + std::to_string(m.class_map[b]) + " are not ordered");
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Cone& sigma = src.at(c).cone;
    const Cone& sigma_prime = dst.at(m.class_map[c]).cone;
    if (!maps_interior(m.f, sigma, sigma_prime))
      out.push_back("interior: relative interior of " + sigma.to_string() + " (class " + std::to_string(c) +
                    ") does not map into that of " + sigma_prime.to_string());
  }
  return out;
}

FiberDescription fiber(const SystemMap& m, std::size_t target_class) {
  OrbitClassTable dst = orbit_classes(m.target);
  if (target_class >= dst.size()) throw std::out_of_range("unknown target class " + std::to_string(target_class));
  Sublattice stab = preimage(m.f, dst.at(target_class).cone.span());
  FiberDescription out{target_class, {}};
  for (std::size_t c = 0; c < m.class_map.size(); ++c)
    if (m.class_map[c] == target_class) out.components.push_back({c, stab});
  return out;
}

bool is_affine_map(const SystemMap& m) {
  if (!m.target.is_affine()) throw InvalidSystem("is_affine_map needs an affine target");
  OrbitClassTable src = orbit_classes(m.source);
  OrbitClassTable dst = orbit_classes(m.target);
  for (std::size_t i = 0; i < m.target.size(); ++i) {
    std::size_t top = dst.class_of(m.target.chart_cone(i), i);
    std::vector<std::size_t> r;
    for (std::size_t c = 0; c < src.size(); ++c)
      if (dst.precedes(m.class_map[c], top)) r.push_back(c);
    std::size_t maxima = 0;
    for (auto a : r) {
      bool top_a = std::none_of(r.begin(), r.end(), [&](std::size_t b) { return b != a && src.precedes(a, b); });
      maxima += top_a;
    }
    if (maxima != 1) return false;
  }
  return true;
}

bool is_surjective(const SystemMap& m) {
  if (rank(m.f.matrix()) != m.f.target_rank()) return false;
  std::set<std::size_t> hit(m.class_map.begin(), m.class_map.end());
  return hit.size() == orbit_classes(m.target).size();
}

SystemMap compose(const SystemMap& second, const SystemMap& first) {
  if (!(first.target == second.source)) throw InvalidMap("compose: systems do not match");
  SystemMap m{compose(second.f, first.f), first.source, second.target, {}};
  for (auto c : first.class_map) m.class_map.push_back(second.class_map.at(c));
  auto problems = validate_map(m);
  if (!problems.empty()) throw InvalidMap("composition is not a map: " + problems.front());
  return m;
}

}  // namespace toric
