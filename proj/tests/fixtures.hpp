#pragma once

#include "support.hpp"
#include "toric/sysfan.hpp"

#include <map>
#include <utility>
#include <vector>

// Systems used across the unit and acceptance tests.
namespace toric::testing {

using Glue = std::map<std::pair<std::size_t, std::size_t>, std::vector<Cone>>;

/// Two copies of the ray in Z glued along {0}.
inline SystemOfFans doubled_line() {
  Cone ray = cone(1, {{1}});
  return SystemOfFans::affine(1, {ray, ray}, {{{0, 1}, {Cone::zero(1)}}});
}

/// Two P1 fans glued along {0}.
inline SystemOfFans doubled_p1() {
  ConeSet p1 = face_closure(std::vector<Cone>{cone(1, {{1}}), cone(1, {{-1}})});
  return SystemOfFans::from_upper(1, {p1, p1}, {{{0, 1}, ConeSet{Cone::zero(1)}}});
}

/// Same space with one chart per ray: four charts, all glued along {0}.
inline SystemOfFans doubled_p1_affine() {
  Cone pos = cone(1, {{1}});
  Cone neg = cone(1, {{-1}});
  return SystemOfFans::affine(1, {pos, pos, neg, neg}, {});
}

/// A fan in Z^3 with two maximal cones.
inline SystemOfFans no_map_source() {
  return SystemOfFans::single_fan(3, {cone(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}),
                                      cone(3, {{0, 1, 0}, {1, 1, 1}, {-1, 1, 1}})});
}

inline LatticeMap no_map_projection() { return matrix(3, {{1, 0, 0}, {0, 1, 0}}); }

/// Images of the two maximal cones of no_map_source as separate charts,
/// glued along {0}.
inline SystemOfFans no_map_target() {
  SystemOfFans s = no_map_source();
  auto tops = maximal_cones(s.delta(0, 0));
  LatticeMap f = no_map_projection();
  return SystemOfFans::affine(2, {image(f, tops[0]), image(f, tops[1])}, {});
}

/// cone(e1,e2) and cone(e1+e2,e3) in Z^3 glued along {0}.
inline SystemOfFans skew_planes() {
  return SystemOfFans::affine(3, {cone(3, {{1, 0, 0}, {0, 1, 0}}), cone(3, {{1, 1, 0}, {0, 0, 1}})}, {});
}

/// The two coordinate rays of Z^2 glued along {0}.
inline SystemOfFans punctured_plane() {
  return SystemOfFans::affine(2, {cone(2, {{1, 0}}), cone(2, {{0, 1}})}, {});
}

/// cone(e1..e4) and cone(e1,e4,e5,e6) in Z^6 glued along their intersection.
inline SystemOfFans six_dim_pair() {
  Cone a = cone(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
  Cone b = cone(6, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
  return SystemOfFans::affine(6, {a, b}, {{{0, 1}, {intersect(a, b)}}});
}

/// Columns e1, e1+e3, -e2, e1-e3, e2, e1+e3.
inline LatticeMap six_dim_projection() {
  return matrix(6, {{1, 1, 0, 1, 0, 1}, {0, 0, -1, 0, 1, 0}, {0, 1, 0, -1, 0, 1}});
}

/// cone(e1..e4) and cone(e3,e4,e5) in Z^5 with maximal glueing.
inline SystemOfFans five_dim_pair() {
  Cone a = cone(5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});
  Cone b = cone(5, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  return SystemOfFans::affine(5, {a, b}, {{{0, 1}, {intersect(a, b)}}});
}

/// Columns e1+e2, e3, e1, e2, -e3.
inline LatticeMap five_dim_projection() {
  return matrix(5, {{1, 0, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 1, 0, 0, -1}});
}

/// Three charts in Z^7; charts 1,2 and 2,3 share a two-dimensional face,
/// charts 1 and 3 only {0}.
inline SystemOfFans seven_dim_chain() {
  auto e = [](std::size_t k) {
    IntVector v(7, Integer(0));
    v[k - 1] = 1;
    return v;
  };
  Cone a = Cone::from_generators(7, {e(1), e(2), e(3)});
  Cone b = Cone::from_generators(7, {e(2), e(3), e(4), e(5)});
  Cone c = Cone::from_generators(7, {e(4), e(5), e(6), e(7)});
  return SystemOfFans::affine(7, {a, b, c}, {{{0, 1}, {intersect(a, b)}}, {{1, 2}, {intersect(b, c)}}});
}

/// Columns v1..v7 = (-1,0,1), (0,1,1), (0,0,1), (1,0,1), (2,0,1), (3,0,1),
/// (0,-1,1).
inline LatticeMap seven_dim_projection() {
  return matrix(7, {{-1, 0, 0, 1, 2, 3, 0}, {0, 1, 0, 0, 0, 0, -1}, {1, 1, 1, 1, 1, 1, 1}});
}

/// Two copies of cone(e1,e2) glued along both coordinate rays.
inline SystemOfFans doubled_origin_plane() {
  Cone q = cone(2, {{1, 0}, {0, 1}});
  return SystemOfFans::affine(2, {q, q}, {{{0, 1}, {cone(2, {{1, 0}}), cone(2, {{0, 1}})}}});
}

}  // namespace toric::testing
