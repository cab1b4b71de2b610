#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace toric;
using namespace toric::testing;

namespace {

// g is a nonnegative rational combination of `others`: brute force over
// subsets of size <= rank (Caratheodory), solving each square-or-tall system.
bool in_cone_brute_force(const IntVector& g, const std::vector<IntVector>& others) {
  const std::size_t n = g.size();
  const std::size_t m = others.size();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < m; ++k)
      if (mask & (1u << k)) idx.push_back(k);
    if (idx.size() > n) continue;
    std::vector<RatVector> a(n, RatVector(idx.size()));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) a[r][c] = Rational(others[idx[c]][r]);
    auto x = solve_rational(a, to_rational(g));
    if (!x) continue;
    bool ok = true;
    for (const auto& v : *x) ok = ok && v >= 0;
    if (ok) return true;
  }
  return false;
}

// Relints meet iff the smallest faces of sigma and tau containing a relint
// point of the intersection are sigma and tau themselves.
bool relint_meets_by_faces(const Cone& sigma, const Cone& tau) {
  Cone meet = intersect(sigma, tau);
  IntVector x = meet.relint_point();
  return face_containing(sigma, x) == sigma && face_containing(tau, x) == tau;
}

}  // namespace

TEST_CASE("cone_from_generators") {
  SUBCASE("non-primitive generators") {
    Cone c = cone(2, {{2, 0}, {0, 3}});
    CHECK(c.rays() == ivs({{0, 1}, {1, 0}}));
    CHECK(c.facets() == ivs({{0, 1}, {1, 0}}));
    CHECK(c.dim() == 2);
    CHECK(face_list(c).size() == 4);
  }
  SUBCASE("half-plane") {
    Cone c = cone(2, {{1, 0}, {-1, 0}, {0, 1}});
    CHECK(c.lineality() == span(2, {{1, 0}}));
    CHECK(c.rays() == ivs({{0, 1}}));
    CHECK(c.facets() == ivs({{0, 1}}));
    CHECK_FALSE(c.is_pointed());
  }
  SUBCASE("union of generators from the no-map example") {
    // (1,1,1) = 2 e1 + (-1,1,1), so only three generators are extreme.
    auto gens = ivs({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {-1, 1, 1}});
    Cone c = Cone::from_generators(3, gens);
    std::vector<IntVector> extreme;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::vector<IntVector> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != k) others.push_back(gens[j]);
      if (!in_cone_brute_force(gens[k], others)) extreme.push_back(gens[k]);
    }
    std::sort(extreme.begin(), extreme.end());
    CHECK(extreme.size() == 3);
    CHECK(c.rays() == extreme);
  }
  SUBCASE("redundant generators are dropped") {
    Cone c = cone(2, {{1, 0}, {1, 1}, {0, 1}, {2, 1}});
    CHECK(c.rays() == ivs({{0, 1}, {1, 0}}));
  }
  SUBCASE("zero and full cones") {
    Cone z = Cone::zero(3);
    CHECK(z.is_zero());
    CHECK(z.rays().empty());
    CHECK(z.equations().size() == 3);
    CHECK(face_list(z).size() == 1);
    Cone f = Cone::full(3);
    CHECK(f.dim() == 3);
    CHECK(f.facets().empty());
    CHECK(f.lineality() == Sublattice::full(3));
    CHECK(face_list(f).size() == 1);
    CHECK(f.contains(iv({-5, 2, 7})));
    CHECK(f.relint_contains(iv({0, 0, 0})));
    CHECK(z.relint_contains(iv({0, 0, 0})));
    CHECK(Cone::zero(0) == Cone::full(0));
  }
  SUBCASE("rank mismatch") {
    CHECK_THROWS_AS(Cone::from_generators(2, ivs({{1, 0, 0}})), RankMismatch);
  }
}

TEST_CASE("faces and is_face") {
  CHECK(face_list(cone(2, {{1, 0}, {0, 1}})).size() == 4);

  SUBCASE("octant: enumerate subsets of the three coordinate facets") {
    Cone c = cone(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    std::set<Cone> oracle;
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::vector<IntVector> gens;
      for (std::size_t k = 0; k < 3; ++k)
        if (!(mask & (1u << k))) gens.push_back(unit_vector(3, k));
      oracle.insert(Cone::from_generators(3, gens));
    }
    auto lattice = faces(c);
    CHECK(lattice.faces.size() == 8);
    CHECK(std::set<Cone>(lattice.faces.begin(), lattice.faces.end()) == oracle);
    CHECK(lattice.faces.front().is_zero());
    CHECK(lattice.faces.back() == c);
    CHECK(lattice.covers.size() == 12);
  }
  SUBCASE("half-plane has the line and itself") {
    Cone c = cone(2, {{1, 0}, {-1, 0}, {0, 1}});
    auto f = face_list(c);
    CHECK(f.size() == 2);
    CHECK(f.front() == cone(2, {{1, 0}, {-1, 0}}));
    CHECK_FALSE(is_face(cone(2, {{1, 0}}), c));
    CHECK(is_face(cone(2, {{1, 0}, {-1, 0}}), c));
  }
  SUBCASE("non-faces") {
    Cone c = cone(2, {{1, 0}, {0, 1}});
    CHECK_FALSE(is_face(cone(2, {{1, 1}}), c));
    CHECK_FALSE(is_face(cone(2, {{-1, 0}}), c));
    CHECK(is_face(Cone::zero(2), c));
    CHECK_THROWS_AS(is_face(Cone::zero(3), c), RankMismatch);
  }
  SUBCASE("every face is cut out by a supporting normal") {
    Cone c = cone(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
    auto f = face_list(c);
    CHECK(f.size() == 10);
    for (const auto& face : f) {
      if (face == c) continue;
      IntVector u(3, Integer(0));
      for (const auto& n : c.facets())
        if (std::all_of(face.rays().begin(), face.rays().end(), [&](const IntVector& r) { return dot(n, r) == 0; }))
          u = add(u, n);
      for (const auto& r : c.rays()) CHECK((dot(u, r) == 0) == face.contains(r));
    }
  }
}

TEST_CASE("simplicial cones have 2^d faces") {
  std::mt19937_64 rng(3);
  for (std::size_t d = 1; d <= 5; ++d) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<IntVector> gens;
      do {
        gens.clear();
        for (std::size_t k = 0; k < d; ++k) gens.push_back(random_vector(rng, d + trial % 2, 3));
      } while (rank(d + trial % 2, gens) != d);
      CHECK(face_list(Cone::from_generators(d + trial % 2, gens)).size() == (std::size_t{1} << d));
    }
  }
}

TEST_CASE("relative interiors") {
  Cone quadrant = cone(2, {{1, 0}, {0, 1}});
  CHECK(quadrant.relint_contains(iv({1, 1})));
  CHECK_FALSE(quadrant.relint_contains(iv({1, 0})));
  Cone ray = cone(2, {{1, 0}});
  Cone wedge = cone(2, {{1, -1}, {1, 1}});
  CHECK(wedge.relint_contains(iv({1, 0})));
  CHECK(relint_meets(ray, wedge));
  CHECK_FALSE(relint_meets(quadrant, cone(2, {{-1, 0}, {0, -1}})));
  CHECK_FALSE(relint_meets(ray, cone(2, {{0, 1}})));
  CHECK(relint_meets(Cone::zero(2), Cone::full(2)));
  CHECK_FALSE(relint_meets(Cone::zero(2), quadrant));
}

TEST_CASE("relint_meets agrees with the face-based decision") {
  std::mt19937_64 rng(5);
  int positives = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 2 + trial % 3;
    Cone a = random_cone(rng, n, 1 + trial % 4);
    Cone b = random_cone(rng, n, 1 + (trial / 3) % 4);
    bool meets = relint_meets(a, b);
    CHECK(meets == relint_meets_by_faces(a, b));
    positives += meets;
  }
  CHECK(positives > 10);
}

TEST_CASE("hull_union and intersect") {
  CHECK(hull_union(cone(2, {{1, 0}}), cone(2, {{0, 1}})) == cone(2, {{1, 0}, {0, 1}}));
  CHECK(intersect(cone(2, {{1, 0}, {0, 1}}), cone(2, {{1, 0}, {0, -1}})) == cone(2, {{1, 0}}));
  CHECK(intersect(cone(2, {{1, 0}}), cone(2, {{0, 1}})) == Cone::zero(2));
  CHECK(intersect(Cone::full(2), cone(2, {{1, 2}})) == cone(2, {{1, 2}}));

  // Interior points of tau stay interior in the hull.
  Cone rho = cone(2, {{1, -1}, {1, 1}});
  Cone tau = cone(2, {{1, 0}});
  CHECK(rho.relint_contains(iv({1, 0})));
  Cone sigma = hull_union(tau, rho);
  CHECK(sigma.relint_contains(tau.relint_point()));
}

TEST_CASE("double description round trip") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 1 + trial % 5;
    Cone c = random_cone(rng, n, trial % 7);
    CHECK(Cone::from_inequalities(n, c.facets(), c.equations()) == c);
    CHECK(Cone::from_generators(n, c.generators()) == c);
    for (const auto& g : c.generators())
      for (const auto& u : c.facets()) CHECK(dot(u, g) >= 0);
    // lineality is exactly sigma cap -sigma
    for (const auto& b : c.lineality().basis()) CHECK(c.contains(negate(b)));
    for (const auto& r : c.rays()) CHECK_FALSE(c.contains(negate(r)));
  }
}

TEST_CASE("interior points survive hull_union on random pairs") {
  std::mt19937_64 rng(23);
  int instances = 0;
  for (int trial = 0; trial < 400 && instances < 60; ++trial) {
    std::size_t n = 2 + trial % 2;
    Cone rho = random_cone(rng, n, 1 + trial % 3);
    Cone tau = random_cone(rng, n, 1 + (trial / 2) % 3);
    bool hit = false;
    for (const auto& f : face_list(tau)) hit = hit || relint_meets(rho, f);
    if (!hit) continue;
    ++instances;
    Cone sigma = hull_union(tau, rho);
    for (int k = 0; k < 4; ++k) CHECK(sigma.relint_contains(random_relint_point(rng, tau)));
  }
  CHECK(instances >= 30);
}

TEST_CASE("image and preimage_intersect") {
  auto p1 = matrix(6, {{1, 1, 0, 1, 0, 1}, {0, 0, -1, 0, 1, 0}, {0, 1, 0, -1, 0, 1}});
  Cone sigma1 = cone(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
  Cone p_sigma = image(p1, sigma1);
  CHECK(p_sigma == cone(3, {{1, 0, 1}, {0, -1, 0}, {1, 0, -1}}));

  Cone tau = cone(6, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
  CHECK(is_face(tau, sigma1));
  Cone p_tau = image(p1, tau);
  CHECK(p_tau == cone(3, {{1, 0, 0}, {1, 0, -1}}));
  CHECK_FALSE(is_face(p_tau, p_sigma));

  Cone a = cone(2, {{1, 0}, {1, 1}});
  Cone b = cone(2, {{1, 0}, {0, 1}});
  CHECK(preimage_intersect(LatticeMap::identity(2), a, b) == intersect(a, b));

  // pullback of a ray under a projection
  auto pr = matrix(2, {{1, 1}});
  CHECK(preimage_intersect(pr, Cone::zero(1), b) == Cone::zero(2));
  CHECK(preimage_intersect(pr, cone(1, {{1}}), Cone::full(2)) == cone(2, {{1, 0}, {-1, 1}, {1, -1}}));
  CHECK_THROWS_AS(image(pr, Cone::zero(3)), RankMismatch);
}

TEST_CASE("smallest_face_containing") {
  Cone quadrant = cone(2, {{1, 0}, {0, 1}});
  auto a = smallest_face_containing(quadrant, span(2, {{1, -1}}));
  CHECK(a.face == Cone::zero(2));
  CHECK(a.w_hat == span(2, {{1, -1}}));
  auto b = smallest_face_containing(quadrant, span(2, {{1, 0}}));
  CHECK(b.face == cone(2, {{1, 0}}));
  CHECK(b.w_hat == span(2, {{1, 0}}));
  auto c = smallest_face_containing(quadrant, span(2, {{1, 1}}));
  CHECK(c.face == quadrant);
  CHECK(c.w_hat == Sublattice::full(2));
  CHECK(smallest_face_containing(quadrant, Sublattice::zero(2)).face == Cone::zero(2));
}

TEST_CASE("face projection conditions") {
  SUBCASE("L = 0") {
    Cone c = cone(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}});
    for (const auto& t : face_list(c)) CHECK(face_projection_check(c, t, Sublattice::zero(3)));
  }
  SUBCASE("ray projected along itself") {
    Cone ray = cone(2, {{1, 0}});
    CHECK_FALSE(face_projection_check(ray, Cone::zero(2), span(2, {{1, 0}})));
    CHECK(face_projection_check(ray, ray, span(2, {{1, 0}})));
  }
  SUBCASE("six-dimensional example with its explicit projection") {
    auto p1 = matrix(6, {{1, 1, 0, 1, 0, 1}, {0, 0, -1, 0, 1, 0}, {0, 1, 0, -1, 0, 1}});
    Cone sigma1 = cone(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
    Cone tau = cone(6, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
    CHECK_FALSE(face_projection_check(sigma1, tau, p1));
    CHECK_FALSE(face_projection_check(sigma1, tau, kernel(p1)));
    CHECK_FALSE(projection_condition_sum(sigma1, tau, kernel(p1)));
    CHECK_FALSE(projection_condition_saturated(sigma1, tau, kernel(p1)));
  }
  SUBCASE("tau must be a face") {
    Cone c = cone(2, {{1, 0}, {0, 1}});
    CHECK_THROWS_AS(face_projection_check(c, cone(2, {{1, 1}}), Sublattice::zero(2)), NotAFace);
  }
}

TEST_CASE("projection bijection when L lies in the lineality space") {
  std::mt19937_64 rng(29);
  int instances = 0;
  for (int trial = 0; trial < 200 && instances < 40; ++trial) {
    std::size_t n = 2 + trial % 3;
    Cone sigma = random_cone(rng, n, 2 + trial % 5);
    if (sigma.is_pointed()) continue;
    ++instances;
    const auto& lb = sigma.lineality().basis();
    Sublattice l = saturate(n, {lb[trial % lb.size()]});
    auto p = quotient_projection(n, l).projection;
    Cone p_sigma = image(p, sigma);
    auto f = face_list(sigma);
    auto pf = face_list(p_sigma);
    CHECK(f.size() == pf.size());
    for (const auto& t : f) CHECK(preimage_intersect(p, image(p, t), sigma) == t);
    for (const auto& t : pf) CHECK(image(p, preimage_intersect(p, t, sigma)) == t);
  }
  CHECK(instances >= 20);
}

TEST_CASE("the three projection conditions agree on random triples") {
  std::mt19937_64 rng(31);
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 2 + trial % 3;
    Cone sigma = random_cone(rng, n, 2 + trial % 3);
    auto f = face_list(sigma);
    const Cone& tau = f[trial % f.size()];
    std::vector<IntVector> lg;
    for (int k = 0; k < 1 + trial % 2; ++k) lg.push_back(random_vector(rng, n, 2));
    Sublattice l = saturate(n, lg);
    bool i = projection_condition_sum(sigma, tau, l);
    bool ii = projection_condition_projected(sigma, tau, l);
    bool iii = projection_condition_saturated(sigma, tau, l);
    CHECK(i == ii);
    CHECK(ii == iii);
    (ii ? positives : negatives)++;
  }
  CHECK(positives > 10);
  CHECK(negatives > 10);
}
