#include "doctest.h"
#include "support.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

// P^1 : Z^6 -> Z^3 from the six-dimensional good-prequotient counterexample.
LatticeMap example_6_10_projection() {
  return matrix(6, {{1, 1, 0, 1, 0, 1}, {0, 0, -1, 0, 1, 0}, {0, 1, 0, -1, 0, 1}});
}

}  // namespace

TEST_CASE("saturate") {
  SUBCASE("index-2 generator is saturated to the primitive vector") {
    CHECK(saturate(2, ivs({{2, 0}})).basis() == ivs({{1, 0}}));
  }
  SUBCASE("primitive generator is kept") {
    auto l = saturate(2, ivs({{1, -1}}));
    CHECK(l.basis() == ivs({{1, -1}}));
    CHECK(l.is_primitive());
  }
  SUBCASE("empty input gives the zero sublattice") {
    auto l = saturate(3, {});
    CHECK(l.rank() == 0);
    CHECK(l.ambient_rank() == 3);
  }
  SUBCASE("kernel generators of the six-dimensional projection") {
    auto k = kernel(example_6_10_projection());
    auto s = saturate(6, k.basis());
    CHECK(s.rank() == 3);
    CHECK(s == k);
  }
  SUBCASE("non-primitive lattice is detected") {
    auto l = Sublattice::generated_by(2, ivs({{2, 0}}));
    CHECK_FALSE(l.is_primitive());
    CHECK(l.contains(iv({4, 0})));
    CHECK_FALSE(l.contains(iv({1, 0})));
    CHECK(l.spans(iv({1, 0})));
  }
}

TEST_CASE("saturation contains every integral rational combination") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 4;
    std::vector<IntVector> gens;
    for (int k = 0; k < 1 + trial % 3; ++k) gens.push_back(random_vector(rng, n, 4));
    Sublattice s = saturate(n, gens);
    CHECK(s.is_primitive());
    for (const auto& g : gens) CHECK(s.contains(g));
    // Rational combinations with denominators cleared to a primitive vector.
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int k = 0; k < 5; ++k) {
      RatVector w(n, Rational(0));
      for (const auto& g : gens) {
        Rational c(coef(rng), 1 + (coef(rng) + 3));
        for (std::size_t i = 0; i < n; ++i) w[i] += c * Rational(g[i]);
      }
      IntVector p = primitive(w);
      CHECK(s.contains(p));
    }
  }
}

TEST_CASE("quotient_projection") {
  SUBCASE("anti-diagonal kernel gives x + y") {
    auto p = quotient_projection(2, saturate(2, ivs({{1, -1}})));
    CHECK(p.projection == matrix(2, {{1, 1}}));
  }
  SUBCASE("zero sublattice gives the identity") {
    auto p = quotient_projection(3, Sublattice::zero(3));
    CHECK(p.projection == LatticeMap::identity(3));
  }
  SUBCASE("first axis gives the second coordinate") {
    auto p = quotient_projection(2, saturate(2, ivs({{1, 0}})));
    CHECK(p.projection == matrix(2, {{0, 1}}));
  }
  SUBCASE("full lattice gives rank zero") {
    auto p = quotient_projection(2, Sublattice::full(2));
    CHECK(p.projection.target_rank() == 0);
    CHECK(p.projection.source_rank() == 2);
  }
  SUBCASE("non-primitive input is rejected") {
    CHECK_THROWS_AS(quotient_projection(2, Sublattice::generated_by(2, ivs({{2, 0}}))), NotPrimitive);
  }
}

TEST_CASE("projection properties on random primitive sublattices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 1 + trial % 5;
    std::vector<IntVector> gens;
    for (std::size_t k = 0; k < static_cast<std::size_t>(trial % (n + 1)); ++k)
      gens.push_back(random_vector(rng, n, 3));
    Sublattice l = saturate(n, gens);
    auto p = quotient_projection(n, l);
    CHECK(p.projection.target_rank() == n - l.rank());
    for (const auto& b : l.basis()) CHECK(is_zero(p.projection(b)));
    CHECK(p.projection.is_surjective());
    LatticeMap r = p.projection.right_inverse();
    CHECK(compose(p.projection, r) == LatticeMap::identity(n - l.rank()));
    CHECK(kernel(p.projection) == l);
  }
}

TEST_CASE("kernel and compose") {
  CHECK(kernel(matrix(2, {{1, 1}})).basis() == ivs({{1, -1}}));
  CHECK(kernel(LatticeMap::identity(3)).rank() == 0);

  auto p1 = example_6_10_projection();
  // rank(P^1) = 3 certified by a nonzero 3x3 minor (columns 1, 2, 3).
  std::vector<IntVector> minor;
  for (std::size_t r = 0; r < 3; ++r)
    minor.push_back({p1.matrix().at(r, 0), p1.matrix().at(r, 1), p1.matrix().at(r, 2)});
  CHECK(determinant(minor) != 0);
  CHECK(kernel(p1).rank() == 6 - 3);

  auto f = matrix(3, {{1, 0, 2}, {0, 1, 1}});
  auto g = matrix(2, {{1, 1}, {0, 1}, {2, 0}});
  CHECK(compose(f, g) == matrix(2, {{5, 1}, {2, 1}}));
  CHECK_THROWS_AS(compose(f, f), RankMismatch);
}

TEST_CASE("explicit projection and change of quotient basis") {
  auto p1 = LatticeProjection::from_map(example_6_10_projection());
  auto canonical = quotient_projection(6, p1.kernel);
  auto a = change_of_quotient_basis(p1, canonical);
  CHECK(compose(a, p1.projection) == canonical.projection);
  CHECK_THROWS_AS(LatticeProjection::from_map(matrix(2, {{2, 0}})), std::invalid_argument);
}

TEST_CASE("preimage of a sublattice") {
  auto f = matrix(3, {{1, 0, 0}, {0, 1, 1}});
  auto pre = preimage(f, saturate(2, ivs({{0, 1}})));
  CHECK(pre == saturate(3, ivs({{0, 1, 0}, {0, 0, 1}})));
}
