#pragma once

#include "toric/lattice.hpp"

#include <initializer_list>
#include <ostream>
#include <random>
#include <vector>

namespace toric::testing {

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<IntVector> ivs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) out.push_back(iv(r));
  return out;
}

inline LatticeMap matrix(std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
  return LatticeMap(IntMatrix::from_rows(cols, ivs(rows)));
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t rank, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntVector v(rank);
  for (auto& x : v) x = d(rng);
  return v;
}

/// Determinant by cofactor expansion; test-only oracle for small matrices.
inline Integer determinant(const std::vector<IntVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<IntVector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntVector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Integer term = m[0][c] * determinant(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

}  // namespace toric::testing

#include "toric/cone.hpp"

namespace toric::testing {

inline Cone cone(std::size_t rank, std::initializer_list<std::initializer_list<long>> gens) {
  return Cone::from_generators(rank, ivs(gens));
}

inline Sublattice span(std::size_t rank, std::initializer_list<std::initializer_list<long>> gens) {
  return saturate(rank, ivs(gens));
}

inline Cone random_cone(std::mt19937_64& rng, std::size_t rank, std::size_t count, int bound = 2) {
  std::vector<IntVector> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(random_vector(rng, rank, bound));
  return Cone::from_generators(rank, gens);
}

/// A random point of the relative interior: relint point plus a random
/// nonnegative combination of rays and a random lineality vector.
inline IntVector random_relint_point(std::mt19937_64& rng, const Cone& c) {
  std::uniform_int_distribution<int> pos(0, 3), any(-3, 3);
  IntVector p = c.relint_point();
  for (const auto& r : c.rays()) p = add(p, scale(Integer(pos(rng)), r));
  for (const auto& b : c.lineality().basis()) p = add(p, scale(Integer(any(rng)), b));
  return p;
}

}  // namespace toric::testing

namespace toric {

// Printing for test diagnostics.
inline std::ostream& operator<<(std::ostream& os, const Cone& c) { return os << c.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Sublattice& l) { return os << l.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const LatticeMap& f) { return os << f.to_string(); }

}  // namespace toric
