#include "toric/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace toric {

std::optional<Rational> maximize(const RatVector& c, const std::vector<RatVector>& a, const RatVector& b) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  assert(b.size() == m);
  for (const auto& x : b)
    if (x < 0) throw std::invalid_argument("maximize: right-hand side must be nonnegative");

  // Tableau columns: n originals, m slacks, then rhs.
  const std::size_t width = n + m + 1;
  std::vector<RatVector> t(m, RatVector(width, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    assert(a[i].size() == n);
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = b[i];
  }
  // Reduced costs: z_j - c_j.
  RatVector obj(width, Rational(0));
  for (std::size_t j = 0; j < n; ++j) obj[j] = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) return obj[width - 1];

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return std::nullopt;

    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (std::size_t j = 0; j < width; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
}

}  // namespace toric
