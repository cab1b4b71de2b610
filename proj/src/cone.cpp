#include "toric/cone.hpp"

#include "toric/lp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace toric {

namespace {

void check_rank(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got)
    throw RankMismatch(std::string(what) + ": rank " + std::to_string(got) + " does not match " +
                       std::to_string(expected));
}

// Extreme rays of the pointed cone {y : a y >= 0}, rank(a) == d.
std::vector<IntVector> double_description(std::size_t d, const std::vector<IntVector>& a) {
  if (d == 0) return {};
  std::vector<std::size_t> chosen;
  std::vector<IntVector> chosen_rows;
  for (std::size_t i = 0; i < a.size() && chosen.size() < d; ++i) {
    chosen_rows.push_back(a[i]);
    if (rank(d, chosen_rows) == chosen_rows.size()) {
      chosen.push_back(i);
    } else {
      chosen_rows.pop_back();
    }
  }
  assert(chosen.size() == d);

  // Columns of the inverse of the chosen square block, by fraction-free
  // Gauss-Jordan on [B | I]: E B = D diagonal, so B^-1 = D^-1 E.
  std::vector<IntVector> m;
  for (std::size_t r = 0; r < d; ++r) {
    IntVector row = chosen_rows[r];
    for (std::size_t k = 0; k < d; ++k) row.push_back(Integer(r == k ? 1 : 0));
    m.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t sel = c;
    while (m[sel][c] == 0) ++sel;
    std::swap(m[c], m[sel]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Integer a = m[c][c], b = m[r][c];
      for (std::size_t k = 0; k < 2 * d; ++k) m[r][k] = a * m[r][k] - b * m[c][k];
      Integer g = content(m[r]);
      if (g > 1)
        for (auto& x : m[r]) x /= g;
    }
  }
  Integer common = 1;
  for (std::size_t r = 0; r < d; ++r) common = lcm(common, m[r][r]);
  if (common < 0) common = -common;
  std::vector<IntVector> rays;
  for (std::size_t k = 0; k < d; ++k) {
    IntVector y(d);
    for (std::size_t r = 0; r < d; ++r) y[r] = m[r][d + k] * (common / m[r][r]);
    rays.push_back(primitive(y));
  }

  std::vector<IntVector> processed = chosen_rows;
  std::vector<bool> used(a.size(), false);
  for (auto i : chosen) used[i] = true;

  for (std::size_t i = 0; i < a.size(); ++i) {
    if (used[i]) continue;
    const IntVector& row = a[i];
    std::vector<Integer> s;
    s.reserve(rays.size());
    for (const auto& r : rays) s.push_back(dot(row, r));

    // Zero sets over the processed rows. Two rays are adjacent iff no third
    // ray vanishes on all rows where both vanish.
    std::vector<std::vector<bool>> zeros(rays.size(), std::vector<bool>(processed.size()));
    for (std::size_t p = 0; p < rays.size(); ++p)
      for (std::size_t t = 0; t < processed.size(); ++t) zeros[p][t] = dot(processed[t], rays[p]) == 0;
    auto adjacent = [&](std::size_t p, std::size_t q) {
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (r == p || r == q) continue;
        bool covers = true;
        for (std::size_t t = 0; t < processed.size() && covers; ++t)
          covers = !(zeros[p][t] && zeros[q][t]) || zeros[r][t];
        if (covers) return false;
      }
      return true;
    };

    std::vector<IntVector> next;
    for (std::size_t p = 0; p < rays.size(); ++p)
      if (s[p] >= 0) next.push_back(rays[p]);
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (s[q] >= 0) continue;
        if (d < 2 || !adjacent(p, q)) continue;
        IntVector combo = sub(scale(s[p], rays[q]), scale(s[q], rays[p]));
        next.push_back(primitive(combo));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
    processed.push_back(row);
  }
  return rays;
}

// Orthogonal projection of v onto the complement of span(basis).
RatVector project_off(const std::vector<IntVector>& basis, const IntVector& v) {
  RatVector x = to_rational(v);
  if (basis.empty()) return x;
  std::vector<RatVector> gram(basis.size(), RatVector(basis.size()));
  RatVector rhs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) gram[i][j] = Rational(dot(basis[i], basis[j]));
    rhs[i] = Rational(dot(basis[i], v));
  }
  auto c = solve_rational(gram, rhs);
  assert(c);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= (*c)[i] * Rational(basis[i][k]);
  return x;
}

Rational rat_dot(const IntVector& u, const RatVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += Rational(u[i]) * v[i];
  return s;
}

std::vector<IntVector> transpose_apply(const LatticeMap& f, const std::vector<IntVector>& rows) {
  IntMatrix ft = f.matrix().transpose();
  std::vector<IntVector> out;
  for (const auto& r : rows) out.push_back(ft.apply(r));
  return out;
}

Cone linear_cone(const Sublattice& l) {
  std::vector<IntVector> gens;
  for (const auto& b : l.basis()) {
    gens.push_back(b);
    gens.push_back(negate(b));
  }
  return Cone::from_generators(l.ambient_rank(), gens);
}

}  // namespace

Cone Cone::from_generators(std::size_t n, const std::vector<IntVector>& gens) {
  for (const auto& g : gens) check_rank(n, g.size(), "cone generator");
  thread_local std::map<std::pair<std::size_t, std::vector<IntVector>>, Cone> memo;
  auto key = std::make_pair(n, gens);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  if (memo.size() > 16384) memo.clear();
  return memo.emplace(std::move(key), build(n, gens)).first->second;
}

Cone Cone::build(std::size_t n, const std::vector<IntVector>& gens) {
  Cone c;
  c.rank_ = n;
  std::vector<IntVector> normals = integer_kernel(IntMatrix::from_rows(n, gens));
  Sublattice lin_span = Sublattice::generated_by(n, integer_kernel(IntMatrix::from_rows(n, normals)));
  c.dim_ = lin_span.rank();
  c.equations_ = normals;

  // Facet normals u = sum y_k b_k over a basis b of the span.
  const auto& b = lin_span.basis();
  const std::size_t d = b.size();
  std::vector<IntVector> rows;
  for (const auto& g : gens) {
    if (toric::is_zero(g)) continue;
    IntVector row(d);
    for (std::size_t k = 0; k < d; ++k) row[k] = dot(b[k], g);
    rows.push_back(std::move(row));
  }
  for (const auto& y : double_description(d, rows)) {
    IntVector u(n, Integer(0));
    for (std::size_t k = 0; k < d; ++k) u = add(u, scale(y[k], b[k]));
    c.facets_.push_back(primitive(u));
  }
  std::sort(c.facets_.begin(), c.facets_.end());

  std::vector<IntVector> lin_gens;
  std::vector<IntVector> candidates;
  for (const auto& g : gens) {
    if (toric::is_zero(g)) continue;
    bool tight = std::all_of(c.facets_.begin(), c.facets_.end(),
                             [&](const IntVector& u) { return dot(u, g) == 0; });
    (tight ? lin_gens : candidates).push_back(g);
  }
  c.lineality_ = saturate(n, lin_gens);

  const std::size_t pointed_dim = d - c.lineality_.rank();
  std::set<IntVector> rays;
  for (const auto& g : candidates) {
    IntVector r = primitive(project_off(c.lineality_.basis(), g));
    if (rays.count(r)) continue;
    std::vector<IntVector> tight;
    for (const auto& u : c.facets_)
      if (dot(u, r) == 0) tight.push_back(u);
    if (toric::rank(n, tight) + 1 == pointed_dim) rays.insert(r);
  }
  c.rays_.assign(rays.begin(), rays.end());
  return c;
}

Cone Cone::from_inequalities(std::size_t n, const std::vector<IntVector>& ineqs,
                             const std::vector<IntVector>& eqs) {
  std::vector<IntVector> dual_gens = ineqs;
  for (const auto& e : eqs) {
    dual_gens.push_back(e);
    dual_gens.push_back(negate(e));
  }
  Cone dual = from_generators(n, dual_gens);
  std::vector<IntVector> gens = dual.facets_;
  for (const auto& e : dual.equations_) {
    gens.push_back(e);
    gens.push_back(negate(e));
  }
  return from_generators(n, gens);
}

Cone Cone::zero(std::size_t n) { return from_generators(n, {}); }

Cone Cone::full(std::size_t n) { return linear_cone(Sublattice::full(n)); }

std::vector<IntVector> Cone::generators() const {
  std::vector<IntVector> gens = rays_;
  for (const auto& b : lineality_.basis()) {
    gens.push_back(b);
    gens.push_back(negate(b));
  }
  return gens;
}

Sublattice Cone::span() const { return saturate(rank_, generators()); }

IntVector Cone::relint_point() const {
  IntVector p(rank_, Integer(0));
  for (const auto& r : rays_) p = add(p, r);
  return p;
}

bool Cone::contains(const RatVector& v) const {
  check_rank(rank_, v.size(), "point");
  for (const auto& e : equations_)
    if (rat_dot(e, v) != 0) return false;
  for (const auto& u : facets_)
    if (rat_dot(u, v) < 0) return false;
  return true;
}

bool Cone::contains(const IntVector& v) const {
  check_rank(rank_, v.size(), "point");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& u : facets_)
    if (dot(u, v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  check_rank(rank_, other.rank_, "cone");
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& b : other.lineality_.basis()) {
    for (const auto& e : equations_)
      if (dot(e, b) != 0) return false;
    for (const auto& u : facets_)
      if (dot(u, b) != 0) return false;
  }
  return true;
}

bool Cone::relint_contains(const RatVector& v) const {
  check_rank(rank_, v.size(), "point");
  for (const auto& e : equations_)
    if (rat_dot(e, v) != 0) return false;
  for (const auto& u : facets_)
    if (rat_dot(u, v) <= 0) return false;
  return true;
}

bool Cone::relint_contains(const IntVector& v) const {
  check_rank(rank_, v.size(), "point");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& u : facets_)
    if (dot(u, v) <= 0) return false;
  return true;
}

std::string Cone::to_string() const {
  std::string s = "cone(";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) s += ",";
    s += toric::to_string(rays_[i]);
  }
  s += ")";
  if (lineality_.rank() > 0) s += "+" + lineality_.to_string();
  return s;
}

namespace {

// The face cut out by the facets tight at a point.
Cone face_from_tight(const Cone& sigma, const std::vector<bool>& tight) {
  std::vector<IntVector> gens;
  for (const auto& r : sigma.rays()) {
    bool keep = true;
    for (std::size_t k = 0; k < tight.size() && keep; ++k)
      keep = !tight[k] || dot(sigma.facets()[k], r) == 0;
    if (keep) gens.push_back(r);
  }
  for (const auto& b : sigma.lineality().basis()) {
    gens.push_back(b);
    gens.push_back(negate(b));
  }
  return Cone::from_generators(sigma.rank(), gens);
}

}  // namespace

Cone face_containing(const Cone& sigma, const RatVector& v) {
  if (!sigma.contains(v)) throw std::invalid_argument("point is not in " + sigma.to_string());
  std::vector<bool> tight;
  for (const auto& u : sigma.facets()) tight.push_back(rat_dot(u, v) == 0);
  return face_from_tight(sigma, tight);
}

Cone face_containing(const Cone& sigma, const IntVector& v) {
  if (!sigma.contains(v)) throw std::invalid_argument("point is not in " + sigma.to_string());
  std::vector<bool> tight;
  for (const auto& u : sigma.facets()) tight.push_back(dot(u, v) == 0);
  return face_from_tight(sigma, tight);
}

namespace {

FaceLattice compute_faces(const Cone& sigma) {
  const auto& rays = sigma.rays();
  const auto& normals = sigma.facets();
  using RaySet = std::vector<bool>;
  std::vector<RaySet> facet_sets;
  for (const auto& u : normals) {
    RaySet s(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) s[r] = dot(u, rays[r]) == 0;
    facet_sets.push_back(std::move(s));
  }

  std::set<RaySet> seen;
  std::vector<RaySet> queue{RaySet(rays.size(), true)};
  seen.insert(queue.front());
  for (std::size_t at = 0; at < queue.size(); ++at) {
    for (const auto& f : facet_sets) {
      RaySet meet(rays.size());
      for (std::size_t r = 0; r < rays.size(); ++r) meet[r] = queue[at][r] && f[r];
      if (seen.insert(meet).second) queue.push_back(meet);
    }
  }

  std::vector<std::pair<Cone, RaySet>> built;
  for (const auto& s : queue) {
    std::vector<IntVector> gens;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (s[r]) gens.push_back(rays[r]);
    for (const auto& b : sigma.lineality().basis()) {
      gens.push_back(b);
      gens.push_back(negate(b));
    }
    built.emplace_back(Cone::from_generators(sigma.rank(), gens), s);
  }
  std::sort(built.begin(), built.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  // Faces share the lineality space, so containment is inclusion of ray sets.
  auto subset = [](const RaySet& a, const RaySet& b) {
    for (std::size_t r = 0; r < a.size(); ++r)
      if (a[r] && !b[r]) return false;
    return true;
  };
  FaceLattice out;
  for (const auto& [cone, s] : built) out.faces.push_back(cone);
  for (std::size_t i = 0; i < built.size(); ++i)
    for (std::size_t j = 0; j < built.size(); ++j)
      if (built[i].first.dim() + 1 == built[j].first.dim() && subset(built[i].second, built[j].second))
        out.covers.emplace_back(i, j);
  return out;
}

}  // namespace

FaceLattice faces(const Cone& sigma) {
  // Face lattices are requested over and over for the same cones; keep a
  // bounded per-thread memo.
  thread_local std::map<Cone, FaceLattice> memo;
  auto it = memo.find(sigma);
  if (it != memo.end()) return it->second;
  if (memo.size() > 4096) memo.clear();
  return memo.emplace(sigma, compute_faces(sigma)).first->second;
}

std::vector<Cone> face_list(const Cone& sigma) { return faces(sigma).faces; }

bool is_face(const Cone& tau, const Cone& sigma) {
  check_rank(sigma.rank(), tau.rank(), "cone");
  if (!sigma.contains(tau)) return false;
  return face_containing(sigma, tau.relint_point()) == tau;
}

bool relint_meets(const Cone& sigma, const Cone& tau) {
  check_rank(sigma.rank(), tau.rank(), "cone");
  const std::size_t n = sigma.rank();
  // Variables x+ (n), x- (n), t. Maximize t with u.x >= t per facet,
  // equations as two inequalities and t <= 1.
  const std::size_t vars = 2 * n + 1;
  std::vector<RatVector> a;
  RatVector b;
  auto add_row = [&](const IntVector& u, int sign, bool with_t) {
    RatVector row(vars, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      row[k] = Rational(sign * u[k]);
      row[n + k] = Rational(-sign * u[k]);
    }
    if (with_t) row[2 * n] = 1;
    a.push_back(std::move(row));
    b.push_back(0);
  };
  for (const Cone* c : {&sigma, &tau}) {
    for (const auto& u : c->facets()) add_row(u, -1, true);
    for (const auto& e : c->equations()) {
      add_row(e, 1, false);
      add_row(e, -1, false);
    }
  }
  RatVector cap(vars, Rational(0));
  cap[2 * n] = 1;
  a.push_back(cap);
  b.push_back(1);
  auto best = maximize(cap, a, b);
  assert(best);
  return *best > 0;
}

Cone hull_union(const Cone& sigma, const Cone& tau) {
  check_rank(sigma.rank(), tau.rank(), "cone");
  auto gens = sigma.generators();
  for (const auto& g : tau.generators()) gens.push_back(g);
  return Cone::from_generators(sigma.rank(), gens);
}

Cone intersect(const Cone& sigma, const Cone& tau) {
  check_rank(sigma.rank(), tau.rank(), "cone");
  auto ineqs = sigma.facets();
  ineqs.insert(ineqs.end(), tau.facets().begin(), tau.facets().end());
  auto eqs = sigma.equations();
  eqs.insert(eqs.end(), tau.equations().begin(), tau.equations().end());
  return Cone::from_inequalities(sigma.rank(), ineqs, eqs);
}

Cone image(const LatticeMap& f, const Cone& sigma) {
  check_rank(f.source_rank(), sigma.rank(), "cone for image");
  std::vector<IntVector> gens;
  for (const auto& g : sigma.generators()) gens.push_back(f(g));
  return Cone::from_generators(f.target_rank(), gens);
}

Cone preimage_intersect(const LatticeMap& f, const Cone& tau_prime, const Cone& sigma) {
  check_rank(f.target_rank(), tau_prime.rank(), "target cone for preimage");
  check_rank(f.source_rank(), sigma.rank(), "source cone for preimage");
  auto ineqs = transpose_apply(f, tau_prime.facets());
  ineqs.insert(ineqs.end(), sigma.facets().begin(), sigma.facets().end());
  auto eqs = transpose_apply(f, tau_prime.equations());
  eqs.insert(eqs.end(), sigma.equations().begin(), sigma.equations().end());
  return Cone::from_inequalities(sigma.rank(), ineqs, eqs);
}

SmallestFace smallest_face_containing(const Cone& sigma, const Sublattice& w) {
  check_rank(sigma.rank(), w.ambient_rank(), "sublattice");
  Cone meet = intersect(sigma, linear_cone(w));
  Cone face = face_containing(sigma, meet.relint_point());
  auto gens = face.generators();
  gens.insert(gens.end(), w.basis().begin(), w.basis().end());
  Sublattice w_hat = saturate(sigma.rank(), gens);
  return {std::move(face), std::move(w_hat)};
}

namespace {

void require_face(const Cone& sigma, const Cone& tau) {
  if (!is_face(tau, sigma)) throw NotAFace(tau.to_string() + " is not a face of " + sigma.to_string());
}

bool projected_condition(const Cone& sigma, const Cone& tau, const LatticeMap& p) {
  Cone p_sigma = image(p, sigma);
  Cone p_tau = image(p, tau);
  return is_face(p_tau, p_sigma) && preimage_intersect(p, p_tau, sigma) == tau;
}

}  // namespace

bool projection_condition_sum(const Cone& sigma, const Cone& tau, const Sublattice& l) {
  require_face(sigma, tau);
  Cone lin = linear_cone(l);
  Cone tau_l = hull_union(tau, lin);
  Cone sigma_l = hull_union(sigma, lin);
  return is_face(tau_l, sigma_l) && intersect(tau_l, sigma) == tau;
}

bool projection_condition_projected(const Cone& sigma, const Cone& tau, const Sublattice& l) {
  require_face(sigma, tau);
  return projected_condition(sigma, tau, quotient_projection(sigma.rank(), l).projection);
}

bool projection_condition_saturated(const Cone& sigma, const Cone& tau, const Sublattice& l) {
  require_face(sigma, tau);
  Sublattice w_hat = smallest_face_containing(sigma, l).w_hat;
  return projected_condition(sigma, tau, quotient_projection(sigma.rank(), w_hat).projection);
}

bool face_projection_check(const Cone& sigma, const Cone& tau, const Sublattice& l) {
  return projection_condition_projected(sigma, tau, l);
}

bool face_projection_check(const Cone& sigma, const Cone& tau, const LatticeMap& projection) {
  require_face(sigma, tau);
  check_rank(projection.source_rank(), sigma.rank(), "projection source");
  return projected_condition(sigma, tau, projection);
}

}  // namespace toric
