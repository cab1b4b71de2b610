#include "toric/quotient.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

std::vector<std::size_t> identity_indices(std::size_t n) {
  std::vector<std::size_t> mu(n);
  for (std::size_t i = 0; i < n; ++i) mu[i] = i;
  return mu;
}

void require_affine(const SystemOfFans& s) {
  require_valid(s);
  if (!s.is_affine()) throw InvalidSystem("an affine system is required");
}

void require_primitive(const Sublattice& l, std::size_t rank) {
  if (l.ambient_rank() != rank) throw RankMismatch("sublattice rank differs from the system rank");
  if (!l.is_primitive()) throw NotPrimitive("sublattice " + l.to_string() + " is not primitive");
}

ConeSet images(const LatticeMap& p, const std::vector<Cone>& cones) {
  std::vector<Cone> out;
  for (const auto& c : cones) out.push_back(image(p, c));
  return face_closure(out);
}

}  // namespace

AffineQuotient affine_quotient_cone(const Cone& sigma, const Sublattice& l) {
  if (!sigma.is_pointed()) throw std::invalid_argument("cone " + sigma.to_string() + " is not strictly convex");
  require_primitive(l, sigma.rank());
  Sublattice l_hat = smallest_face_containing(sigma, l).w_hat;
  LatticeProjection p = quotient_projection(sigma.rank(), l_hat);
  Cone c = image(p.projection, sigma);
  return {std::move(l_hat), p, std::move(c)};
}

GoodPrequotientReport check_good_prequotient(const SystemOfFans& s, const LatticeProjection& p) {
  require_affine(s);
  if (p.projection.source_rank() != s.rank()) throw RankMismatch("projection source rank differs from the system rank");
  GoodPrequotientReport report;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Cone& sigma = s.chart_cone(i);
    Cone p_sigma = image(p.projection, sigma);
    for (std::size_t j = 0; j < s.size(); ++j)
      for (const auto& tau : maximal_cones(s.delta(i, j))) {
        Cone p_tau = image(p.projection, tau);
        if (!is_face(p_tau, p_sigma)) report.witnesses.push_back({i, j, tau, 1});
        if (preimage_intersect(p.projection, p_tau, sigma) != tau) report.witnesses.push_back({i, j, tau, 2});
      }
  }
  report.holds = report.witnesses.empty();
  if (report.holds) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Sublattice w = smallest_face_containing(s.chart_cone(i), p.kernel).w_hat;
      if (!report.l_hat) {
        report.l_hat = w;
      } else if (*report.l_hat != w) {
        throw std::logic_error("good prequotient check: charts disagree on the enlarged sublattice");
      }
    }
    if (!report.l_hat) report.l_hat = p.kernel;
  }
  return report;
}

GoodPrequotientReport check_good_prequotient(const SystemOfFans& s, const Sublattice& l) {
  require_primitive(l, s.rank());
  return check_good_prequotient(s, quotient_projection(s.rank(), l));
}

FanReduction quasifans_to_fans(const SystemOfFans& s) {
  require_valid(s);
  Cone bottom = s.minimal();
  if (!bottom.rays().empty()) throw InvalidSystem("minimal cone " + bottom.to_string() + " is not a linear subspace");
  LatticeProjection p = quotient_projection(s.rank(), bottom.lineality());
  SystemOfFans fans = transport(p.projection, s);
  SystemMap m = induced_from_index_map(p.projection, identity_indices(s.size()), s, fans);
  return {std::move(fans), std::move(m), std::move(p)};
}

PrequotientResult build_good_prequotient(const SystemOfFans& s, const Sublattice& l) {
  GoodPrequotientReport report = check_good_prequotient(s, l);
  if (!report.holds) {
    const auto& w = report.witnesses.front();
    throw std::invalid_argument("no good prequotient: condition " + std::to_string(w.condition) + " fails for " +
                                w.tau.to_string() + " in D" + std::to_string(w.i + 1) + "," +
                                std::to_string(w.j + 1));
  }
  LatticeProjection p = quotient_projection(s.rank(), l);
  std::vector<std::vector<ConeSet>> delta(s.size(), std::vector<ConeSet>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) delta[i][j] = images(p.projection, maximal_cones(s.delta(i, j)));
  SystemOfFans quasi = SystemOfFans::from_family(p.projection.target_rank(), std::move(delta));
  require_valid(quasi);
  SystemMap first = induced_from_index_map(p.projection, identity_indices(s.size()), s, quasi);
  FanReduction red = quasifans_to_fans(quasi);
  PrequotientResult out;
  out.target = red.system;
  out.map = compose(red.map, first);
  return out;
}

namespace {

struct WorkingState {
  std::vector<Cone> tau;
  std::vector<std::vector<ConeSet>> s1;
};

std::vector<std::size_t> scan(std::size_t n, bool reverse) {
  auto v = identity_indices(n);
  if (reverse) std::reverse(v.begin(), v.end());
  return v;
}

std::vector<Cone> ordered(std::vector<Cone> cones, bool reverse) {
  if (reverse) std::reverse(cones.begin(), cones.end());
  return cones;
}

std::size_t termination_measure(const WorkingState& w, const std::set<IntVector>& points) {
  std::size_t total = 0;
  for (const auto& row : w.s1)
    for (const auto& set : row)
      for (const auto& c : maximal_cones(set))
        for (const auto& x : points) total += c.contains(x);
  return total;
}

std::vector<std::size_t> maximal_counts(const WorkingState& w) {
  std::vector<std::size_t> counts;
  for (const auto& row : w.s1)
    for (const auto& set : row) counts.push_back(maximal_cones(set).size());
  return counts;
}

std::string chart_label(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

PrequotientResult prequotient(const SystemOfFans& s, const LatticeProjection& p, const PrequotientOptions& opts) {
  require_affine(s);
  const LatticeMap& proj = p.projection;
  if (proj.source_rank() != s.rank()) throw RankMismatch("projection source rank differs from the system rank");
  const std::size_t n = s.size();
  PrequotientResult out;

  // Init.
  WorkingState w;
  std::set<IntVector> points;
  for (std::size_t i = 0; i < n; ++i) {
    w.tau.push_back(image(proj, s.chart_cone(i)));
    for (const auto& r : s.chart_cone(i).rays()) points.insert(proj(r));
  }
  w.s1.assign(n, std::vector<ConeSet>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.s1[i][j] = images(proj, maximal_cones(s.delta(i, j)));

  // Loop 1.
  for (;;) {
    bool stepped = false;
    for (auto i : scan(n, opts.reverse_order)) {
      for (auto j : scan(n, opts.reverse_order)) {
        for (const auto& rho : ordered(maximal_cones(w.s1[i][j]), opts.reverse_order)) {
          if (is_face(rho, w.tau[i])) continue;
          if (!w.tau[i].contains(rho)) throw std::logic_error("prequotient: glueing cone left its chart");
          Cone rho_i = face_containing(w.tau[i], rho.relint_point());
          if (!rho_i.relint_contains(rho.relint_point()))
            throw std::logic_error("prequotient: enlarged face misses the relative interior");

          std::size_t before = opts.check_measure ? termination_measure(w, points) : 0;
          auto counts_before = opts.check_measure ? maximal_counts(w) : std::vector<std::size_t>{};

          w.tau[j] = hull_union(w.tau[j], rho_i);
          w.s1[j][j] = face_closure(std::vector<Cone>{w.tau[j]});
          ConeSet updated;
          if (opts.reclose_glueing) {
            std::vector<Cone> tops;
            for (const auto& c : maximal_cones(w.s1[i][j]))
              if (c != rho) tops.push_back(c);
            tops.push_back(rho_i);
            updated = face_closure(tops);
          } else {
            updated = w.s1[i][j];
            for (const auto& f : face_list(rho)) updated.erase(f);
            for (auto& f : face_list(rho_i)) updated.insert(std::move(f));
          }
          w.s1[i][j] = updated;
          w.s1[j][i] = updated;

          if (opts.check_measure && maximal_counts(w) == counts_before && termination_measure(w, points) <= before)
            throw std::logic_error("prequotient: Loop 1 measure did not grow");
          ++out.loop1_steps;
          out.trace.push_back("L1 i=" + chart_label(i) + " j=" + chart_label(j) + " rho=" + rho.to_string() +
                              " -> rho_i=" + rho_i.to_string());
          stepped = true;
          break;
        }
        if (stepped) break;
      }
      if (stepped) break;
    }
    if (!stepped) break;
  }

  // Loop 2.
  for (;;) {
    bool stepped = false;
    for (auto i : scan(n, opts.reverse_order)) {
      for (auto j : scan(n, opts.reverse_order)) {
        for (auto k : scan(n, opts.reverse_order)) {
          std::vector<Cone> candidates(w.s1[i][j].begin(), w.s1[i][j].end());
          for (const auto& rho : ordered(candidates, opts.reverse_order)) {
            if (!w.s1[j][k].count(rho) || w.s1[i][k].count(rho)) continue;
            for (auto& f : face_list(rho)) w.s1[i][k].insert(std::move(f));
            w.s1[k][i] = w.s1[i][k];
            ++out.loop2_steps;
            out.trace.push_back("L2 i,j,k=" + chart_label(i) + "," + chart_label(j) + "," + chart_label(k) +
                                " rho=" + rho.to_string());
            stepped = true;
            break;
          }
          if (stepped) break;
        }
        if (stepped) break;
      }
      if (stepped) break;
    }
    if (!stepped) break;
  }

  out.target = SystemOfFans::from_family(proj.target_rank(), std::move(w.s1));
  auto problems = validate(out.target);
  if (!problems.empty()) throw std::logic_error("prequotient output is not a system: " + problems.front().to_string());
  out.map = induced_from_index_map(proj, identity_indices(n), s, out.target);
  return out;
}

PrequotientResult prequotient(const SystemOfFans& s, const Sublattice& l, const PrequotientOptions& opts) {
  require_primitive(l, s.rank());
  return prequotient(s, quotient_projection(s.rank(), l), opts);
}

PrequotientResult toric_prequotient(const SystemOfFans& s, const Sublattice& l, const PrequotientOptions& opts) {
  PrequotientResult pre = prequotient(s, l, opts);
  FanReduction red = quasifans_to_fans(pre.target);
  pre.map = compose(red.map, pre.map);
  pre.target = red.system;
  return pre;
}

SeparationResult toric_separation(const SystemOfFans& s, const SeparationOptions& opts) {
  require_valid(s);
  std::vector<Cone> work;
  {
    ConeSet tops;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (const auto& c : maximal_cones(s.delta(i, i))) tops.insert(c);
    work.assign(tops.begin(), tops.end());
  }
  LatticeMap p = LatticeMap::identity(s.rank());
  std::size_t merges = 0;

  auto normalize = [](std::vector<Cone>& cones) {
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    std::vector<Cone> kept;
    for (std::size_t a = 0; a < cones.size(); ++a) {
      bool covered = false;
      for (std::size_t b = 0; b < cones.size() && !covered; ++b)
        covered = a != b && cones[b].dim() > cones[a].dim() && is_face(cones[a], cones[b]);
      if (!covered) kept.push_back(cones[a]);
    }
    cones = std::move(kept);
  };

  for (;;) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t a = 0; a < work.size(); ++a)
        for (std::size_t b = a + 1; b < work.size(); ++b) {
          IntVector x = intersect(work[a], work[b]).relint_point();
          Cone fa = face_containing(work[a], x);
          Cone fb = face_containing(work[b], x);
          if (fa == fb) continue;
          work[a] = hull_union(work[a], fb);
          work[b] = hull_union(work[b], fa);
          changed = true;
          if (++merges > opts.iteration_cap)
            throw std::runtime_error("toric separation: iteration cap of " + std::to_string(opts.iteration_cap) +
                                     " merges exceeded");
        }
      normalize(work);
    }
    std::vector<IntVector> lines;
    for (const auto& c : work)
      for (const auto& b : c.lineality().basis()) lines.push_back(b);
    if (lines.empty()) break;
    LatticeProjection q = quotient_projection(p.target_rank(), saturate(p.target_rank(), lines));
    for (auto& c : work) c = image(q.projection, c);
    normalize(work);
    p = compose(q.projection, p);
  }

  SeparationResult out;
  out.fan = SystemOfFans::single_fan(p.target_rank(), work);
  out.map = map_to_fan(p, s, out.fan);
  out.merges = merges;
  return out;
}

SeparationResult toric_quotient(const SystemOfFans& s, const Sublattice& l, const PrequotientOptions& opts) {
  PrequotientResult pre = toric_prequotient(s, l, opts);
  SeparationResult sep = toric_separation(pre.target);
  sep.map = compose(sep.map, pre.map);
  return sep;
}

bool isomorphic_targets(const SystemMap& a, const SystemMap& b) {
  if (a.f.source_rank() != b.f.source_rank() || a.f.target_rank() != b.f.target_rank()) return false;
  if (!a.f.is_surjective() || !b.f.is_surjective()) return false;
  LatticeProjection pa = LatticeProjection::from_map(a.f);
  LatticeProjection pb = LatticeProjection::from_map(b.f);
  if (pa.kernel != pb.kernel) return false;
  LatticeMap change = change_of_quotient_basis(pa, pb);
  return isomorphism(transport(change, a.target), b.target).has_value();
}

}  // namespace toric
