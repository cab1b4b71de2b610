#include "toric/sysfan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace toric {

ConeSet face_closure(const std::vector<Cone>& cones) {
  ConeSet out;
  for (const auto& c : cones) {
    if (out.count(c)) continue;
    for (auto& f : face_list(c)) out.insert(std::move(f));
  }
  return out;
}

ConeSet face_closure(const ConeSet& cones) { return face_closure(std::vector<Cone>(cones.begin(), cones.end())); }

std::vector<Cone> maximal_cones(const ConeSet& cones) {
  std::vector<Cone> out;
  for (const auto& c : cones) {
    bool maximal = true;
    for (const auto& d : cones)
      if (d.dim() > c.dim() && d.contains(c)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  return out;
}

std::optional<Cone> minimal_cone(const ConeSet& cones) {
  if (cones.empty()) return std::nullopt;
  const Cone& low = *cones.begin();  // smallest dim first
  for (const auto& c : cones)
    if (!c.contains(low)) return std::nullopt;
  return low;
}

std::string Violation::to_string() const {
  std::string s = axiom;
  if (!indices.empty()) {
    s += " at (";
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(indices[k] + 1);
    }
    s += ")";
  }
  if (!detail.empty()) s += ": " + detail;
  return s;
}

SystemOfFans SystemOfFans::from_family(std::size_t rank, std::vector<std::vector<ConeSet>> delta) {
  for (const auto& row : delta) {
    if (row.size() != delta.size()) throw InvalidSystem("glueing family is not square");
    for (const auto& set : row)
      for (const auto& c : set)
        if (c.rank() != rank) throw RankMismatch("cone " + c.to_string() + " has the wrong rank");
  }
  SystemOfFans s;
  s.rank_ = rank;
  s.delta_ = std::move(delta);
  return s;
}

SystemOfFans SystemOfFans::from_upper(std::size_t rank, std::vector<ConeSet> diagonal,
                                      const std::map<std::pair<std::size_t, std::size_t>, ConeSet>& glueing) {
  const std::size_t n = diagonal.size();
  ConeSet bottom;
  if (n > 0) {
    auto m = minimal_cone(diagonal[0]);
    if (m) bottom.insert(*m);
  }
  std::vector<std::vector<ConeSet>> delta(n, std::vector<ConeSet>(n, bottom));
  for (std::size_t i = 0; i < n; ++i) delta[i][i] = std::move(diagonal[i]);
  for (const auto& [key, set] : glueing) {
    auto [i, j] = key;
    if (i >= n || j >= n) throw InvalidSystem("glueing refers to unknown chart");
    if (i == j) throw InvalidSystem("glueing entry on the diagonal");
    delta[i][j] = set;
    delta[j][i] = set;
  }
  return from_family(rank, std::move(delta));
}

SystemOfFans SystemOfFans::affine(std::size_t rank, const std::vector<Cone>& charts,
                                  const std::map<std::pair<std::size_t, std::size_t>, std::vector<Cone>>& glueing) {
  std::vector<ConeSet> diagonal;
  for (const auto& c : charts) diagonal.push_back(face_closure(std::vector<Cone>{c}));
  std::map<std::pair<std::size_t, std::size_t>, ConeSet> glue;
  for (const auto& [key, cones] : glueing) {
    ConeSet g = face_closure(cones);
    if (g.empty() && !charts.empty()) g.insert(*minimal_cone(diagonal[0]));
    glue[key] = std::move(g);
  }
  return from_upper(rank, std::move(diagonal), glue);
}

SystemOfFans SystemOfFans::single_fan(std::size_t rank, const std::vector<Cone>& cones) {
  ConeSet all = face_closure(cones);
  if (all.empty()) all.insert(Cone::zero(rank));
  return from_family(rank, {{all}});
}

SystemOfFans SystemOfFans::from_cones(std::size_t rank, const std::vector<Cone>& cones, Glueing mode) {
  std::vector<ConeSet> diagonal;
  for (const auto& c : cones) diagonal.push_back(face_closure(std::vector<Cone>{c}));
  std::map<std::pair<std::size_t, std::size_t>, ConeSet> glue;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      ConeSet common;
      std::set_intersection(diagonal[i].begin(), diagonal[i].end(), diagonal[j].begin(), diagonal[j].end(),
                            std::inserter(common, common.begin()));
      switch (mode) {
        case Glueing::trivial:
          break;
        case Glueing::common_proper_faces:
          common.erase(cones[i]);
          common.erase(cones[j]);
          if (common.empty()) common.insert(Cone::zero(rank));
          glue[{i, j}] = common;
          break;
        case Glueing::full_fan: {
          Cone meet = intersect(cones[i], cones[j]);
          if (!common.count(meet))
            throw InvalidSystem(cones[i].to_string() + " and " + cones[j].to_string() +
                                " do not meet in a common face");
          glue[{i, j}] = common;
          break;
        }
      }
    }
  return from_upper(rank, std::move(diagonal), glue);
}

bool SystemOfFans::is_affine() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (maximal_cones(delta_[i][i]).size() != 1) return false;
  return true;
}

const Cone& SystemOfFans::chart_cone(std::size_t i) const {
  const ConeSet& d = delta_.at(i).at(i);
  auto m = maximal_cones(d);
  if (m.size() != 1) throw InvalidSystem("chart " + std::to_string(i + 1) + " is not affine");
  return *d.find(m.front());
}

bool SystemOfFans::is_fan_system() const {
  for (const auto& row : delta_)
    for (const auto& set : row)
      for (const auto& c : set)
        if (!c.is_pointed()) return false;
  return true;
}

Cone SystemOfFans::minimal() const {
  if (delta_.empty()) return Cone::zero(rank_);
  auto m = minimal_cone(delta_[0][0]);
  if (!m) throw InvalidSystem("chart 1 has no minimal cone");
  return *m;
}

std::string SystemOfFans::to_string() const {
  std::string s = "system rank " + std::to_string(rank_) + " charts " + std::to_string(size()) + "\n";
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i; j < size(); ++j) {
      s += "  D" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ":";
      for (const auto& c : maximal_cones(delta_[i][j])) s += " " + c.to_string();
      s += "\n";
    }
  return s;
}

namespace {

std::string cone_list(const std::vector<Cone>& cones) {
  std::string s;
  for (const auto& c : cones) s += (s.empty() ? "" : " ") + c.to_string();
  return s;
}

}  // namespace

std::vector<Violation> validate(const SystemOfFans& s) {
  std::vector<Violation> out;
  const std::size_t n = s.size();
  if (n == 0) {
    out.push_back({"nonempty index set", {}, "no charts"});
    return out;
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.delta(i, j) != s.delta(j, i)) out.push_back({"symmetry Dij = Dji", {i, j}, ""});

  std::optional<Cone> common;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ConeSet& d = s.delta(i, j);
      if (d.empty()) {
        out.push_back({"nonempty glueing", {i, j}, ""});
        continue;
      }
      ConeSet closed = face_closure(d);
      if (closed != d) {
        std::vector<Cone> missing;
        std::set_difference(closed.begin(), closed.end(), d.begin(), d.end(), std::back_inserter(missing));
        out.push_back({"closed under faces", {i, j}, "missing " + cone_list(missing)});
      }
      auto maxima = maximal_cones(d);
      for (std::size_t a = 0; a < maxima.size(); ++a)
        for (std::size_t b = a + 1; b < maxima.size(); ++b) {
          Cone meet = intersect(maxima[a], maxima[b]);
          if (!is_face(meet, maxima[a]) || !is_face(meet, maxima[b]))
            out.push_back({"common face intersection", {i, j},
                           maxima[a].to_string() + " and " + maxima[b].to_string()});
        }
      auto low = minimal_cone(d);
      if (!low) {
        out.push_back({"common minimal cone", {i, j}, "no minimal cone"});
      } else if (!common) {
        common = low;
      } else if (*low != *common) {
        out.push_back({"common minimal cone", {i, j}, low->to_string() + " differs from " + common->to_string()});
      }
      if (i != j) {
        std::vector<Cone> stray;
        for (const auto& c : d)
          if (!s.delta(i, i).count(c) || !s.delta(j, j).count(c)) stray.push_back(c);
        if (!stray.empty()) out.push_back({"Dij inside Dii and Djj", {i, j}, cone_list(stray)});
      }
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Cone> stray;
        for (const auto& c : s.delta(i, j))
          if (s.delta(j, k).count(c) && !s.delta(i, k).count(c)) stray.push_back(c);
        if (!stray.empty()) out.push_back({"Dij cap Djk inside Dik", {i, j, k}, cone_list(stray)});
      }
  return out;
}

void require_valid(const SystemOfFans& s) {
  auto v = validate(s);
  if (!v.empty()) throw InvalidSystem("invalid system: " + v.front().to_string());
}

OrbitClassTable::OrbitClassTable(const SystemOfFans& s) {
  // Union-find over labelled cones.
  std::vector<std::pair<Cone, std::size_t>> labelled;
  std::map<std::pair<Cone, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const auto& c : s.delta(i, i)) {
      index[{c, i}] = labelled.size();
      labelled.emplace_back(c, i);
    }
  std::vector<std::size_t> parent(labelled.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (const auto& c : s.delta(i, j)) {
        auto a = index.find({c, i});
        auto b = index.find({c, j});
        if (a == index.end() || b == index.end()) continue;
        parent[root(a->second)] = root(b->second);
      }

  std::map<std::size_t, OrbitClass> groups;
  for (std::size_t x = 0; x < labelled.size(); ++x) {
    auto& g = groups[root(x)];
    g.cone = labelled[x].first;
    g.charts.push_back(labelled[x].second);
  }
  for (auto& [r, g] : groups) {
    std::sort(g.charts.begin(), g.charts.end());
    classes_.push_back(std::move(g));
  }
  std::sort(classes_.begin(), classes_.end(), [](const OrbitClass& a, const OrbitClass& b) {
    if (a.cone != b.cone) return a.cone < b.cone;
    return a.charts.front() < b.charts.front();
  });
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (auto i : classes_[c].charts) lookup_[{classes_[c].cone, i}] = c;

  below_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    std::size_t i = classes_[c].charts.front();
    for (const auto& f : face_list(classes_[c].cone)) {
      auto it = lookup_.find({f, i});
      if (it != lookup_.end()) below_[c].insert(it->second);
    }
  }
}

std::optional<std::size_t> OrbitClassTable::find(const Cone& cone, std::size_t chart) const {
  auto it = lookup_.find({cone, chart});
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t OrbitClassTable::class_of(const Cone& cone, std::size_t chart) const {
  auto c = find(cone, chart);
  if (!c) throw std::out_of_range("no class for " + cone.to_string() + " in chart " + std::to_string(chart + 1));
  return *c;
}

std::vector<std::size_t> OrbitClassTable::down_closure(std::size_t c) const {
  const auto& b = below_.at(c);
  return {b.begin(), b.end()};
}

std::vector<std::size_t> OrbitClassTable::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < size(); ++c) {
    bool top = true;
    for (std::size_t d = 0; d < size() && top; ++d)
      if (d != c && precedes(c, d)) top = false;
    if (top) out.push_back(c);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> OrbitClassTable::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < size(); ++b)
    for (auto a : below_[b]) {
      if (a == b) continue;
      bool direct = true;
      for (auto m : below_[b])
        if (m != a && m != b && precedes(a, m)) {
          direct = false;
          break;
        }
      if (direct) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

OrbitClassTable orbit_classes(const SystemOfFans& s) {
  require_valid(s);
  return OrbitClassTable(s);
}

std::vector<std::size_t> chart_classes(const SystemOfFans& s, std::size_t c) {
  OrbitClassTable t = orbit_classes(s);
  if (c >= t.size()) throw std::out_of_range("unknown class " + std::to_string(c));
  return t.down_closure(c);
}

AffineSystem to_affine_system(const SystemOfFans& s) {
  OrbitClassTable t = orbit_classes(s);
  AffineSystem out;
  out.chart_class = t.maximal();
  const std::size_t n = out.chart_class.size();
  std::vector<std::vector<ConeSet>> delta(n, std::vector<ConeSet>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const auto& ca = t.at(out.chart_class[a]);
    for (std::size_t b = 0; b < n; ++b) {
      const auto& cb = t.at(out.chart_class[b]);
      ConeSet& d = delta[a][b];
      for (const auto& f : face_list(ca.cone)) {
        if (!is_face(f, cb.cone)) continue;
        auto x = t.find(f, ca.charts.front());
        auto y = t.find(f, cb.charts.front());
        if (x && y && *x == *y) d.insert(f);
      }
    }
  }
  out.system = SystemOfFans::from_family(s.rank(), std::move(delta));

  OrbitClassTable nt(out.system);
  for (std::size_t c = 0; c < nt.size(); ++c) {
    const auto& oc = nt.at(c);
    std::size_t m = out.chart_class[oc.charts.front()];
    out.class_map.push_back(t.class_of(oc.cone, t.at(m).charts.front()));
  }
  return out;
}

bool is_affine_intersection(const SystemOfFans& s) {
  if (!s.is_affine()) throw InvalidSystem("affine intersection is defined for affine systems");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (maximal_cones(s.delta(i, j)).size() != 1) return false;
  return true;
}

bool is_separated(const SystemOfFans& s) {
  require_valid(s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      for (const auto& a : maximal_cones(s.delta(i, i)))
        for (const auto& b : maximal_cones(s.delta(j, j))) {
          Cone meet = intersect(a, b);
          if (!is_face(meet, a) || !is_face(meet, b) || !s.delta(i, j).count(meet)) return false;
        }
  return true;
}

IrredundantSystem make_irredundant(const SystemOfFans& s) {
  const std::size_t n = s.size();
  std::vector<bool> alive(n, true);
  for (std::size_t j = n; j-- > 0;)
    for (std::size_t i = 0; i < n; ++i)
      if (i != j && alive[i] && s.delta(i, j) == s.delta(j, j)) {
        alive[j] = false;
        break;
      }
  IrredundantSystem out;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) out.kept.push_back(i);
  std::vector<std::vector<ConeSet>> delta;
  for (auto i : out.kept) {
    delta.emplace_back();
    for (auto j : out.kept) delta.back().push_back(s.delta(i, j));
  }
  out.system = SystemOfFans::from_family(s.rank(), std::move(delta));
  return out;
}

bool is_irredundant(const SystemOfFans& s) { return make_irredundant(s).kept.size() == s.size(); }

SystemOfFans transport(const LatticeMap& a, const SystemOfFans& s) {
  if (a.source_rank() != s.rank()) throw RankMismatch("transport: map source rank differs from system rank");
  std::vector<std::vector<ConeSet>> delta(s.size(), std::vector<ConeSet>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (const auto& c : s.delta(i, j)) delta[i][j].insert(image(a, c));
  return SystemOfFans::from_family(a.target_rank(), std::move(delta));
}

std::optional<std::vector<std::size_t>> isomorphism(const SystemOfFans& a, const SystemOfFans& b) {
  if (a.rank() != b.rank() || a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t p = 0; p < n; ++p) {
      if (used[p] || a.delta(i, i) != b.delta(p, p)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = a.delta(i, k) == b.delta(p, perm[k]) && a.delta(k, i) == b.delta(perm[k], p);
      if (!ok) continue;
      perm[i] = p;
      used[p] = true;
      if (extend(i + 1)) return true;
      used[p] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return perm;
}

}  // namespace toric
