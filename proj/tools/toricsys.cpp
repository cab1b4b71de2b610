// toricsys: command line front end for systems of fans.
//
// Exit codes: 0 success, 1 domain error (bad document, failed validation,
// no map, ...), 2 usage error.

#include "CLI11.hpp"
#include "json.hpp"
#include "render.hpp"
#include "toric/cox.hpp"
#include "toric/document.hpp"
#include "toric/quotient.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace toric;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (const ParseError& e) {
    throw DomainFailure(path + ": " + e.what());
  }
}

const Sublattice& sublattice(const Document& doc, const std::string& name) {
  auto it = doc.sublattices.find(name);
  if (it == doc.sublattices.end()) throw UsageError("no sublattice named '" + name + "'");
  return it->second;
}

const MapBlock& map_block(const Document& doc, const std::string& name) {
  auto it = doc.maps.find(name);
  if (it == doc.maps.end()) throw UsageError("no map named '" + name + "'");
  return it->second;
}

json matrix_json(const LatticeMap& f) {
  json rows = json::array();
  for (std::size_t r = 0; r < f.target_rank(); ++r) rows.push_back(to_string(f.matrix().row(r)));
  return rows;
}

json cones_json(const std::vector<Cone>& cones) {
  json out = json::array();
  for (const auto& c : cones) out.push_back(c.to_string());
  return out;
}

json system_json(const SystemOfFans& s) {
  json charts = json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    charts.push_back({{"id", i + 1}, {"cones", cones_json(maximal_cones(s.delta(i, i)))}});
  json glue = json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      glue.push_back({{"i", i + 1}, {"j", j + 1}, {"cones", cones_json(maximal_cones(s.delta(i, j)))}});
  return {{"rank", s.rank()}, {"charts", charts}, {"glue", glue}};
}

json charts_json(const std::vector<std::size_t>& charts) {
  json out = json::array();
  for (auto c : charts) out.push_back(c + 1);
  return out;
}

json classes_json(const OrbitClassTable& t) {
  json out = json::array();
  for (std::size_t c = 0; c < t.size(); ++c)
    out.push_back({{"id", c}, {"cone", t.at(c).cone.to_string()}, {"charts", charts_json(t.at(c).charts)}});
  return out;
}

json map_json(const SystemMap& m) { return {{"matrix", matrix_json(m.f)}, {"class_map", m.class_map}}; }

json cmd_validate(const Document& doc) {
  auto v = validate(doc.system);
  json violations = json::array();
  for (const auto& x : v) violations.push_back(x.to_string());
  json out = {{"valid", v.empty()},
              {"rank", doc.system.rank()},
              {"charts", doc.system.size()},
              {"violations", violations}};
  return out;
}

json cmd_orbits(const Document& doc) {
  OrbitClassTable t = orbit_classes(doc.system);
  json covers = json::array();
  for (auto [a, b] : t.covers()) covers.push_back({a, b});
  return {{"classes", classes_json(t)},
          {"covers", covers},
          {"maximal", t.maximal()},
          {"separated", is_separated(doc.system)}};
}

json cmd_affine(const Document& doc) {
  AffineSystem a = to_affine_system(doc.system);
  return {{"system", system_json(a.system)}, {"chart_class", a.chart_class}, {"class_map", a.class_map}};
}

json cmd_separate(const Document& doc) {
  SeparationResult r = toric_separation(doc.system);
  return {{"fan", system_json(r.fan)}, {"map", map_json(r.map)}, {"merges", r.merges}};
}

LatticeProjection projection_from(const Document& doc, const std::string& sub, const std::string& map) {
  if (!sub.empty() == !map.empty()) throw UsageError("give exactly one of --sublattice and --map");
  if (!map.empty()) return LatticeProjection::from_map(map_block(doc, map).f);
  const Sublattice& l = sublattice(doc, sub);
  if (l.ambient_rank() != doc.system.rank()) throw DomainFailure("sublattice rank differs from the system rank");
  if (!l.is_primitive()) throw DomainFailure("sublattice " + l.to_string() + " is not primitive");
  return quotient_projection(doc.system.rank(), l);
}

json cmd_prequotient(const Document& doc, const std::string& sub, const std::string& map, bool reverse,
                     bool trace, bool quasi) {
  require_valid(doc.system);
  PrequotientOptions opts;
  opts.reverse_order = reverse;
  PrequotientResult r = prequotient(doc.system, projection_from(doc, sub, map), opts);
  if (!quasi) {
    FanReduction red = quasifans_to_fans(r.target);
    r.map = compose(red.map, r.map);
    r.target = red.system;
  }
  json out = {{"target", system_json(r.target)},
              {"map", map_json(r.map)},
              {"loop1_steps", r.loop1_steps},
              {"loop2_steps", r.loop2_steps}};
  if (trace) out["trace"] = r.trace;
  return out;
}

json cmd_check_good(const Document& doc, const std::string& sub, const std::string& map) {
  GoodPrequotientReport r = check_good_prequotient(doc.system, projection_from(doc, sub, map));
  json witnesses = json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"i", w.i + 1}, {"j", w.j + 1}, {"tau", w.tau.to_string()}, {"condition", w.condition}});
  json out = {{"holds", r.holds}, {"witnesses", witnesses}};
  if (r.holds) {
    out["l_hat"] = r.l_hat->to_string();
    out["summary"] = "holds; L_hat = " + r.l_hat->to_string();
  } else {
    const auto& w = r.witnesses.front();
    out["l_hat"] = nullptr;
    out["summary"] = "fails; condition " + std::to_string(w.condition) + " at (" + std::to_string(w.i + 1) + ", " +
                     std::to_string(w.j + 1) + ", " + w.tau.to_string() + ")";
  }
  return out;
}

json cmd_quotient(const Document& doc, const std::string& sub) {
  require_valid(doc.system);
  const Sublattice& l = sublattice(doc, sub);
  SeparationResult r = toric_quotient(doc.system, l);
  return {{"fan", system_json(r.fan)}, {"map", map_json(r.map)}, {"merges", r.merges}};
}

json cmd_cox(const Document& doc, const std::string& mode) {
  Presentation p = mode == "good" ? good_presentation(doc.system) : categorical_presentation(doc.system);
  json coords = json::array();
  for (const auto& c : p.coordinates)
    coords.push_back({{"ray", c.ray.to_string()}, {"chart", c.chart + 1}});
  json out = {{"kind", to_string(p.kind)},
              {"ambient_rank", p.ambient.rank()},
              {"coordinates", coords},
              {"ambient", system_json(p.ambient)},
              {"mu", charts_json(p.mu)},
              {"Q", matrix_json(p.q.f)},
              {"H", p.h.to_string()},
              {"affine_map", is_affine_map(p.q)},
              {"surjective", is_surjective(p.q)}};
  if (p.kind == Presentation::Kind::categorical) {
    json index = json::array();
    for (const auto& k : p.index) index.push_back({{"tau", k.tau.to_string()}, {"i", k.i + 1}, {"j", k.j + 1}});
    out["index"] = index;
  }
  return out;
}

json cmd_affine_intersection(const Document& doc) {
  require_valid(doc.system);
  return {{"affine_intersection", is_affine_intersection(doc.system)}};
}

json cmd_fiber(const Document& doc, const std::string& map, const std::string& target_path, std::size_t cls) {
  require_valid(doc.system);
  Document target = load(target_path);
  require_valid(target.system);
  const MapBlock& b = map_block(doc, map);
  SystemMap m = b.index ? induced_from_index_map(b.f, *b.index, doc.system, target.system)
                        : map_to_fan(b.f, doc.system, target.system);
  OrbitClassTable src = orbit_classes(doc.system);
  OrbitClassTable dst = orbit_classes(target.system);
  if (cls >= dst.size()) throw UsageError("no target class " + std::to_string(cls));
  FiberDescription fd = fiber(m, cls);
  json comps = json::array();
  for (const auto& c : fd.components)
    comps.push_back({{"class", c.source_class},
                     {"cone", src.at(c.source_class).cone.to_string()},
                     {"charts", charts_json(src.at(c.source_class).charts)},
                     {"stabilizer_pullback", c.stabilizer_pullback.to_string()}});
  return {{"target_class", cls}, {"target_cone", dst.at(cls).cone.to_string()}, {"components", comps}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toricsys: systems of fans, maps, quotients and presentations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  std::string file, sub, map, target, mode, format, what = "fan";
  std::size_t cls = 0;
  bool reverse = false, trace = false, quasi = false;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file, "system document")->required();
    return c;
  };
  auto* validate_cmd = add("validate", "check the axioms of a system of fans");
  auto* orbits_cmd = add("orbits", "orbit classes and their order");
  auto* affine_cmd = add("affine", "affine system with the same orbit classes");
  auto* separate_cmd = add("separate", "reduction to a single fan");
  auto* pre_cmd = add("prequotient", "toric prequotient by a sublattice");
  pre_cmd->add_option("--sublattice", sub, "sublattice name");
  pre_cmd->add_option("--map", map, "explicit surjective projection");
  pre_cmd->add_flag("--reverse", reverse, "scan in reverse order");
  pre_cmd->add_flag("--trace", trace, "include the loop trace");
  pre_cmd->add_flag("--quasi", quasi, "keep the quasi-fan target");
  auto* good_cmd = add("check-good", "good prequotient conditions");
  good_cmd->add_option("--sublattice", sub, "sublattice name");
  good_cmd->add_option("--map", map, "explicit surjective projection");
  auto* quot_cmd = add("quotient", "toric quotient by a sublattice");
  quot_cmd->add_option("--sublattice", sub, "sublattice name")->required();
  auto* cox_cmd = add("cox", "presentation as a quotient of an open subset of affine space");
  cox_cmd->add_option("--mode", mode, "categorical or good")->required()->check(CLI::IsMember({"categorical", "good"}));
  auto* ai_cmd = add("affine-intersection", "do charts intersect in single cones");
  auto* fiber_cmd = add("fiber", "fiber of a map over a target orbit class");
  fiber_cmd->add_option("--map", map, "map name")->required();
  fiber_cmd->add_option("--target", target, "target system document")->required();
  fiber_cmd->add_option("--class", cls, "target class id")->required();
  auto* plot_cmd = add("plot", "SVG picture of a rank-2 system or of the orbit order");
  plot_cmd->add_option("--format", format, "output format")->required()->check(CLI::IsMember({"svg"}));
  plot_cmd->add_option("--what", what, "fan or poset")->check(CLI::IsMember({"fan", "poset"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Document doc = load(file);
    json out;
    bool ok = true;
    if (validate_cmd->parsed()) {
      out = cmd_validate(doc);
      ok = out["valid"].get<bool>();
    } else if (plot_cmd->parsed()) {
      require_valid(doc.system);
      std::string svg = what == "fan" ? svg_fan(doc.system) : svg_poset(orbit_classes(doc.system));
      if (as_json) {
        std::cout << json{{"svg", svg}}.dump(2) << "\n";
      } else {
        std::cout << svg;
      }
      return 0;
    } else if (orbits_cmd->parsed()) {
      out = cmd_orbits(doc);
    } else if (affine_cmd->parsed()) {
      out = cmd_affine(doc);
    } else if (separate_cmd->parsed()) {
      out = cmd_separate(doc);
    } else if (pre_cmd->parsed()) {
      out = cmd_prequotient(doc, sub, map, reverse, trace, quasi);
    } else if (good_cmd->parsed()) {
      out = cmd_check_good(doc, sub, map);
    } else if (quot_cmd->parsed()) {
      out = cmd_quotient(doc, sub);
    } else if (cox_cmd->parsed()) {
      out = cmd_cox(doc, mode);
    } else if (ai_cmd->parsed()) {
      out = cmd_affine_intersection(doc);
    } else if (fiber_cmd->parsed()) {
      out = cmd_fiber(doc, map, target, cls);
    }
    std::cout << (as_json ? out.dump(2) + "\n" : render_text(out));
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
