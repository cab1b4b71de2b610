#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

using nlohmann::json;

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool flat(const json& v) {
  if (!v.is_array()) return !v.is_object();
  // Strings get a line each; numbers and flags stay inline.
  return std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive() && !x.is_string(); });
}

std::string flat_text(const json& v) {
  if (!v.is_array()) return scalar(v);
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + scalar(v[k]);
  return s + "]";
}

void render(const json& v, std::size_t indent, std::string& out) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (flat(val)) {
        out += pad + key + ": " + flat_text(val) + "\n";
      } else {
        out += pad + key + ":\n";
        render(val, indent + 2, out);
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (flat(item)) {
        out += pad + "- " + flat_text(item) + "\n";
      } else {
        out += pad + "-\n";
        render(item, indent + 2, out);
      }
    }
  } else {
    out += pad + scalar(v) + "\n";
  }
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Dir {
  double x, y;
};

Dir direction(const toric::IntVector& v) {
  double x = v[0].convert_to<double>(), y = v[1].convert_to<double>();
  double n = std::sqrt(x * x + y * y);
  return {x / n, y / n};
}

}  // namespace

std::string render_text(const json& value) {
  std::string out;
  render(value, 0, out);
  return out;
}

std::string svg_fan(const toric::SystemOfFans& s) {
  if (s.rank() != 2) throw std::invalid_argument("plot needs a rank-2 system, got rank " + std::to_string(s.rank()));
  const double panel = 200, radius = 80;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(panel * s.size()) + " " +
                    num(panel + 20) + "\">\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    double cx = panel * i + panel / 2, cy = panel / 2;
    auto pt = [&](Dir d) { return num(cx + radius * d.x) + "," + num(cy - radius * d.y); };
    out += "<rect x=\"" + num(panel * i + 5) + "\" y=\"5\" width=\"" + num(panel - 10) + "\" height=\"" +
           num(panel - 10) + "\" fill=\"none\" stroke=\"#999\"/>\n";
    for (const auto& c : toric::maximal_cones(s.delta(i, i))) {
      out += "<g><title>" + escape(c.to_string()) + "</title>";
      if (c.dim() == 2 && c.lineality().basis().size() == 2) {
        out += "<rect x=\"" + num(cx - radius) + "\" y=\"" + num(cy - radius) + "\" width=\"" + num(2 * radius) +
               "\" height=\"" + num(2 * radius) + "\" fill=\"#cde\"/>";
      } else if (c.dim() == 2) {
        // Sweep the generators by angle around the relative interior.
        Dir mid = direction(c.relint_point());
        double base = std::atan2(mid.y, mid.x);
        std::vector<std::pair<double, Dir>> dirs;
        std::vector<toric::IntVector> gens = c.rays();
        for (const auto& b : c.lineality().basis()) {
          gens.push_back(b);
          gens.push_back(toric::negate(b));
        }
        for (const auto& g : gens) {
          Dir d = direction(g);
          double a = std::atan2(d.y, d.x) - base;
          while (a <= -M_PI) a += 2 * M_PI;
          while (a > M_PI) a -= 2 * M_PI;
          dirs.push_back({a, d});
        }
        std::sort(dirs.begin(), dirs.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        std::string pts = num(cx) + "," + num(cy);
        for (const auto& [a, d] : dirs) pts += " " + pt(d);
        out += "<polygon points=\"" + pts + "\" fill=\"#cde\" stroke=\"#357\"/>";
      }
      for (const auto& r : c.rays())
        out += "<line x1=\"" + num(cx) + "\" y1=\"" + num(cy) + "\" x2=\"" + num(cx + radius * direction(r).x) +
               "\" y2=\"" + num(cy - radius * direction(r).y) + "\" stroke=\"#035\" stroke-width=\"2\"/>";
      for (const auto& b : c.lineality().basis()) {
        Dir d = direction(b);
        out += "<line x1=\"" + num(cx - radius * d.x) + "\" y1=\"" + num(cy + radius * d.y) + "\" x2=\"" +
               num(cx + radius * d.x) + "\" y2=\"" + num(cy - radius * d.y) + "\" stroke=\"#035\" stroke-width=\"2\"/>";
      }
      out += "</g>\n";
    }
    out += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"2\"/>\n";
    out += "<text x=\"" + num(cx) + "\" y=\"" + num(panel + 12) + "\" text-anchor=\"middle\">chart " +
           std::to_string(i + 1) + "</text>\n";
  }
  return out + "</svg>\n";
}

std::string svg_poset(const toric::OrbitClassTable& t) {
  std::map<std::size_t, std::vector<std::size_t>> levels;
  std::size_t top = 0;
  for (std::size_t c = 0; c < t.size(); ++c) {
    levels[t.at(c).cone.dim()].push_back(c);
    top = std::max(top, t.at(c).cone.dim());
  }
  std::size_t widest = 1;
  for (const auto& [d, cs] : levels) widest = std::max(widest, cs.size());
  const double width = std::max(200.0, 60.0 * widest), step = 60;
  const double height = step * (top + 1) + 20;
  std::vector<std::pair<double, double>> pos(t.size());
  for (const auto& [d, cs] : levels)
    for (std::size_t k = 0; k < cs.size(); ++k)
      pos[cs[k]] = {width * (k + 1) / (cs.size() + 1), 30 + step * (top - d)};

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(width) + " " + num(height) +
                    "\">\n";
  for (auto [a, b] : t.covers())
    out += "<line x1=\"" + num(pos[a].first) + "\" y1=\"" + num(pos[a].second) + "\" x2=\"" + num(pos[b].first) +
           "\" y2=\"" + num(pos[b].second) + "\" stroke=\"#555\"/>\n";
  for (std::size_t c = 0; c < t.size(); ++c) {
    std::string charts;
    for (auto i : t.at(c).charts) charts += (charts.empty() ? "" : ",") + std::to_string(i + 1);
    out += "<g><title>" + escape(t.at(c).cone.to_string()) + " charts " + charts + "</title><circle cx=\"" +
           num(pos[c].first) + "\" cy=\"" + num(pos[c].second) + "\" r=\"12\" fill=\"#fff\" stroke=\"#035\"/>" +
           "<text x=\"" + num(pos[c].first) + "\" y=\"" + num(pos[c].second + 4) + "\" text-anchor=\"middle\">" +
           std::to_string(c) + "</text></g>\n";
  }
  return out + "</svg>\n";
}
