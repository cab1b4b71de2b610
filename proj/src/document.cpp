#include "toric/document.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace toric {

namespace {

struct Token {
  enum Kind { word, number, symbol } kind;
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      ++i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (c == '-' && i == start + 1) throw ParseError(line_no, start + 1, "expected digits after '-'");
      out.push_back({Token::number, line.substr(start, i - start), start + 1});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_' || line[i] == '-'))
        ++i;
      out.push_back({Token::word, line.substr(start, i - start), start + 1});
    } else if (c == '=' || c == '(' || c == ')' || c == '[' || c == ']' || c == ',') {
      out.push_back({Token::symbol, std::string(1, c), start + 1});
      ++i;
    } else {
      throw ParseError(line_no, start + 1, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t end_column)
      : tokens_(std::move(tokens)), line_(line_no), end_(end_column) {}

  bool done() const { return pos_ == tokens_.size(); }
  std::size_t column() const { return done() ? end_ : tokens_[pos_].column; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }

  bool peek(const std::string& symbol) const {
    return !done() && tokens_[pos_].kind == Token::symbol && tokens_[pos_].text == symbol;
  }
  void expect(const std::string& symbol) {
    if (!peek(symbol)) fail("expected '" + symbol + "'");
    ++pos_;
  }
  std::string word() {
    if (done() || tokens_[pos_].kind != Token::word) fail("expected a name");
    return tokens_[pos_++].text;
  }
  Integer integer() {
    if (done() || tokens_[pos_].kind != Token::number) fail("expected an integer");
    return Integer(tokens_[pos_++].text);
  }
  std::size_t index() {
    std::size_t col = column();
    Integer v = integer();
    if (v < 1 || v > 1000000) throw ParseError(line_, col, "expected a positive index");
    return static_cast<std::size_t>(v);
  }
  IntVector vector(std::size_t rank) {
    std::size_t col = column();
    expect("(");
    IntVector v;
    if (!peek(")")) {
      v.push_back(integer());
      while (peek(",")) {
        expect(",");
        v.push_back(integer());
      }
    }
    expect(")");
    if (v.size() != rank)
      throw ParseError(line_, col,
                       "vector has " + std::to_string(v.size()) + " entries, rank is " + std::to_string(rank));
    return v;
  }
  std::vector<IntVector> vectors(std::size_t rank) {
    std::vector<IntVector> out;
    while (peek("(")) out.push_back(vector(rank));
    return out;
  }
  std::vector<Cone> cones(std::size_t rank) {
    std::vector<Cone> out;
    while (peek("[")) {
      expect("[");
      auto gens = vectors(rank);
      expect("]");
      out.push_back(gens.empty() ? Cone::zero(rank) : Cone::from_generators(rank, gens));
    }
    return out;
  }
  void finish() {
    if (!done()) fail("unexpected '" + tokens_[pos_].text + "'");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t end_;
};

std::string vector_text(const IntVector& v) { return to_string(v); }

std::string cone_text(const Cone& c) {
  std::string s = "[";
  for (const auto& g : cone_generators(c)) s += vector_text(g);
  return s + "]";
}

std::string cones_text(const std::vector<Cone>& cones) {
  std::string s;
  for (const auto& c : cones) s += (s.empty() ? "" : " ") + cone_text(c);
  return s;
}

}  // namespace

std::vector<IntVector> cone_generators(const Cone& c) {
  std::vector<IntVector> out = c.rays();
  for (const auto& b : c.lineality().basis()) {
    out.push_back(b);
    out.push_back(negate(b));
  }
  return out;
}

Document parse_document(const std::string& text) {
  Document doc;
  std::optional<std::size_t> rank;
  bool versioned = false;
  std::map<std::size_t, std::vector<Cone>> charts;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Cone>> glue;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> glue_line;
  std::map<std::string, std::vector<std::size_t>> indices;
  std::map<std::string, std::size_t> index_line;

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    LineParser p(std::move(tokens), line_no, line.size() + 1);
    std::size_t key_column = p.column();
    std::string key = p.word();
    if (!versioned) {
      if (key != "toricsys") throw ParseError(line_no, key_column, "expected 'toricsys <version>'");
      Integer v = p.integer();
      if (v != 1) throw ParseError(line_no, key_column, "unsupported version " + v.str());
      p.finish();
      versioned = true;
      continue;
    }
    if (key == "rank") {
      if (rank) p.fail("rank given twice");
      Integer r = p.integer();
      if (r < 0 || r > 64) throw ParseError(line_no, key_column, "rank out of range");
      rank = static_cast<std::size_t>(r);
      p.finish();
      continue;
    }
    if (!rank) throw ParseError(line_no, key_column, "'rank' must come before '" + key + "'");
    if (key == "chart") {
      std::size_t id = p.index();
      p.expect("=");
      auto cones = p.cones(*rank);
      p.finish();
      if (cones.empty()) throw ParseError(line_no, key_column, "chart " + std::to_string(id) + " has no cones");
      if (!charts.emplace(id, std::move(cones)).second)
        throw ParseError(line_no, key_column, "chart " + std::to_string(id) + " given twice");
    } else if (key == "glue") {
      std::size_t col = p.column();
      std::size_t i = p.index();
      std::size_t j = p.index();
      if (i >= j) throw ParseError(line_no, col, "glue needs two chart ids i < j");
      p.expect("=");
      auto cones = p.cones(*rank);
      p.finish();
      if (cones.empty()) throw ParseError(line_no, col, "glueing has no cones");
      if (!glue.emplace(std::make_pair(i, j), std::move(cones)).second)
        throw ParseError(line_no, col, "glueing given twice");
      glue_line[{i, j}] = line_no;
    } else if (key == "sublattice") {
      std::string name = p.word();
      p.expect("=");
      auto gens = p.vectors(*rank);
      p.finish();
      if (!doc.sublattices.emplace(name, Sublattice::generated_by(*rank, gens)).second)
        throw ParseError(line_no, key_column, "sublattice " + name + " given twice");
    } else if (key == "map") {
      std::string name = p.word();
      p.expect("=");
      auto rows = p.vectors(*rank);
      p.finish();
      if (!doc.maps.emplace(name, MapBlock{LatticeMap(IntMatrix::from_rows(*rank, rows)), std::nullopt}).second)
        throw ParseError(line_no, key_column, "map " + name + " given twice");
    } else if (key == "index") {
      std::string name = p.word();
      p.expect("=");
      std::vector<std::size_t> mu;
      while (!p.done()) mu.push_back(p.index() - 1);
      if (!indices.emplace(name, std::move(mu)).second)
        throw ParseError(line_no, key_column, "index map " + name + " given twice");
      index_line[name] = line_no;
    } else {
      throw ParseError(line_no, key_column, "unknown keyword '" + key + "'");
    }
  }
  if (!versioned) throw ParseError(line_no + 1, 1, "missing 'toricsys' header");
  if (!rank) throw ParseError(line_no + 1, 1, "missing 'rank'");
  if (charts.empty()) throw ParseError(line_no + 1, 1, "no charts");

  const std::size_t m = charts.size();
  if (charts.rbegin()->first != m) throw ParseError(line_no + 1, 1, "chart ids must be 1.." + std::to_string(m));
  for (const auto& [ij, cones] : glue)
    if (ij.second > m) throw ParseError(glue_line[ij], 1, "glueing refers to an unknown chart");
  for (const auto& [name, mu] : indices) {
    auto it = doc.maps.find(name);
    if (it == doc.maps.end()) throw ParseError(index_line[name], 1, "index map for unknown map " + name);
    if (mu.size() != m) throw ParseError(index_line[name], 1, "index map needs one entry per chart");
    it->second.index = mu;
  }

  std::vector<ConeSet> diagonal;
  for (const auto& [id, cones] : charts) diagonal.push_back(face_closure(cones));
  std::map<std::pair<std::size_t, std::size_t>, ConeSet> upper;
  for (const auto& [ij, cones] : glue) upper[{ij.first - 1, ij.second - 1}] = face_closure(cones);
  doc.system = SystemOfFans::from_upper(*rank, std::move(diagonal), upper);
  return doc;
}

std::string emit_system(const SystemOfFans& s) {
  std::string out = "rank " + std::to_string(s.rank()) + "\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += "chart " + std::to_string(i + 1) + " = " + cones_text(maximal_cones(s.delta(i, i))) + "\n";
  ConeSet fallback{s.minimal()};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s.delta(i, j) != fallback)
        out += "glue " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " = " +
               cones_text(maximal_cones(s.delta(i, j))) + "\n";
  return out;
}

std::string emit_document(const Document& doc) {
  std::string out = "toricsys " + std::to_string(doc.version) + "\n" + emit_system(doc.system);
  for (const auto& [name, l] : doc.sublattices) {
    out += "sublattice " + name + " =";
    for (const auto& b : l.basis()) out += " " + vector_text(b);
    out += "\n";
  }
  for (const auto& [name, m] : doc.maps) {
    out += "map " + name + " =";
    for (std::size_t r = 0; r < m.f.target_rank(); ++r) out += " " + vector_text(m.f.matrix().row(r));
    out += "\n";
    if (m.index) {
      out += "index " + name + " =";
      for (auto i : *m.index) out += " " + std::to_string(i + 1);
      out += "\n";
    }
  }
  return out;
}

}  // namespace toric
