#pragma once

#include "toric/sysfan.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line, column;
};

struct MapBlock {
  LatticeMap f;
  /// 0-based chart indices; absent for maps without an index map.
  std::optional<std::vector<std::size_t>> index;

  friend bool operator==(const MapBlock&, const MapBlock&) = default;
};

/// Line-oriented system description:
///
///   toricsys 1
///   rank 2
///   chart 1 = [(1,0)]
///   chart 2 = [(0,1)]
///   glue 1 2 = []
///   sublattice L = (1,-1)
///   map P = (1,1)
///   index P = 1 2
///
/// Each bracket group generates one cone, `[]` is the zero cone. Charts are
/// numbered 1..m and carry the maximal cones of Delta_ii. Glueing pairs that
/// are not listed get the minimal cone of the first chart. Map rows are the
/// rows of the matrix. `#` starts a comment.
struct Document {
  int version = 1;
  SystemOfFans system;
  std::map<std::string, Sublattice> sublattices;
  std::map<std::string, MapBlock> maps;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws ParseError; does not run validate() on the system.
Document parse_document(const std::string& text);
std::string emit_document(const Document& doc);
std::string emit_system(const SystemOfFans& s);

/// Generators written by emit: rays, then +-b for each lineality basis
/// vector b.
std::vector<IntVector> cone_generators(const Cone& c);

}  // namespace toric
