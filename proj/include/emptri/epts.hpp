// EPTS v1 point-set files.
//
//   EPTS v1 <n> <family> <D>
//   # key=value            (any number of metadata lines)
//   X Y [diamond_id]       (n lines; true coordinates are X/D, Y/D)
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "emptri/point_set.hpp"

namespace emptri {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

/// D is the least common denominator of all coordinates.
void write_epts(std::ostream& out, const PointSet& s);
std::string to_epts(const PointSet& s);

/// Throws ParseError; the result passes PointSet::validate().
PointSet read_epts(std::istream& in);
PointSet parse_epts(const std::string& text);

PointSet load_epts(const std::string& path);
void save_epts(const std::string& path, const PointSet& s);

}  // namespace emptri
