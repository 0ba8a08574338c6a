#include "emptri/point_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace emptri {

std::string family_name(Family f) {
  switch (f) {
    case Family::Horton: return "horton";
    case Family::SquaredHorton: return "sq-horton";
    case Family::DiamondSquaredHorton: return "diamond";
    case Family::Raw: return "raw";
  }
  return "raw";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "horton") return Family::Horton;
  if (name == "sq-horton") return Family::SquaredHorton;
  if (name == "diamond") return Family::DiamondSquaredHorton;
  if (name == "raw") return Family::Raw;
  return std::nullopt;
}

void PointSet::validate() const {
  std::vector<ExactPoint> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("point set contains a repeated point");
  if (family == Family::Horton) {
    for (std::size_t i = 1; i < points.size(); ++i)
      if (!(points[i - 1].x < points[i].x))
        throw std::invalid_argument("Horton set is not in strictly increasing x-order");
  }
  if (family == Family::DiamondSquaredHorton) {
    if (diamond_id.size() != points.size())
      throw std::invalid_argument("diamond id column has the wrong length");
  } else if (!diamond_id.empty()) {
    throw std::invalid_argument("diamond ids given for a non-diamond family");
  }
}

}  // namespace emptri
