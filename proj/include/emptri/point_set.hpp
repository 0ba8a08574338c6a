// Point sets with family tags and construction parameters.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emptri/kernel.hpp"

namespace emptri {

enum class Family { Horton, SquaredHorton, DiamondSquaredHorton, Raw };

/// Short names used in files and on the command line: horton, sq-horton, diamond, raw.
std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct PointSet {
  std::vector<ExactPoint> points;
  Family family = Family::Raw;
  /// Construction parameters (k, g, m, eps_x, ...). Ordered so output is stable.
  std::map<std::string, std::string> params;
  /// Zero-based diamond of each point; empty unless the family is DiamondSquaredHorton.
  std::vector<std::size_t> diamond_id;

  std::size_t size() const { return points.size(); }
  const ExactPoint& operator[](std::size_t i) const { return points[i]; }

  /// Throws std::invalid_argument on repeated points, on a Horton set whose
  /// x-coordinates are not strictly increasing, or on a malformed id column.
  void validate() const;
};

/// Strictly increasing index triple.
struct TriangleRef {
  std::size_t i, j, k;
  friend auto operator<=>(const TriangleRef&, const TriangleRef&) = default;
};

/// Edge as an index pair with i < j.
struct EdgeRef {
  std::size_t i, j;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

}  // namespace emptri

namespace emptri {

/// Outcome of a validator: pass/fail plus a witness (indices into the
/// checked point set) and a short human-readable description.
struct CheckResult {
  bool ok = true;
  std::vector<std::size_t> witness;
  std::string detail;

  static CheckResult fail(std::vector<std::size_t> w, std::string why) {
    return {false, std::move(w), std::move(why)};
  }
};

}  // namespace emptri
