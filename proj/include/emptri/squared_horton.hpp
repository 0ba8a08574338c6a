// Squared Horton sets: perturbations of the g x g grid in which every
// lattice-spanned line becomes a (rotated) Horton set.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "emptri/lattice.hpp"
#include "emptri/point_set.hpp"
#include "emptri/validation.hpp"

namespace emptri {

/// Grid points are (i, j) with 1 <= i, j <= g.
struct PerturbationMap {
  int g = 0;
  Rational eps_x, eps_y;
  /// position[(i - 1) * g + (j - 1)] is the index of the image of (i, j).
  std::vector<std::size_t> position;

  std::size_t at(std::int64_t i, std::int64_t j) const {
    return position[static_cast<std::size_t>((i - 1) * g + (j - 1))];
  }
  /// Inverse map: grid point of each index of the point set.
  std::vector<LatticePoint> preimages() const;
};

struct SquaredHorton {
  PointSet set;
  PerturbationMap map;
};

/// g must be a power of two, g >= 2. The image of (i, j) is
/// (i + ey(j), j + hx(i)) where hx and -ey are rescaled Horton y-coordinates.
/// eps values are shrunk until `validate_squared_horton` passes in `mode`.
SquaredHorton generate_squared_horton(int g, ValidationMode mode = ValidationMode::full());

/// Builds the perturbation for fixed eps values without validating.
SquaredHorton build_squared_horton(int g, const Rational& eps_x, const Rational& eps_y);

/// Map recovered by rounding each point to its nearest grid point (used for files).
PerturbationMap reconstruct_perturbation_map(const PointSet& s, int g);

/// Checks: "consistency", "orientation" (non-collinear grid triples),
/// "lines" (non-vertical lattice lines with >= 3 points) and "columns".
/// Sampled mode samples the triples; the line checks are always exhaustive.
ValidationReport validate_squared_horton(const PointSet& s, const PerturbationMap& pm,
                                         ValidationMode mode);

struct LatticeLine {
  PrimitiveDirection dir;
  std::int64_t index = 0;               ///< line_family_index of the members
  std::vector<LatticePoint> members;    ///< sorted along dir
};

/// Every maximal lattice line with at least two points of {1..g}^2, sorted by
/// direction, then index.
std::vector<LatticeLine> lattice_lines_of_grid(int g);

/// The images of the two lines are each Horton along the direction and one is
/// high above the other while that other is deep below it.
/// Throws std::invalid_argument for non-parallel lines.
CheckResult check_strip_union(const PointSet& s, const PerturbationMap& pm, const LatticeLine& line1,
                              const LatticeLine& line2);
bool strip_union_is_horton(const PointSet& s, const PerturbationMap& pm, const LatticeLine& line1,
                           const LatticeLine& line2);

}  // namespace emptri
