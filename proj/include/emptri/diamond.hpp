// Diamond gadgets (four square corners plus four inward-bowed arcs) and
// squared Horton sets with every point replaced by a small diamond.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "emptri/point_set.hpp"
#include "emptri/squared_horton.hpp"
#include "emptri/validation.hpp"

namespace emptri {

struct DiamondSpec {
  ExactPoint center;
  Rational half_width;
  int k = 4;
  Rational sag;  ///< largest inward displacement of an arc point
};

/// Number of non-corner points on each arc (bottom, right, top, left).
std::array<int, 4> arc_sizes(int k);

/// k points: corners (bottom-left, bottom-right, top-right, top-left), then the
/// arc points of the bottom, right, top and left arcs, each in ccw order. Arc
/// points lie on the parabola through the two corners whose apex is `sag`
/// inside the edge midpoint.
PointSet generate_diamond(const DiamondSpec& spec);

/// Which diamond every point belongs to, and the corner / arc structure.
struct DiamondIndex {
  std::size_t m = 0;
  int k = 0;
  std::vector<std::size_t> diamond_of;
  std::vector<std::size_t> local;
  std::vector<ExactPoint> centers;
  std::vector<std::vector<std::size_t>> members;
  /// corners[d] = bottom-left, bottom-right, top-right, top-left.
  std::vector<std::array<std::size_t, 4>> corners;
  /// arcs[d][a]: the two corners of arc a and its points, in ccw order.
  std::vector<std::array<std::vector<std::size_t>, 4>> arcs;
};

struct DiamondSquaredHorton {
  PointSet set;
  DiamondIndex index;
};

/// Diamonds of half-width h and sag h/4 on the given centers, without validation.
DiamondSquaredHorton build_diamond_squared_horton(const std::vector<ExactPoint>& centers, int k,
                                                  const Rational& half_width, const Rational& sag);

/// m a power of four (m = 1 gives a single diamond), k >= 4. The centers are
/// a squared Horton set; the half-width starts at a power of two below 1/8 of
/// the smallest center-to-line distance and is divided by 16 until
/// validate_diamond_properties passes.
DiamondSquaredHorton generate_diamond_squared_horton(std::size_t m, int k);

/// Rebuilds the index from the diamond-id column of a point set.
DiamondIndex reconstruct_diamond_index(const PointSet& s);

/// Checks "orientation" (triples from three diamonds keep the orientation of
/// the centers), "facing_arcs" (every pair of diamonds has two arcs in joint
/// convex position), "five_diamonds" and "six_diamonds" (the pair-hull triple
/// intersections are empty). Full mode checks orientation through the square
/// corners, which covers every point triple. The five- and six-diamond checks
/// are exhaustive for m <= 6 and sampled otherwise.
ValidationReport validate_diamond_properties(const PointSet& s, const DiamondIndex& index, ValidationMode mode);

struct SizeRuleParams {
  std::uint64_t n_requested = 0;
  double alpha = 0;
  int g = 1;
  std::size_t m = 1;
  int k = 4;
  bool k_clamped = false;  ///< k was raised to the minimum of 4
  std::uint64_t n_realized = 0;
  double alpha_realized = 0;  ///< log m / log n_realized
};

/// g = 2^ceil(log2 n^(alpha/2)), m = g^2, k = max(4, ceil(n / m)).
SizeRuleParams size_rule_parameters(std::uint64_t n, double alpha);

}  // namespace emptri
