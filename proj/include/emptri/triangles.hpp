// Empty triangles, stabbing depth and incidence counts.
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "emptri/point_set.hpp"
#include "emptri/squared_horton.hpp"

namespace emptri {

/// Thrown when three input points are collinear; `witness` holds their indices.
class GeneralPositionError : public std::invalid_argument {
 public:
  GeneralPositionError(std::vector<std::size_t> w, const std::string& what)
      : std::invalid_argument(what), witness(std::move(w)) {}
  std::vector<std::size_t> witness;
};

/// No three points collinear (O(n^2 log n)); the witness is a collinear triple.
CheckResult check_general_position(const PointSet& s);

/// Direct O(n^4) test of every non-degenerate triple; n <= 40. Sorted.
std::vector<TriangleRef> empty_triangles_bruteforce(const PointSet& s);

struct Enumeration {
  std::vector<TriangleRef> triangles;  ///< sorted
  bool truncated = false;              ///< stopped after `budget` triangles
};

/// Output-sensitive enumeration: for each point p, the points lexicographically
/// after p are sorted by angle around p and the empty triangles with p as
/// smallest vertex are read off the visibility graph of that fan.
/// O(n^2 log n + tau). Throws GeneralPositionError.
Enumeration empty_triangles_fast(const PointSet& s,
                                 std::uint64_t budget = std::numeric_limits<std::uint64_t>::max());

/// Triangles for which q is strictly interior.
std::uint64_t stab_count(const PointSet& s, const ExactPoint& q, std::span<const TriangleRef> triangles);

std::uint64_t incidence_count(const PointSet& s, std::size_t p, std::span<const TriangleRef> triangles);
/// incidence_count for every point at once.
std::vector<std::uint64_t> incidence_counts(std::size_t n, std::span<const TriangleRef> triangles);

enum Strategy : unsigned {
  kCentroids = 1u << 0,    ///< centroid of every empty triangle
  kGridCells = 1u << 1,    ///< perturbed centers of grid cells (grid-backed families)
  kMidpoints = 1u << 2,    ///< midpoints of point pairs, nudged to both sides
  kLocalSearch = 1u << 3,  ///< centroids of the triangles stabbed by the best point so far
};
/// Parses e.g. "a+b+d" or "centroids,local"; throws std::invalid_argument.
unsigned parse_strategies(const std::string& text);
std::string strategies_to_string(unsigned strategies);

struct StabEstimate {
  ExactPoint point;
  std::uint64_t count = 0;
  bool exact = false;  ///< true only for max_stab_exact_small
  std::uint64_t candidates = 0;
  unsigned local_rounds = 0;
  bool sampled = false;  ///< centroid candidates were subsampled
};

inline constexpr std::uint64_t kExactStabMaxTriangles = 2000;

/// Exact maximum depth over the plane; tau <= 2000. Ties go to the
/// lexicographically smallest reported point.
StabEstimate max_stab_exact_small(const PointSet& s, std::span<const TriangleRef> triangles);

struct CandidateOptions {
  unsigned strategies = kCentroids | kGridCells | kLocalSearch;
  std::uint64_t seed = 0;
  /// Centroid candidates beyond this many are replaced by a seeded sample.
  std::uint64_t max_centroids = std::numeric_limits<std::uint64_t>::max();
};

/// Best depth over a deterministic candidate set; a lower bound on the maximum.
StabEstimate max_stab_candidates(const PointSet& s, std::span<const TriangleRef> triangles,
                                 const CandidateOptions& options);

/// Every triangle pulls back to a collinear or interior-empty grid triple.
CheckResult degenerate_pullback_check(const PointSet& s, const PerturbationMap& pm,
                                      std::span<const TriangleRef> triangles);

/// Averages of the four perturbed corners of every unit grid cell, for sets
/// whose family records a grid (sq-horton, diamond). Empty otherwise.
std::vector<ExactPoint> grid_cell_points(const PointSet& s);

}  // namespace emptri
