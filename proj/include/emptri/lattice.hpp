// Integer-lattice utilities: totients, primitive directions, heights of grid
// triangles and interior-empty enumeration.
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace emptri {

struct LatticePoint {
  std::int64_t x = 0, y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Three pairwise-distinct lattice points, possibly collinear.
struct GridTriangle {
  LatticePoint a, b, c;
  friend auto operator<=>(const GridTriangle&, const GridTriangle&) = default;
};

/// Direction (s, r) = (dx, dy) with gcd 1, s > 0 or (s == 0 and r > 0).
struct PrimitiveDirection {
  std::int64_t s = 1, r = 0;
  friend auto operator<=>(const PrimitiveDirection&, const PrimitiveDirection&) = default;
};

std::uint64_t totient(std::uint64_t d);
/// phi(0..n) by sieve; entry 0 is 0.
std::vector<std::uint64_t> totient_table(std::uint64_t n);

struct TotientSum {
  long double value = 0;
  long double lower = 0;  ///< rigorous enclosure of the exact sum
  long double upper = 0;
  long double ratio = 0;  ///< value / n
  long double ratio_upper = 0;
};

/// sum_{d=1}^{s} phi(d) (s/d) log2(s/d) with s = sqrt(n). Throws if n is not a square.
TotientSum totient_sum(std::uint64_t n);
/// Same, with a precomputed table covering 1..sqrt(n).
TotientSum totient_sum(std::uint64_t n, const std::vector<std::uint64_t>& phi);

PrimitiveDirection primitive_direction(LatticePoint a, LatticePoint b);

/// r * q.x - s * q.y: equal for lattice points on the same line of this direction.
std::int64_t line_family_index(PrimitiveDirection dir, LatticePoint q);

/// Edge 0 = (a, b), 1 = (b, c), 2 = (c, a).
std::int64_t height_wrt_edge(const GridTriangle& t, int edge);

struct TriangleHeight {
  std::int64_t height = 0;
  int base_edge = 0;
};
/// Minimum height over the edges; ties go to the lowest edge index.
TriangleHeight triangle_height(const GridTriangle& t);

bool is_collinear(const GridTriangle& t);
/// Non-degenerate: no lattice point strictly inside. Degenerate: the middle
/// point is the only lattice point strictly between the extreme two.
bool is_interior_empty(const GridTriangle& t);
/// Number of lattice points strictly inside (0 for degenerate triangles).
std::int64_t interior_lattice_points(const GridTriangle& t);

/// All interior-empty triples of {0..g-1}^2, degenerate ones included,
/// vertices in increasing lexicographic order. Requires 2 <= g <= 12.
std::vector<GridTriangle> enumerate_interior_empty_grid_triangles(int g);

}  // namespace emptri
