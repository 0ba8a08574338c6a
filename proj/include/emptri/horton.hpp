// Horton sets: construction, recursive subsets and the Horton property.
#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "emptri/point_set.hpp"

namespace emptri {

/// 2^k points with x_i = i and integer y. Each doubling step adds a copy
/// shifted right by 1/2 of the current spacing and raised by the smallest power
/// of four, starting at 4^t, for which the result is Horton.
PointSet generate_horton(int k);

/// Positions (into the x-ordered set of size n) selected by a binary string.
/// Bit 0 keeps every second point starting with the first, bit 1 the others.
std::vector<std::size_t> selector_indices(std::size_t n, std::string_view bits);
PointSet subset_by_selector(const PointSet& x, std::string_view bits);

/// Points are taken in increasing x-order (any input order is accepted; the
/// witness refers to input indices). At every level one half must be high above
/// the other and the other deep below it; either half may be the upper one, so
/// consecutive and stride subsets of a Horton set pass again.
/// Throws std::invalid_argument on equal x.
CheckResult check_horton(std::span<const ExactPoint> pts);
/// As check_horton, but the half without the leftmost point must be the upper
/// one at every level (the orientation produced by generate_horton).
CheckResult check_horton_strict(std::span<const ExactPoint> pts);
bool is_horton(const PointSet& x);

/// Same recursion, with points ordered by their projection onto `direction`,
/// so mirrored and rotated copies pass. Throws on tied projections.
CheckResult check_horton_along_direction(std::span<const ExactPoint> pts, const ExactPoint& direction);
bool is_horton_along_direction(std::span<const ExactPoint> pts, const ExactPoint& direction);

/// Indices of `pts` sorted by projection onto `direction`; throws on ties.
std::vector<std::size_t> order_along(std::span<const ExactPoint> pts, const ExactPoint& direction);

/// {p_start, p_start+stride, ...}, `count` points.
PointSet consecutive_or_stride_subset(const PointSet& x, std::size_t start, std::size_t stride,
                                      std::size_t count);

/// Visible edges by direct orientation tests. Requires |H| >= 4. Sorted.
std::vector<EdgeRef> visible_edges_geometric(const PointSet& h);
/// Consecutive pairs of H_b for b = 1 0...0 and b = 0 1...1. Requires |H| >= 4. Sorted.
std::vector<EdgeRef> visible_edges_structural(const PointSet& h);

}  // namespace emptri
