// Index-based Horton recursion over an integer frame.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "emptri/point_set.hpp"

namespace emptri::detail {

/// `upper` high above `lower` and `lower` deep below `upper`, where "above the
/// line through a, b" (a before b in the order) means sign * orient(a, b, c) > 0.
template <class A>
bool check_high_above(const std::vector<typename A::Point>& p, const std::vector<std::size_t>& lower,
                      const std::vector<std::size_t>& upper, int sign, CheckResult* out) {
  for (std::size_t a = 0; a < upper.size(); ++a)
    for (std::size_t b = a + 1; b < upper.size(); ++b)
      for (std::size_t c : lower)
        if (sign * A::orient(p[upper[a]], p[upper[b]], p[c]) >= 0) {
          if (out) *out = CheckResult::fail({upper[a], upper[b], c}, "point not below a line of the upper half");
          return false;
        }
  for (std::size_t a = 0; a < lower.size(); ++a)
    for (std::size_t b = a + 1; b < lower.size(); ++b)
      for (std::size_t c : upper)
        if (sign * A::orient(p[lower[a]], p[lower[b]], p[c]) <= 0) {
          if (out) *out = CheckResult::fail({lower[a], lower[b], c}, "point not above a line of the lower half");
          return false;
        }
  return true;
}

/// `idx` lists the points in their Horton order (x-order, or projection order).
/// sign = +1: the odd half is above at every level. sign = 0: each level may
/// put either half on top.
template <class A>
bool check_horton_indices(const std::vector<typename A::Point>& p, const std::vector<std::size_t>& idx,
                          int sign, CheckResult* out) {
  if (idx.size() <= 2) return true;
  std::vector<std::size_t> h0, h1;
  for (std::size_t i = 0; i < idx.size(); ++i) (i % 2 == 0 ? h0 : h1).push_back(idx[i]);
  if (!check_horton_indices<A>(p, h0, sign, out) || !check_horton_indices<A>(p, h1, sign, out)) return false;
  if (sign != 0) return check_high_above<A>(p, h0, h1, sign, out);
  return check_high_above<A>(p, h0, h1, +1, out) || check_high_above<A>(p, h1, h0, +1, nullptr);
}

}  // namespace emptri::detail
