// Independent oracles and hand-rolled generators for the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "emptri/point_set.hpp"

namespace testing_support {

using Q = mpq_class;
using emptri::ExactPoint;

inline int sgn_q(const Q& v) { return sgn(v); }

/// (b - a) x (c - a), recomputed from scratch.
inline int orient3(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
  Q l = (b.x - a.x) * (c.y - a.y);
  Q r = (b.y - a.y) * (c.x - a.x);
  return sgn_q(Q(l - r));
}

inline bool strictly_inside(const ExactPoint& q, const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
  const int o = orient3(a, b, c);
  if (o == 0) return false;
  return orient3(a, b, q) == o && orient3(b, c, q) == o && orient3(c, a, q) == o;
}

inline bool in_general_position(const std::vector<ExactPoint>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k)
        if (orient3(p[i], p[j], p[k]) == 0) return false;
  return true;
}

/// Every non-degenerate triple with no point strictly inside, sorted.
inline std::vector<emptri::TriangleRef> empty_triangles_oracle(const std::vector<ExactPoint>& p) {
  std::vector<emptri::TriangleRef> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k) {
        if (orient3(p[i], p[j], p[k]) == 0) continue;
        bool empty = true;
        for (std::size_t q = 0; q < p.size() && empty; ++q)
          if (q != i && q != j && q != k && strictly_inside(p[q], p[i], p[j], p[k])) empty = false;
        if (empty) out.push_back({i, j, k});
      }
  return out;
}

inline std::uint64_t depth_oracle(const std::vector<ExactPoint>& p, const std::vector<emptri::TriangleRef>& t,
                                  const ExactPoint& q) {
  std::uint64_t c = 0;
  for (const auto& r : t) c += strictly_inside(q, p[r.i], p[r.j], p[r.k]);
  return c;
}

/// Uniform in [0, n) by rejection.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return v % n;
}

inline std::int64_t between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// n distinct integer points in [0, range)^2.
inline std::vector<ExactPoint> random_points(std::mt19937_64& rng, std::size_t n, std::int64_t range) {
  std::vector<ExactPoint> out;
  while (out.size() < n) {
    ExactPoint p(between(rng, 0, range - 1), between(rng, 0, range - 1));
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

/// Random points in general position, redrawn until no three are collinear.
inline emptri::PointSet random_gp_set(std::mt19937_64& rng, std::size_t n, std::int64_t range) {
  emptri::PointSet s;
  do s.points = random_points(rng, n, range);
  while (!in_general_position(s.points));
  return s;
}

/// Random points with rational coordinates of mixed denominators.
inline emptri::PointSet random_rational_gp_set(std::mt19937_64& rng, std::size_t n) {
  emptri::PointSet s;
  do {
    s.points.clear();
    while (s.points.size() < n) {
      ExactPoint p(Q(between(rng, -500, 500), between(rng, 1, 9)), Q(between(rng, -500, 500), between(rng, 1, 9)));
      if (std::find(s.points.begin(), s.points.end(), p) == s.points.end()) s.points.push_back(p);
    }
  } while (!in_general_position(s.points));
  return s;
}

}  // namespace testing_support
