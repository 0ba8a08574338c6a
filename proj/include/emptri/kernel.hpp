// Exact planar predicates over arbitrary-precision rationals.
#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace emptri {

using Rational = mpq_class;
using Integer = mpz_class;

/// Point with exact rational coordinates, always kept in lowest terms.
struct ExactPoint {
  Rational x;
  Rational y;

  ExactPoint() = default;
  ExactPoint(Rational px, Rational py);
  ExactPoint(long px, long py) : ExactPoint(Rational(px), Rational(py)) {}

  friend bool operator==(const ExactPoint& a, const ExactPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  /// Lexicographic: x first, then y.
  friend std::strong_ordering operator<=>(const ExactPoint& a, const ExactPoint& b);

  std::string to_string() const;
};

ExactPoint operator+(const ExactPoint& a, const ExactPoint& b);
ExactPoint operator-(const ExactPoint& a, const ExactPoint& b);
ExactPoint operator*(const Rational& s, const ExactPoint& p);

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline int to_int(Sign s) { return static_cast<int>(s); }
Sign sign_of(const Rational& v);

/// Sign of (b - a) x (c - a); Positive means counterclockwise.
Sign orient(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

/// (b - a) x (c - a), exactly.
Rational cross(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

enum class Location { Inside, Boundary, Outside };

/// Degenerate triangles never report Inside.
Location point_in_triangle(const ExactPoint& q, const ExactPoint& a, const ExactPoint& b,
                           const ExactPoint& c);

/// Counterclockwise convex polygon, strictly convex, starting at its
/// lexicographically smallest vertex. Hulls of one or two points are kept as
/// one- or two-vertex polygons.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  /// Takes vertices that are already a strictly convex ccw cycle and rotates
  /// them into canonical form. Throws std::invalid_argument otherwise.
  static ConvexPolygon from_ccw(std::vector<ExactPoint> vertices);

  const std::vector<ExactPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  /// Closed containment (boundary counts).
  bool contains(const ExactPoint& q) const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  explicit ConvexPolygon(std::vector<ExactPoint> v) : vertices_(std::move(v)) {}
  friend ConvexPolygon convex_hull(std::span<const ExactPoint> pts);
  std::vector<ExactPoint> vertices_;
};

/// Monotone chain hull; collinear boundary points are dropped.
ConvexPolygon convex_hull(std::span<const ExactPoint> pts);

/// True iff every input point is a hull vertex (duplicates make it false).
bool in_convex_position(std::span<const ExactPoint> pts);

/// Whether the closed polygons share at least one point.
bool hulls_have_common_point(std::span<const ConvexPolygon> polys);

}  // namespace emptri
