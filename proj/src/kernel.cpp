#include "emptri/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace emptri {

ExactPoint::ExactPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {
  x.canonicalize();
  y.canonicalize();
}

std::strong_ordering operator<=>(const ExactPoint& a, const ExactPoint& b) {
  int c = cmp(a.x, b.x);
  if (c == 0) c = cmp(a.y, b.y);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExactPoint::to_string() const {
  return "(" + x.get_str() + ", " + y.get_str() + ")";
}

ExactPoint operator+(const ExactPoint& a, const ExactPoint& b) {
  return {Rational(a.x + b.x), Rational(a.y + b.y)};
}
ExactPoint operator-(const ExactPoint& a, const ExactPoint& b) {
  return {Rational(a.x - b.x), Rational(a.y - b.y)};
}
ExactPoint operator*(const Rational& s, const ExactPoint& p) {
  return {Rational(s * p.x), Rational(s * p.y)};
}

Sign sign_of(const Rational& v) { return static_cast<Sign>(sgn(v)); }

Rational cross(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
  return Rational((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

Sign orient(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
  return sign_of(cross(a, b, c));
}

Location point_in_triangle(const ExactPoint& q, const ExactPoint& a, const ExactPoint& b,
                           const ExactPoint& c) {
  const Sign o = orient(a, b, c);
  const int s1 = to_int(orient(a, b, q));
  const int s2 = to_int(orient(b, c, q));
  const int s3 = to_int(orient(c, a, q));
  if (o == Sign::Zero) {
    // Degenerate: q is on the segment hull or outside.
    if (s1 != 0 || s2 != 0 || s3 != 0) return Location::Outside;
    const ExactPoint lo = std::min({a, b, c});
    const ExactPoint hi = std::max({a, b, c});
    return (lo <= q && q <= hi) ? Location::Boundary : Location::Outside;
  }
  const int want = to_int(o);
  if (s1 == want && s2 == want && s3 == want) return Location::Inside;
  if (s1 == -want || s2 == -want || s3 == -want) return Location::Outside;
  return Location::Boundary;
}

ConvexPolygon ConvexPolygon::from_ccw(std::vector<ExactPoint> v) {
  const std::size_t n = v.size();
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      if (orient(v[i], v[(i + 1) % n], v[(i + 2) % n]) != Sign::Positive)
        throw std::invalid_argument("ConvexPolygon: vertices are not strictly convex ccw");
    }
  } else if (n == 2 && v[0] == v[1]) {
    throw std::invalid_argument("ConvexPolygon: repeated vertex");
  }
  auto start = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), start, v.end());
  return ConvexPolygon(std::move(v));
}

bool ConvexPolygon::contains(const ExactPoint& q) const {
  const std::size_t n = vertices_.size();
  if (n == 0) return false;
  if (n == 1) return q == vertices_[0];
  if (n == 2) {
    return orient(vertices_[0], vertices_[1], q) == Sign::Zero &&
           std::min(vertices_[0], vertices_[1]) <= q && q <= std::max(vertices_[0], vertices_[1]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(vertices_[i], vertices_[(i + 1) % n], q) == Sign::Negative) return false;
  }
  return true;
}

ConvexPolygon convex_hull(std::span<const ExactPoint> pts) {
  std::vector<ExactPoint> p(pts.begin(), pts.end());
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return ConvexPolygon(std::move(p));

  std::vector<ExactPoint> hull;
  hull.reserve(2 * p.size());
  for (const auto& q : p) {
    while (hull.size() >= 2 && orient(hull[hull.size() - 2], hull.back(), q) != Sign::Positive)
      hull.pop_back();
    hull.push_back(q);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = p.rbegin() + 1; it != p.rend(); ++it) {
    while (hull.size() >= lower && orient(hull[hull.size() - 2], hull.back(), *it) != Sign::Positive)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  return ConvexPolygon(std::move(hull));
}

bool in_convex_position(std::span<const ExactPoint> pts) {
  return convex_hull(pts).size() == pts.size();
}

namespace {

// Closed half-plane a*x + b*y + c >= 0.
struct HalfPlane {
  Rational a, b, c;
  Rational eval(const ExactPoint& p) const { return Rational(a * p.x + b * p.y + c); }
};

std::vector<HalfPlane> half_planes_of(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  std::vector<HalfPlane> out;
  auto edge = [&](const ExactPoint& u, const ExactPoint& w) {
    Rational a = -(w.y - u.y);
    Rational b = w.x - u.x;
    Rational c = -(a * u.x + b * u.y);
    out.push_back({a, b, c});
  };
  if (v.size() >= 3) {
    for (std::size_t i = 0; i < v.size(); ++i) edge(v[i], v[(i + 1) % v.size()]);
  } else if (v.size() == 2) {
    edge(v[0], v[1]);
    edge(v[1], v[0]);
    const Rational dx = v[1].x - v[0].x, dy = v[1].y - v[0].y;
    out.push_back({dx, dy, Rational(-(dx * v[0].x + dy * v[0].y))});
    out.push_back({Rational(-dx), Rational(-dy), Rational(dx * v[1].x + dy * v[1].y)});
  } else if (v.size() == 1) {
    out.push_back({1, 0, Rational(-v[0].x)});
    out.push_back({-1, 0, v[0].x});
    out.push_back({0, 1, Rational(-v[0].y)});
    out.push_back({0, -1, v[0].y});
  }
  return out;
}

// Sutherland-Hodgman step; handles one- and two-vertex inputs.
std::vector<ExactPoint> clip(const std::vector<ExactPoint>& poly, const HalfPlane& h) {
  std::vector<ExactPoint> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ExactPoint& p = poly[i];
    const ExactPoint& q = poly[(i + 1) % n];
    const Rational fp = h.eval(p);
    const Rational fq = h.eval(q);
    if (sgn(fp) >= 0) out.push_back(p);
    if ((sgn(fp) > 0 && sgn(fq) < 0) || (sgn(fp) < 0 && sgn(fq) > 0)) {
      const Rational t = fp / (fp - fq);
      out.push_back(p + t * (q - p));
    }
  }
  std::vector<ExactPoint> dedup;
  for (auto& p : out) {
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(std::move(p));
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

}  // namespace

bool hulls_have_common_point(std::span<const ConvexPolygon> polys) {
  if (polys.empty()) return false;
  std::vector<ExactPoint> region = polys[0].vertices();
  for (std::size_t i = 1; i < polys.size() && !region.empty(); ++i) {
    for (const auto& h : half_planes_of(polys[i])) {
      region = clip(region, h);
      if (region.empty()) break;
    }
  }
  return !region.empty();
}

}  // namespace emptri
