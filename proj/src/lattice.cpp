#include "emptri/lattice.hpp"

#include <cfloat>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace emptri {

namespace {

std::int64_t cross(LatticePoint a, LatticePoint b, LatticePoint c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::int64_t gcd_of(LatticePoint a, LatticePoint b) {
  return std::gcd(std::llabs(b.x - a.x), std::llabs(b.y - a.y));
}

std::uint64_t isqrt_exact(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  if (s * s != n) throw std::invalid_argument("totient_sum: " + std::to_string(n) + " is not a perfect square");
  return s;
}

}  // namespace

std::uint64_t totient(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("totient: d must be positive");
  std::uint64_t result = d;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

std::vector<std::uint64_t> totient_table(std::uint64_t n) {
  std::vector<std::uint64_t> phi(n + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (phi[p] != p) continue;
    for (std::uint64_t q = p; q <= n; q += p) phi[q] -= phi[q] / p;
  }
  return phi;
}

TotientSum totient_sum(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient_sum: n must be positive");
  return totient_sum(n, totient_table(isqrt_exact(n)));
}

TotientSum totient_sum(std::uint64_t n, const std::vector<std::uint64_t>& phi) {
  if (n == 0) throw std::invalid_argument("totient_sum: n must be positive");
  const std::uint64_t s = isqrt_exact(n);
  if (phi.size() <= s) throw std::invalid_argument("totient_sum: table too small");
  // Each term is a product of a few correctly rounded operations and one
  // log2l call; a generous per-term relative bound of 16 ulps plus one rounding
  // per addition encloses the exact value.
  long double sum = 0, err = 0;
  const long double eps = LDBL_EPSILON;
  for (std::uint64_t d = 1; d <= s; ++d) {
    const long double q = static_cast<long double>(s) / static_cast<long double>(d);
    const long double term = static_cast<long double>(phi[d]) * q * std::log2l(q);
    sum += term;
    err += std::fabs(term) * 16 * eps + std::fabs(sum) * eps;
  }
  TotientSum out;
  out.value = sum;
  out.lower = std::nextafterl(sum - err, -INFINITY);
  out.upper = std::nextafterl(sum + err, INFINITY);
  if (out.lower < 0) out.lower = 0;
  out.ratio = sum / static_cast<long double>(n);
  out.ratio_upper = std::nextafterl(out.upper / static_cast<long double>(n), INFINITY);
  return out;
}

PrimitiveDirection primitive_direction(LatticePoint a, LatticePoint b) {
  if (a == b) throw std::invalid_argument("primitive_direction: points coincide");
  std::int64_t dx = b.x - a.x, dy = b.y - a.y;
  const std::int64_t g = std::gcd(std::llabs(dx), std::llabs(dy));
  dx /= g;
  dy /= g;
  if (dx < 0 || (dx == 0 && dy < 0)) {
    dx = -dx;
    dy = -dy;
  }
  return {dx, dy};
}

std::int64_t line_family_index(PrimitiveDirection dir, LatticePoint q) {
  return dir.r * q.x - dir.s * q.y;
}

std::int64_t height_wrt_edge(const GridTriangle& t, int edge) {
  const LatticePoint v[3] = {t.a, t.b, t.c};
  if (edge < 0 || edge > 2) throw std::invalid_argument("height_wrt_edge: edge must be 0, 1 or 2");
  const LatticePoint u = v[edge], w = v[(edge + 1) % 3], p = v[(edge + 2) % 3];
  const PrimitiveDirection d = primitive_direction(u, w);
  return std::llabs(line_family_index(d, p) - line_family_index(d, u));
}

TriangleHeight triangle_height(const GridTriangle& t) {
  TriangleHeight best{height_wrt_edge(t, 0), 0};
  for (int e = 1; e < 3; ++e) {
    const std::int64_t h = height_wrt_edge(t, e);
    if (h < best.height) best = {h, e};
  }
  return best;
}

bool is_collinear(const GridTriangle& t) { return cross(t.a, t.b, t.c) == 0; }

std::int64_t interior_lattice_points(const GridTriangle& t) {
  const std::int64_t twice_area = std::llabs(cross(t.a, t.b, t.c));
  if (twice_area == 0) return 0;
  const std::int64_t boundary = gcd_of(t.a, t.b) + gcd_of(t.b, t.c) + gcd_of(t.c, t.a);
  // Pick: 2A = 2I + B - 2.
  return (twice_area - boundary + 2) / 2;
}

bool is_interior_empty(const GridTriangle& t) {
  if (!is_collinear(t)) return interior_lattice_points(t) == 0;
  LatticePoint lo = std::min({t.a, t.b, t.c});
  LatticePoint hi = std::max({t.a, t.b, t.c});
  return gcd_of(lo, hi) == 2;
}

std::vector<GridTriangle> enumerate_interior_empty_grid_triangles(int g) {
  if (g < 2 || g > 12) throw std::invalid_argument("enumerate_interior_empty_grid_triangles: g must be in [2, 12]");
  std::vector<LatticePoint> pts;
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y) pts.push_back({x, y});
  std::vector<GridTriangle> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const GridTriangle t{pts[i], pts[j], pts[k]};
        if (is_interior_empty(t)) out.push_back(t);
      }
  return out;
}

}  // namespace emptri
