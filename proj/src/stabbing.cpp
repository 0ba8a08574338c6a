#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "emptri/detail/int_frame.hpp"
#include "emptri/detail/random.hpp"
#include "emptri/diamond.hpp"
#include "emptri/triangles.hpp"

namespace emptri {

namespace {

using detail::to_double;

// All candidate points are centroids, midpoints or cell averages, so a frame
// scaled by 12 keeps them integral.
constexpr long kFrameMultiplier = 12;

template <class A>
using P = typename A::Point;

/// The point v + delta * u for an infinitesimal delta > 0.
template <class A>
struct Query {
  P<A> v;
  P<A> u;
};

template <class A>
std::array<P<A>, 3> ccw(const std::vector<P<A>>& p, const TriangleRef& t) {
  if (A::orient(p[t.i], p[t.j], p[t.k]) > 0) return {p[t.i], p[t.j], p[t.k]};
  return {p[t.i], p[t.k], p[t.j]};
}

template <class A>
bool strictly_inside(const std::array<P<A>, 3>& tri, const Query<A>& q) {
  for (int e = 0; e < 3; ++e) {
    const P<A>& a = tri[e];
    const P<A>& b = tri[(e + 1) % 3];
    const int o = A::orient(a, b, q.v);
    if (o > 0) continue;
    if (o < 0) return false;
    const P<A> d{b.x - a.x, b.y - a.y};
    if (A::cross_sign(d, q.u) <= 0) return false;
  }
  return true;
}

/// Static kd-tree over query points; each triangle adds one to the queries it contains.
template <class A>
class DepthCounter {
 public:
  explicit DepthCounter(std::vector<Query<A>> queries) : q_(std::move(queries)) {
    order_.resize(q_.size());
    std::iota(order_.begin(), order_.end(), 0);
    xs_.resize(q_.size());
    ys_.resize(q_.size());
    for (std::size_t i = 0; i < q_.size(); ++i) {
      xs_[i] = to_double(q_[i].v.x);
      ys_[i] = to_double(q_[i].v.y);
      sx_ = std::max(sx_, std::abs(xs_[i]));
      sy_ = std::max(sy_, std::abs(ys_[i]));
    }
    if (!q_.empty()) build(0, q_.size());
    lazy_.assign(nodes_.size(), 0);
    count_.assign(q_.size(), 0);
  }

  void add(const std::array<P<A>, 3>& tri) {
    if (nodes_.empty()) return;
    Edge e[3];
    for (int i = 0; i < 3; ++i) {
      const P<A>& a = tri[i];
      const P<A>& b = tri[(i + 1) % 3];
      e[i] = {to_double(a.x), to_double(a.y), to_double(b.x) - to_double(a.x), to_double(b.y) - to_double(a.y)};
    }
    double sx = sx_, sy = sy_;
    for (int i = 0; i < 3; ++i) {
      sx = std::max(sx, std::abs(e[i].ax));
      sy = std::max(sy, std::abs(e[i].ay));
    }
    // Rounding of coordinates, differences and products, with room to spare.
    err_ = 64.0 * sx * sy * 0x1p-53;
    visit(0, tri, e, 7u);
  }

  /// Depth of each query, in input order.
  std::vector<std::uint64_t> finish() {
    std::vector<std::uint64_t> out(q_.size());
    push(0, 0, out);
    return out;
  }

 private:
  struct Node {
    double x0, y0, x1, y1;
    std::size_t lo, hi;
    std::size_t left = 0, right = 0;  // 0 means leaf
  };
  struct Edge {
    double ax, ay, dx, dy;
  };
  static constexpr std::size_t kLeaf = 8;

  std::size_t build(std::size_t lo, std::size_t hi) {
    const std::size_t id = nodes_.size();
    Node n{INFINITY, INFINITY, -INFINITY, -INFINITY, lo, hi};
    for (std::size_t i = lo; i < hi; ++i) {
      const std::size_t k = order_[i];
      n.x0 = std::min(n.x0, xs_[k]);
      n.y0 = std::min(n.y0, ys_[k]);
      n.x1 = std::max(n.x1, xs_[k]);
      n.y1 = std::max(n.y1, ys_[k]);
    }
    nodes_.push_back(n);
    if (hi - lo > kLeaf) {
      const std::size_t mid = lo + (hi - lo) / 2;
      // Extents relative to the root box, so wildly different axis scales still alternate.
      const Node& root = nodes_[0];
      const double rw = std::max(root.x1 - root.x0, 1e-300), rh = std::max(root.y1 - root.y0, 1e-300);
      const bool by_x = (n.x1 - n.x0) / rw >= (n.y1 - n.y0) / rh;
      std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(lo),
                       order_.begin() + static_cast<std::ptrdiff_t>(mid),
                       order_.begin() + static_cast<std::ptrdiff_t>(hi), [&](std::size_t a, std::size_t b) {
                         return by_x ? (xs_[a] < xs_[b] || (xs_[a] == xs_[b] && a < b))
                                     : (ys_[a] < ys_[b] || (ys_[a] == ys_[b] && a < b));
                       });
      const std::size_t l = build(lo, mid);
      const std::size_t r = build(mid, hi);
      nodes_[id].left = l;
      nodes_[id].right = r;
    }
    return id;
  }

  // `open` holds the edges whose half-plane does not yet contain the whole box.
  void visit(std::size_t id, const std::array<P<A>, 3>& tri, const Edge* e, unsigned open) {
    const Node& n = nodes_[id];
    for (int i = 0; i < 3; ++i) {
      if (!(open & (1u << i))) continue;
      const double fx0 = -e[i].dy * (n.x0 - e[i].ax), fx1 = -e[i].dy * (n.x1 - e[i].ax);
      const double fy0 = e[i].dx * (n.y0 - e[i].ay), fy1 = e[i].dx * (n.y1 - e[i].ay);
      const double lo = std::min(fx0, fx1) + std::min(fy0, fy1);
      const double hi = std::max(fx0, fx1) + std::max(fy0, fy1);
      if (hi < -err_) return;
      if (lo > err_) open &= ~(1u << i);
    }
    if (open == 0) {
      ++lazy_[id];
      return;
    }
    if (n.left == 0) {
      for (std::size_t i = n.lo; i < n.hi; ++i) {
        const std::size_t k = order_[i];
        int verdict = 1;  // 1 inside, 0 outside, -1 undecided
        for (int j = 0; j < 3 && verdict != 0; ++j) {
          if (!(open & (1u << j))) continue;
          const double f = e[j].dx * (ys_[k] - e[j].ay) - e[j].dy * (xs_[k] - e[j].ax);
          if (f < -err_) verdict = 0;
          else if (f <= err_) verdict = -1;
        }
        if (verdict == 1 || (verdict == -1 && strictly_inside<A>(tri, q_[k]))) ++count_[k];
      }
      return;
    }
    visit(n.left, tri, e, open);
    visit(n.right, tri, e, open);
  }

  void push(std::size_t id, std::uint64_t above, std::vector<std::uint64_t>& out) {
    const Node& n = nodes_[id];
    above += lazy_[id];
    if (n.left == 0) {
      for (std::size_t i = n.lo; i < n.hi; ++i) out[order_[i]] = count_[order_[i]] + above;
      return;
    }
    push(n.left, above, out);
    push(n.right, above, out);
  }

  std::vector<Query<A>> q_;
  std::vector<std::size_t> order_;
  std::vector<double> xs_, ys_;
  double sx_ = 0, sy_ = 0;
  double err_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::uint64_t> lazy_;
  std::vector<std::uint64_t> count_;
};

template <class A>
std::vector<std::uint64_t> depths(const std::vector<P<A>>& p, std::span<const TriangleRef> tris,
                                  std::vector<Query<A>> queries) {
  DepthCounter<A> dc(std::move(queries));
  for (const auto& t : tris) dc.add(ccw<A>(p, t));
  return dc.finish();
}

ExactPoint to_exact(const Integer& x, const Integer& y, const Integer& scale) {
  return {Rational(x, scale), Rational(y, scale)};
}

template <class A>
ExactPoint to_exact(const P<A>& v, const Integer& scale) {
  return to_exact(detail::to_integer(v.x), detail::to_integer(v.y), scale);
}

std::uint64_t stab_count_impl(const PointSet& s, const ExactPoint& q, std::span<const TriangleRef> tris) {
  std::vector<ExactPoint> pts = s.points;
  pts.push_back(q);
  const auto sp = detail::scale_points(pts);
  return detail::dispatch(sp, [&](auto tag, const auto& p) {
    using A = decltype(tag);
    const Query<A> query{p.back(), {}};
    std::uint64_t c = 0;
    for (const auto& t : tris) c += strictly_inside<A>(ccw<A>(p, t), query);
    return c;
  });
}

/// v + 2^-t u in true coordinates, with t grown until the exact depth matches.
template <class A>
ExactPoint materialize(const PointSet& s, std::span<const TriangleRef> tris, const Query<A>& q,
                       const Integer& scale, std::uint64_t depth) {
  const ExactPoint v = to_exact<A>(q.v, scale);
  if (q.u.x == 0 && q.u.y == 0) return v;
  const ExactPoint u = to_exact<A>(q.u, scale);
  for (unsigned t = 16; t <= 4096; t += 16) {
    Integer den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), t);
    const ExactPoint c = v + Rational(1, den) * u;
    if (stab_count_impl(s, c, tris) == depth) return c;
  }
  throw std::logic_error("could not materialize a candidate point");
}

void validate_refs(const PointSet& s, std::span<const TriangleRef> tris) {
  for (const auto& t : tris)
    if (!(t.i < t.j && t.j < t.k && t.k < s.size())) throw std::out_of_range("invalid triangle reference");
}

/// Index quadruples of unit grid cells of grid-backed sets.
std::vector<std::array<std::size_t, 4>> grid_cells(const PointSet& s) {
  std::vector<std::array<std::size_t, 4>> out;
  auto cells_of = [&](const PerturbationMap& pm, const std::vector<std::size_t>& remap) {
    for (int i = 1; i < pm.g; ++i)
      for (int j = 1; j < pm.g; ++j)
        out.push_back({remap[pm.at(i, j)], remap[pm.at(i + 1, j)], remap[pm.at(i + 1, j + 1)],
                       remap[pm.at(i, j + 1)]});
  };
  auto g_param = [&]() -> int {
    const auto it = s.params.find("g");
    if (it != s.params.end()) return std::stoi(it->second);
    int g = static_cast<int>(std::lround(std::sqrt(static_cast<double>(s.size()))));
    return g;
  };
  if (s.family == Family::SquaredHorton) {
    const int g = g_param();
    if (g < 2 || static_cast<std::size_t>(g) * g != s.size()) return out;
    std::vector<std::size_t> id(s.size());
    std::iota(id.begin(), id.end(), 0);
    cells_of(reconstruct_perturbation_map(s, g), id);
  } else if (s.family == Family::DiamondSquaredHorton) {
    const DiamondIndex di = reconstruct_diamond_index(s);
    const int g = static_cast<int>(std::lround(std::sqrt(static_cast<double>(di.m))));
    if (g < 2 || static_cast<std::size_t>(g) * g != di.m) return out;
    PointSet centers;
    centers.family = Family::SquaredHorton;
    centers.points = di.centers;
    const PerturbationMap pm = reconstruct_perturbation_map(centers, g);
    // Cell corners are the bottom-left corners of the four diamonds.
    std::vector<std::size_t> remap(di.m);
    for (std::size_t d = 0; d < di.m; ++d) remap[d] = di.corners[d][0];
    cells_of(pm, remap);
  }
  return out;
}

template <class A>
StabEstimate run_candidates(const PointSet& s, const detail::ScaledPoints& sp, const std::vector<P<A>>& p,
                            std::span<const TriangleRef> tris, const CandidateOptions& opt) {
  StabEstimate best;
  std::vector<Query<A>> qs;
  const P<A> zero{};
  if (opt.strategies & kCentroids) {
    std::vector<std::size_t> pick(tris.size());
    std::iota(pick.begin(), pick.end(), 0);
    if (pick.size() > opt.max_centroids) {
      detail::Rng rng(opt.seed);
      for (std::size_t i = 0; i < opt.max_centroids; ++i)
        std::swap(pick[i], pick[i + detail::uniform_below(rng, pick.size() - i)]);
      pick.resize(opt.max_centroids);
      std::sort(pick.begin(), pick.end());
      best.sampled = true;
    }
    for (std::size_t i : pick) {
      const auto& t = tris[i];
      qs.push_back({{(p[t.i].x + p[t.j].x + p[t.k].x) / 3, (p[t.i].y + p[t.j].y + p[t.k].y) / 3}, zero});
    }
  }
  if (opt.strategies & kGridCells) {
    for (const auto& c : grid_cells(s)) {
      const P<A> v{(p[c[0]].x + p[c[1]].x + p[c[2]].x + p[c[3]].x) / 4,
                   (p[c[0]].y + p[c[1]].y + p[c[2]].y + p[c[3]].y) / 4};
      qs.push_back({v, zero});
      for (int dx : {-1, 1})
        for (int dy : {-1, 1}) qs.push_back({v, {dx, dy}});
    }
  }
  if (opt.strategies & kMidpoints) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        const P<A> v{(p[i].x + p[j].x) / 2, (p[i].y + p[j].y) / 2};
        const P<A> perp{p[i].y - p[j].y, p[j].x - p[i].x};
        qs.push_back({v, perp});
        qs.push_back({v, {-perp.x, -perp.y}});
      }
  }
  best.candidates = qs.size();
  if (qs.empty()) {
    best.point = s.size() ? s[0] : ExactPoint{};
    return best;
  }

  auto better = [](std::uint64_t c, const Query<A>& a, std::uint64_t bc, const Query<A>& b) {
    if (c != bc) return c > bc;
    auto key = [](const Query<A>& q) { return std::tie(q.v.x, q.v.y, q.u.x, q.u.y); };
    return key(a) < key(b);
  };
  auto pick_best = [&](const std::vector<Query<A>>& cand, const std::vector<std::uint64_t>& d, Query<A>& bq,
                       std::uint64_t& bc) {
    bool changed = false;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (better(d[i], cand[i], bc, bq)) {
        bq = cand[i];
        bc = d[i];
        changed = true;
      }
    return changed;
  };

  Query<A> bq = qs[0];
  std::uint64_t bc = 0;
  {
    const auto d = depths<A>(p, tris, qs);
    bc = d[0];
    pick_best(qs, d, bq, bc);
  }
  if (opt.strategies & kLocalSearch) {
    for (unsigned round = 0; round < 20 && bc > 0; ++round) {
      std::vector<Query<A>> local;
      for (const auto& t : tris) {
        const auto tri = ccw<A>(p, t);
        if (strictly_inside<A>(tri, bq))
          local.push_back({{(tri[0].x + tri[1].x + tri[2].x) / 3, (tri[0].y + tri[1].y + tri[2].y) / 3}, zero});
      }
      best.candidates += local.size();
      const auto d = depths<A>(p, tris, local);
      const std::uint64_t before = bc;
      pick_best(local, d, bq, bc);
      if (bc == before) break;
      ++best.local_rounds;
    }
  }
  best.count = bc;
  best.point = materialize<A>(s, tris, bq, sp.scale, bc);
  return best;
}

// ---------------------------------------------------------------------------
// Exact maximum over the arrangement of triangle edges.

using detail::BigInt;

/// Point (x / w, y / w) with w > 0 and gcd(x, y, w) = 1.
struct HPoint {
  BigInt x, y, w;
  friend bool operator<(const HPoint& a, const HPoint& b) {
    return std::tie(a.x, a.y, a.w) < std::tie(b.x, b.y, b.w);
  }
};

HPoint normalized(BigInt x, BigInt y, BigInt w) {
  if (w < 0) {
    x = -x;
    y = -y;
    w = -w;
  }
  BigInt g = gcd(gcd(abs(x), abs(y)), w);
  if (g > 1) {
    x /= g;
    y /= g;
    w /= g;
  }
  return {std::move(x), std::move(y), std::move(w)};
}

struct BigPoint {
  BigInt x, y;
};

/// Sign of (b - a) x (v - a) for homogeneous v.
int orient_h(const BigPoint& a, const BigPoint& b, const HPoint& v) {
  const BigInt l = (b.x - a.x) * (v.y - a.y * v.w);
  const BigInt r = (b.y - a.y) * (v.x - a.x * v.w);
  return l > r ? 1 : (l < r ? -1 : 0);
}

int cross_sign(const BigInt& ax, const BigInt& ay, const BigInt& bx, const BigInt& by) {
  const BigInt l = ax * by, r = ay * bx;
  return l > r ? 1 : (l < r ? -1 : 0);
}

/// Upper half-plane first, then by angle.
bool angle_less(const BigPoint& a, const BigPoint& b) {
  auto half = [](const BigPoint& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross_sign(a.x, a.y, b.x, b.y) > 0;
}

}  // namespace

std::uint64_t stab_count(const PointSet& s, const ExactPoint& q, std::span<const TriangleRef> triangles) {
  validate_refs(s, triangles);
  return stab_count_impl(s, q, triangles);
}

unsigned parse_strategies(const std::string& text) {
  static const std::map<std::string, unsigned> names = {
      {"a", kCentroids},        {"centroids", kCentroids}, {"b", kGridCells}, {"grid", kGridCells},
      {"grid-cells", kGridCells}, {"c", kMidpoints},       {"midpoints", kMidpoints},
      {"d", kLocalSearch},      {"local", kLocalSearch},   {"local-search", kLocalSearch}};
  unsigned out = 0;
  std::string token;
  std::istringstream in(text);
  std::string all(text);
  for (char& ch : all)
    if (ch == '+' || ch == ',') ch = ' ';
  std::istringstream words(all);
  while (words >> token) {
    const auto it = names.find(token);
    if (it == names.end()) throw std::invalid_argument("unknown strategy '" + token + "'");
    out |= it->second;
  }
  if (out == 0) throw std::invalid_argument("no strategy given");
  return out;
}

std::string strategies_to_string(unsigned strategies) {
  std::string out;
  const char letters[] = {'a', 'b', 'c', 'd'};
  for (int i = 0; i < 4; ++i)
    if (strategies & (1u << i)) {
      if (!out.empty()) out += '+';
      out += letters[i];
    }
  return out;
}

std::vector<ExactPoint> grid_cell_points(const PointSet& s) {
  std::vector<ExactPoint> out;
  for (const auto& c : grid_cells(s)) {
    ExactPoint sum = s[c[0]] + s[c[1]] + s[c[2]] + s[c[3]];
    out.push_back(Rational(1, 4) * sum);
  }
  return out;
}

StabEstimate max_stab_candidates(const PointSet& s, std::span<const TriangleRef> triangles,
                                 const CandidateOptions& options) {
  validate_refs(s, triangles);
  const auto sp = detail::scale_points(s.points, kFrameMultiplier);
  // Cell averages and nudged midpoints stay within a few bits of the frame.
  return detail::dispatch(
      sp, [&](auto tag, const auto& p) { return run_candidates<decltype(tag)>(s, sp, p, triangles, options); }, 4);
}

StabEstimate max_stab_exact_small(const PointSet& s, std::span<const TriangleRef> triangles) {
  validate_refs(s, triangles);
  if (triangles.size() > kExactStabMaxTriangles)
    throw std::invalid_argument("max_stab_exact_small: more than " + std::to_string(kExactStabMaxTriangles) +
                                " triangles");
  StabEstimate best;
  best.exact = true;
  if (triangles.empty()) {
    best.point = s.size() ? s[0] : ExactPoint{};
    return best;
  }
  const auto sp = detail::scale_points(s.points);
  std::vector<BigPoint> p(s.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = {detail::from_integer<BigInt>(sp.x[i]), detail::from_integer<BigInt>(sp.y[i])};

  // Triangles ccw, with integer bounding boxes for bucketing.
  struct Tri {
    std::array<std::size_t, 3> v;
    double x0, y0, x1, y1;
  };
  std::vector<Tri> tris;
  std::vector<std::pair<std::size_t, std::size_t>> segs;
  for (const auto& t : triangles) {
    Tri tr;
    const bool pos = cross_sign(p[t.j].x - p[t.i].x, p[t.j].y - p[t.i].y, p[t.k].x - p[t.i].x,
                                p[t.k].y - p[t.i].y) > 0;
    tr.v = pos ? std::array<std::size_t, 3>{t.i, t.j, t.k} : std::array<std::size_t, 3>{t.i, t.k, t.j};
    tr.x0 = tr.y0 = INFINITY;
    tr.x1 = tr.y1 = -INFINITY;
    for (std::size_t v : tr.v) {
      const double x = p[v].x.convert_to<double>(), y = p[v].y.convert_to<double>();
      tr.x0 = std::min(tr.x0, x);
      tr.x1 = std::max(tr.x1, x);
      tr.y0 = std::min(tr.y0, y);
      tr.y1 = std::max(tr.y1, y);
    }
    tris.push_back(tr);
    segs.emplace_back(t.i, t.j);
    segs.emplace_back(t.j, t.k);
    segs.emplace_back(t.i, t.k);
  }
  std::sort(segs.begin(), segs.end());
  segs.erase(std::unique(segs.begin(), segs.end()), segs.end());

  // Vertices of the arrangement with the directions of the segments leaving them.
  std::map<HPoint, std::vector<BigPoint>> star;
  for (const auto& [a, b] : segs) {
    star[normalized(p[a].x, p[a].y, 1)].push_back({p[b].x - p[a].x, p[b].y - p[a].y});
    star[normalized(p[b].x, p[b].y, 1)].push_back({p[a].x - p[b].x, p[a].y - p[b].y});
  }
  for (std::size_t s1 = 0; s1 < segs.size(); ++s1)
    for (std::size_t s2 = s1 + 1; s2 < segs.size(); ++s2) {
      const auto [a, b] = segs[s1];
      const auto [c, d] = segs[s2];
      if (a == c || a == d || b == c || b == d) continue;
      const BigInt rx = p[b].x - p[a].x, ry = p[b].y - p[a].y;
      const BigInt qx = p[d].x - p[c].x, qy = p[d].y - p[c].y;
      const BigInt den = rx * qy - ry * qx;
      if (den == 0) continue;
      const BigInt wx = p[c].x - p[a].x, wy = p[c].y - p[a].y;
      BigInt tn = wx * qy - wy * qx;  // t = tn / den along ab
      BigInt un = wx * ry - wy * rx;  // u = un / den along cd
      BigInt dd = den;
      if (dd < 0) {
        dd = -dd;
        tn = -tn;
        un = -un;
      }
      if (tn <= 0 || tn >= dd || un <= 0 || un >= dd) continue;
      const HPoint v = normalized(p[a].x * dd + tn * rx, p[a].y * dd + tn * ry, dd);
      auto& dirs = star[v];
      dirs.push_back({rx, ry});
      dirs.push_back({-rx, -ry});
      dirs.push_back({qx, qy});
      dirs.push_back({-qx, -qy});
    }

  // Bucket grid over triangle bounding boxes.
  double gx0 = INFINITY, gy0 = INFINITY, gx1 = -INFINITY, gy1 = -INFINITY;
  for (const auto& t : tris) {
    gx0 = std::min(gx0, t.x0);
    gy0 = std::min(gy0, t.y0);
    gx1 = std::max(gx1, t.x1);
    gy1 = std::max(gy1, t.y1);
  }
  const std::size_t nb = 32;
  const double bw = std::max((gx1 - gx0) / nb, 1e-300), bh = std::max((gy1 - gy0) / nb, 1e-300);
  auto bucket_of = [&](double v, double lo, double w) {
    const double f = std::floor((v - lo) / w);
    return static_cast<std::size_t>(std::clamp(f, 0.0, static_cast<double>(nb - 1)));
  };
  std::vector<std::vector<std::size_t>> buckets(nb * nb);
  for (std::size_t i = 0; i < tris.size(); ++i) {
    // One bucket of slack on each side absorbs rounding of the coordinates.
    const std::size_t bx0 = bucket_of(tris[i].x0, gx0, bw), bx1 = bucket_of(tris[i].x1, gx0, bw);
    const std::size_t by0 = bucket_of(tris[i].y0, gy0, bh), by1 = bucket_of(tris[i].y1, gy0, bh);
    for (std::size_t bx = bx0 ? bx0 - 1 : 0; bx <= std::min(bx1 + 1, nb - 1); ++bx)
      for (std::size_t by = by0 ? by0 - 1 : 0; by <= std::min(by1 + 1, nb - 1); ++by)
        buckets[bx * nb + by].push_back(i);
  }

  bool have = false;
  HPoint best_v;
  BigPoint best_w;
  std::uint64_t best_c = 0;
  std::vector<int> side(3);
  for (auto& [v, dirs] : star) {
    std::sort(dirs.begin(), dirs.end(), angle_less);
    // Wedge bisectors between consecutive directions.
    std::vector<BigPoint> samples;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const BigPoint& d0 = dirs[i];
      const BigPoint& d1 = dirs[(i + 1) % dirs.size()];
      if (dirs.size() > 1 && cross_sign(d0.x, d0.y, d1.x, d1.y) > 0)
        samples.push_back({d0.x + d1.x, d0.y + d1.y});
      else
        samples.push_back({-d0.y, d0.x});
    }
    const double vx = (BigInt(v.x).convert_to<double>()) / v.w.convert_to<double>();
    const double vy = (BigInt(v.y).convert_to<double>()) / v.w.convert_to<double>();
    std::vector<std::uint64_t> counts(samples.size(), 0);
    for (std::size_t ti : buckets[bucket_of(vx, gx0, bw) * nb + bucket_of(vy, gy0, bh)]) {
      const Tri& t = tris[ti];
      bool outside = false;
      for (int e = 0; e < 3 && !outside; ++e) {
        side[e] = orient_h(p[t.v[e]], p[t.v[(e + 1) % 3]], v);
        outside = side[e] < 0;
      }
      if (outside) continue;
      for (std::size_t si = 0; si < samples.size(); ++si) {
        bool in = true;
        for (int e = 0; e < 3 && in; ++e) {
          if (side[e] > 0) continue;
          const BigPoint& a = p[t.v[e]];
          const BigPoint& b = p[t.v[(e + 1) % 3]];
          in = cross_sign(b.x - a.x, b.y - a.y, samples[si].x, samples[si].y) > 0;
        }
        counts[si] += in;
      }
    }
    for (std::size_t si = 0; si < samples.size(); ++si) {
      auto key = [](const HPoint& hv, const BigPoint& w) {
        return std::make_tuple(Rational(mpz_class(hv.x.str()), mpz_class(hv.w.str())),
                               Rational(mpz_class(hv.y.str()), mpz_class(hv.w.str())), w.x, w.y);
      };
      if (!have || counts[si] > best_c || (counts[si] == best_c && key(v, samples[si]) < key(best_v, best_w))) {
        have = true;
        best_c = counts[si];
        best_v = v;
        best_w = samples[si];
      }
    }
  }
  best.candidates = 0;
  for (const auto& kv : star) best.candidates += kv.second.size();
  best.count = best_c;
  // Materialize v + 2^-t w in true coordinates.
  const Integer scale = sp.scale;
  const ExactPoint v{Rational(Integer(best_v.x.str()), Integer(best_v.w.str()) * scale),
                     Rational(Integer(best_v.y.str()), Integer(best_v.w.str()) * scale)};
  const ExactPoint w = to_exact(Integer(best_w.x.str()), Integer(best_w.y.str()), scale);
  for (unsigned t = 16;; t += 16) {
    if (t > 4096) throw std::logic_error("could not materialize the maximum");
    Integer den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), t);
    const ExactPoint c = v + Rational(1, den) * w;
    if (stab_count_impl(s, c, triangles) == best_c) {
      best.point = c;
      break;
    }
  }
  return best;
}

}  // namespace emptri
