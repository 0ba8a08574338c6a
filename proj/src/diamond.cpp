#include "emptri/diamond.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "emptri/detail/int_frame.hpp"
#include "emptri/detail/random.hpp"

namespace emptri {

namespace {

constexpr std::uint64_t kDefaultTupleTrials = 4000;
constexpr std::uint64_t kGenerationSeed = 1;
constexpr std::uint64_t kStructuredTupleCap = 2000000;

bool is_power_of_four(std::size_t m) {
  if (m == 0 || (m & (m - 1)) != 0) return false;
  int bits = 0;
  while ((std::size_t{1} << bits) < m) ++bits;
  return bits % 2 == 0;
}

std::string ids_to_string(const std::vector<std::size_t>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s;
}

struct Box {
  double x0, y0, x1, y1;
};

/// Lazily built hulls of pairs of diamonds, with double bounding boxes used to
/// skip exact tests that cannot succeed.
class PairHulls {
 public:
  PairHulls(const PointSet& s, const DiamondIndex& idx) : s_(s), idx_(idx) {
    double scale = 1;
    for (const auto& p : s.points) scale = std::max({scale, std::fabs(p.x.get_d()), std::fabs(p.y.get_d())});
    margin_ = 1e-9 * scale;
  }

  const ConvexPolygon& hull(std::size_t a, std::size_t b) { return entry(a, b).hull; }

  /// True iff the three pair hulls share a point.
  bool meet(std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e, std::size_t f) {
    const Entry& h1 = entry(a, b);
    const Entry& h2 = entry(c, d);
    const Entry& h3 = entry(e, f);
    const double x0 = std::max({h1.box.x0, h2.box.x0, h3.box.x0});
    const double x1 = std::min({h1.box.x1, h2.box.x1, h3.box.x1});
    const double y0 = std::max({h1.box.y0, h2.box.y0, h3.box.y0});
    const double y1 = std::min({h1.box.y1, h2.box.y1, h3.box.y1});
    if (x0 > x1 + margin_ || y0 > y1 + margin_) return false;
    ++exact_tests;
    const ConvexPolygon polys[3] = {h1.hull, h2.hull, h3.hull};
    return hulls_have_common_point(polys);
  }

  std::uint64_t exact_tests = 0;

 private:
  struct Entry {
    ConvexPolygon hull;
    Box box;
  };

  const Entry& entry(std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    const std::size_t key = a * idx_.m + b;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<ExactPoint> pts;
    for (std::size_t d : {a, b})
      for (std::size_t c : idx_.corners[d]) pts.push_back(s_[c]);
    Entry e{convex_hull(pts), {0, 0, 0, 0}};
    e.box = {std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
             std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (const auto& p : pts) {
      const double x = p.x.get_d(), y = p.y.get_d();
      e.box = {std::min(e.box.x0, x), std::min(e.box.y0, y), std::max(e.box.x1, x), std::max(e.box.y1, y)};
    }
    return cache_.emplace(key, std::move(e)).first->second;
  }

  const PointSet& s_;
  const DiamondIndex& idx_;
  double margin_ = 0;
  std::unordered_map<std::size_t, Entry> cache_;
};

/// Lattice structure of the diamond centers, used to aim samples at nearly
/// collinear and nearly concurrent configurations.
struct CenterGrid {
  int g = 0;
  std::vector<LatticePoint> grid_of;           // per diamond
  std::vector<std::size_t> diamond_at;         // (i-1)*g + (j-1) -> diamond
  std::vector<std::vector<std::size_t>> lines;  // diamonds on lattice lines with >= 3 members

  static CenterGrid from(const DiamondIndex& idx) {
    CenterGrid cg;
    int g = 1;
    while (static_cast<std::size_t>(g) * g < idx.m) ++g;
    if (static_cast<std::size_t>(g) * g != idx.m || g < 2 || (g & (g - 1)) != 0) return cg;
    PointSet centers;
    centers.points = idx.centers;
    PerturbationMap pm;
    try {
      pm = reconstruct_perturbation_map(centers, g);
    } catch (const std::invalid_argument&) {
      return cg;
    }
    cg.g = g;
    cg.grid_of = pm.preimages();
    cg.diamond_at = pm.position;
    for (const auto& line : lattice_lines_of_grid(g)) {
      if (line.members.size() < 3) continue;
      std::vector<std::size_t> ids;
      for (const auto& q : line.members) ids.push_back(pm.at(q.x, q.y));
      cg.lines.push_back(std::move(ids));
    }
    return cg;
  }

  bool usable() const { return g >= 2; }

  std::size_t at(std::int64_t x, std::int64_t y) const {
    return diamond_at[static_cast<std::size_t>((x - 1) * g + (y - 1))];
  }
  bool inside(std::int64_t x, std::int64_t y) const { return x >= 1 && y >= 1 && x <= g && y <= g; }

  /// Pairs of diamonds whose grid points have sum `s`, i.e. whose segment has midpoint s/2.
  std::vector<std::pair<std::size_t, std::size_t>> symmetric_pairs(LatticePoint s) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::int64_t x = 1; x <= g; ++x)
      for (std::int64_t y = 1; y <= g; ++y) {
        const std::int64_t x2 = s.x - x, y2 = s.y - y;
        if (!inside(x2, y2) || std::make_pair(x, y) >= std::make_pair(x2, y2)) continue;
        out.emplace_back(at(x, y), at(x2, y2));
      }
    return out;
  }
};

template <class T>
T pick(detail::Rng& rng, const std::vector<T>& v) {
  return v[detail::uniform_below(rng, v.size())];
}

bool distinct(const std::vector<std::size_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

/// Points of `idx` (frame indices) in strictly convex position.
template <class A>
bool frame_convex_position(const std::vector<typename A::Point>& p, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return p[a].x < p[b].x || (p[a].x == p[b].x && p[a].y < p[b].y);
  });
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (p[idx[i]] == p[idx[i - 1]]) return false;
  if (idx.size() <= 2) return true;
  std::vector<std::size_t> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const std::size_t q = pass == 0 ? idx[t] : idx[idx.size() - 1 - t];
      while (hull.size() >= base + 2 && A::orient(p[hull[hull.size() - 2]], p[hull.back()], p[q]) <= 0)
        hull.pop_back();
      hull.push_back(q);
    }
    hull.pop_back();
  }
  return hull.size() == idx.size();
}

}  // namespace

std::array<int, 4> arc_sizes(int k) {
  if (k < 4) throw std::invalid_argument("a diamond needs at least 4 points");
  std::array<int, 4> sizes{};
  for (int a = 0; a < 4; ++a) sizes[a] = (k - 4) / 4 + (a < (k - 4) % 4 ? 1 : 0);
  return sizes;
}

PointSet generate_diamond(const DiamondSpec& spec) {
  const auto sizes = arc_sizes(spec.k);
  if (sgn(spec.half_width) <= 0) throw std::invalid_argument("half-width must be positive");
  if (sgn(spec.sag) <= 0 || spec.sag >= spec.half_width)
    throw std::invalid_argument("sag must be positive and smaller than the half-width");
  const Rational& h = spec.half_width;
  const ExactPoint& c = spec.center;
  const ExactPoint corners[4] = {{Rational(c.x - h), Rational(c.y - h)},
                                 {Rational(c.x + h), Rational(c.y - h)},
                                 {Rational(c.x + h), Rational(c.y + h)},
                                 {Rational(c.x - h), Rational(c.y + h)}};
  PointSet out;
  out.points.assign(corners, corners + 4);
  for (int a = 0; a < 4; ++a) {
    const ExactPoint& p = corners[a];
    const ExactPoint& q = corners[(a + 1) % 4];
    const ExactPoint edge = q - p;
    const Rational two_h = 2 * h;
    const ExactPoint inward{Rational(-edge.y / two_h), Rational(edge.x / two_h)};
    for (int i = 1; i <= sizes[a]; ++i) {
      const Rational t(i, sizes[a] + 1);
      const Rational bow = 4 * spec.sag * t * (1 - t);
      out.points.push_back(p + t * edge + bow * inward);
    }
  }
  out.params["k"] = std::to_string(spec.k);
  out.params["half_width"] = h.get_str();
  out.params["sag"] = spec.sag.get_str();
  return out;
}

DiamondSquaredHorton build_diamond_squared_horton(const std::vector<ExactPoint>& centers, int k,
                                                  const Rational& half_width, const Rational& sag) {
  const auto sizes = arc_sizes(k);
  DiamondSquaredHorton out;
  auto& idx = out.index;
  idx.m = centers.size();
  idx.k = k;
  idx.centers = centers;
  out.set.family = Family::DiamondSquaredHorton;
  for (std::size_t d = 0; d < centers.size(); ++d) {
    const PointSet dia = generate_diamond({centers[d], half_width, k, sag});
    const std::size_t base = out.set.points.size();
    std::vector<std::size_t> mem(static_cast<std::size_t>(k));
    std::iota(mem.begin(), mem.end(), base);
    for (std::size_t l = 0; l < mem.size(); ++l) {
      out.set.points.push_back(dia.points[l]);
      out.set.diamond_id.push_back(d);
      idx.diamond_of.push_back(d);
      idx.local.push_back(l);
    }
    idx.corners.push_back({base, base + 1, base + 2, base + 3});
    std::array<std::vector<std::size_t>, 4> arcs;
    std::size_t next = base + 4;
    for (int a = 0; a < 4; ++a) {
      arcs[a].push_back(base + a);
      for (int i = 0; i < sizes[a]; ++i) arcs[a].push_back(next++);
      arcs[a].push_back(base + (a + 1) % 4);
    }
    idx.arcs.push_back(std::move(arcs));
    idx.members.push_back(std::move(mem));
  }
  out.set.params["m"] = std::to_string(centers.size());
  out.set.params["k"] = std::to_string(k);
  out.set.params["half_width"] = half_width.get_str();
  out.set.params["sag"] = sag.get_str();
  return out;
}

DiamondSquaredHorton generate_diamond_squared_horton(std::size_t m, int k) {
  arc_sizes(k);
  if (!is_power_of_four(m)) throw std::invalid_argument("m must be a power of four");
  if (m == 1) {
    auto out = build_diamond_squared_horton({ExactPoint(1, 1)}, k, Rational(1, 8), Rational(1, 32));
    out.set.params["g"] = "1";
    out.set.params["shrink_attempts"] = "1";
    return out;
  }
  int g = 1;
  while (static_cast<std::size_t>(g) * g < m) ++g;
  const SquaredHorton base = generate_squared_horton(g);

  // The doubling construction is centrally symmetric, so segments between
  // symmetric pairs of centers all meet at the grid center. A small seeded
  // jitter, validated to keep the squared Horton properties, removes such
  // concurrencies.
  std::vector<ExactPoint> centers;
  Rational jitter = base.map.eps_y / Rational(static_cast<long>(g) * g * 1024);
  for (int tries = 0;; ++tries) {
    if (tries == 8) throw std::runtime_error("generate_diamond_squared_horton: jitter keeps failing");
    detail::Rng rng(kGenerationSeed);
    PointSet moved = base.set;
    for (auto& p : moved.points) {
      const long dx = static_cast<long>(detail::uniform_below(rng, 1025)) - 512;
      const long dy = static_cast<long>(detail::uniform_below(rng, 1025)) - 512;
      p = p + jitter * ExactPoint(dx, dy);
    }
    const ValidationMode vm = m <= 256 ? ValidationMode::full() : ValidationMode::sampled(kGenerationSeed, 1000000);
    PerturbationMap pm = base.map;
    pm.eps_y += 1024 * jitter;
    pm.eps_x += 1024 * jitter;
    if (validate_squared_horton(moved, pm, vm).ok()) {
      centers = std::move(moved.points);
      break;
    }
    jitter /= 1024;
  }

  // Smallest distance from a center to a line through two other centers.
  const auto sp = detail::scale_points(centers);
  const long double mu = detail::dispatch(sp, [&](auto tag, const auto& p) {
    using A = decltype(tag);
    long double best = std::numeric_limits<long double>::max();
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        const long double dx = detail::to_double(typename A::Coord(p[b].x - p[a].x));
        const long double dy = detail::to_double(typename A::Coord(p[b].y - p[a].y));
        const long double len = std::sqrt(dx * dx + dy * dy);
        for (std::size_t c = 0; c < p.size(); ++c) {
          if (c == a || c == b) continue;
          const long double cr = std::fabs(static_cast<long double>(detail::to_double(A::cross(p[a], p[b], p[c]))));
          best = std::min(best, cr / len);
        }
      }
    return best / static_cast<long double>(sp.scale.get_d());
  });
  Rational h = 1;
  while (h.get_d() > static_cast<double>(mu / 8)) h /= 2;

  for (int attempt = 1; attempt <= 40; ++attempt) {
    auto out = build_diamond_squared_horton(centers, k, h, Rational(h / 4));
    const ValidationReport rep = validate_diamond_properties(out.set, out.index, ValidationMode::full());
    if (rep.ok()) {
      out.set.params["g"] = std::to_string(g);
      out.set.params["eps_x"] = base.map.eps_x.get_str();
      out.set.params["eps_y"] = base.map.eps_y.get_str();
      out.set.params["center_jitter"] = jitter.get_str();
      out.set.params["shrink_attempts"] = std::to_string(attempt);
      return out;
    }
    h /= 16;
  }
  throw std::runtime_error("generate_diamond_squared_horton: no valid half-width found");
}

DiamondIndex reconstruct_diamond_index(const PointSet& s) {
  if (s.diamond_id.size() != s.size()) throw std::invalid_argument("point set has no diamond-id column");
  DiamondIndex idx;
  for (std::size_t d : s.diamond_id) idx.m = std::max(idx.m, d + 1);
  idx.members.resize(idx.m);
  idx.diamond_of = s.diamond_id;
  idx.local.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    idx.local[i] = idx.members[s.diamond_id[i]].size();
    idx.members[s.diamond_id[i]].push_back(i);
  }
  idx.k = idx.members.empty() ? 0 : static_cast<int>(idx.members[0].size());
  for (std::size_t d = 0; d < idx.m; ++d) {
    const auto& mem = idx.members[d];
    if (static_cast<int>(mem.size()) != idx.k || idx.k < 4)
      throw std::invalid_argument("diamond " + std::to_string(d) + " has an irregular number of points");
    std::vector<ExactPoint> pts;
    for (std::size_t i : mem) pts.push_back(s[i]);
    const ConvexPolygon hull = convex_hull(pts);
    if (hull.size() != 4) throw std::invalid_argument("diamond " + std::to_string(d) + " is not a quadrilateral");
    std::array<std::size_t, 4> corners{};
    for (int c = 0; c < 4; ++c) {
      auto it = std::find(pts.begin(), pts.end(), hull.vertices()[c]);
      corners[c] = mem[static_cast<std::size_t>(it - pts.begin())];
    }
    ExactPoint center = Rational(1, 4) * (s[corners[0]] + s[corners[1]] + s[corners[2]] + s[corners[3]]);
    std::array<std::vector<std::size_t>, 4> arcs;
    for (int a = 0; a < 4; ++a) {
      const ExactPoint& p = s[corners[a]];
      const ExactPoint& q = s[corners[(a + 1) % 4]];
      std::vector<std::size_t> on;
      for (std::size_t i : mem) {
        if (std::find(corners.begin(), corners.end(), i) != corners.end()) continue;
        if (point_in_triangle(s[i], center, p, q) == Location::Inside) on.push_back(i);
      }
      const ExactPoint dir = q - p;
      std::sort(on.begin(), on.end(), [&](std::size_t u, std::size_t v) {
        return s[u].x * dir.x + s[u].y * dir.y < s[v].x * dir.x + s[v].y * dir.y;
      });
      arcs[a].push_back(corners[a]);
      arcs[a].insert(arcs[a].end(), on.begin(), on.end());
      arcs[a].push_back(corners[(a + 1) % 4]);
    }
    std::size_t assigned = 4;
    for (const auto& arc : arcs) assigned += arc.size() - 2;
    if (assigned != mem.size())
      throw std::invalid_argument("diamond " + std::to_string(d) + " has points outside its arcs");
    idx.corners.push_back(corners);
    idx.arcs.push_back(std::move(arcs));
    idx.centers.push_back(std::move(center));
  }
  return idx;
}

ValidationReport validate_diamond_properties(const PointSet& s, const DiamondIndex& idx, ValidationMode mode) {
  if (idx.diamond_of.size() != s.size() || idx.members.size() != idx.m || idx.centers.size() != idx.m ||
      idx.corners.size() != idx.m || idx.arcs.size() != idx.m)
    throw std::invalid_argument("diamond index does not match the point set");
  const std::size_t m = idx.m;
  ValidationReport rep;
  rep.facts.emplace_back("mode", mode.describe());

  std::vector<ExactPoint> all = s.points;
  all.insert(all.end(), idx.centers.begin(), idx.centers.end());
  const std::size_t c0 = s.size();
  const auto sp = detail::scale_points(all);
  detail::dispatch(sp, [&](auto tag, const auto& p) {
    using A = decltype(tag);
    // Orientation across three diamonds.
    CheckResult orient;
    std::uint64_t triples = 0;
    if (mode.kind == ValidationMode::Kind::Full) {
      for (std::size_t a = 0; a < m && orient.ok; ++a)
        for (std::size_t b = a + 1; b < m && orient.ok; ++b)
          for (std::size_t c = b + 1; c < m && orient.ok; ++c) {
            ++triples;
            const int base = A::orient(p[c0 + a], p[c0 + b], p[c0 + c]);
            if (base == 0) {
              orient = CheckResult::fail({}, "centers " + ids_to_string({a, b, c}) + " are collinear");
              break;
            }
            for (std::size_t u : idx.corners[a])
              for (std::size_t v : idx.corners[b])
                for (std::size_t w : idx.corners[c])
                  if (orient.ok && A::orient(p[u], p[v], p[w]) != base)
                    orient = CheckResult::fail({u, v, w}, "triple across diamonds " + ids_to_string({a, b, c}) +
                                                              " differs from the center orientation");
          }
    } else if (m >= 3) {
      detail::Rng rng(mode.seed);
      for (std::uint64_t t = 0; t < mode.trials && orient.ok; ++t) {
        std::size_t a, b, c;
        do {
          a = detail::uniform_below(rng, m);
          b = detail::uniform_below(rng, m);
          c = detail::uniform_below(rng, m);
        } while (a == b || b == c || a == c);
        const std::size_t u = pick(rng, idx.members[a]), v = pick(rng, idx.members[b]), w = pick(rng, idx.members[c]);
        ++triples;
        if (A::orient(p[u], p[v], p[w]) != A::orient(p[c0 + a], p[c0 + b], p[c0 + c]))
          orient = CheckResult::fail({u, v, w}, "triple across diamonds " + ids_to_string({a, b, c}) +
                                                    " differs from the center orientation");
      }
    }
    rep.checks.emplace_back("orientation", orient);
    rep.facts.emplace_back("orientation_triples", std::to_string(triples));

    // Facing arcs.
    CheckResult arcs;
    for (std::size_t a = 0; a < m && arcs.ok; ++a)
      for (std::size_t b = a + 1; b < m && arcs.ok; ++b) {
        bool found = false;
        for (int x = 0; x < 4 && !found; ++x)
          for (int y = 0; y < 4 && !found; ++y) {
            std::vector<std::size_t> u = idx.arcs[a][x];
            u.insert(u.end(), idx.arcs[b][y].begin(), idx.arcs[b][y].end());
            found = frame_convex_position<A>(p, u);
          }
        if (!found) arcs = CheckResult::fail({a, b}, "no two arcs of diamonds " + ids_to_string({a, b}) + " are in convex position");
      }
    rep.checks.emplace_back("facing_arcs", arcs);
    rep.facts.emplace_back("diamond_pairs", std::to_string(m * (m - 1) / 2));
    return 0;
  });

  // Five- and six-diamond hull conditions.
  PairHulls hulls(s, idx);
  CheckResult five, six;
  std::uint64_t five_tests = 0, six_tests = 0;
  auto test5 = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e) {
    ++five_tests;
    if (five.ok && hulls.meet(a, b, a, c, d, e))
      five = CheckResult::fail({a, b, c, d, e}, "hulls of diamonds (a,b), (a,c), (d,e) meet for a,b,c,d,e = " +
                                                    ids_to_string({a, b, c, d, e}));
  };
  auto test6 = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e, std::size_t f) {
    ++six_tests;
    if (six.ok && hulls.meet(a, b, c, d, e, f))
      six = CheckResult::fail({a, b, c, d, e, f}, "hulls of diamonds (a,b), (c,d), (e,f) meet for a..f = " +
                                                      ids_to_string({a, b, c, d, e, f}));
  };
  const bool exhaustive = m <= 6;
  if (exhaustive) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = b + 1; c < m; ++c)
          for (std::size_t d = 0; d < m; ++d)
            for (std::size_t e = d + 1; e < m; ++e)
              if (distinct({a, b, c, d, e})) test5(a, b, c, d, e);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t c = a + 1; c < m; ++c)
          for (std::size_t d = c + 1; d < m; ++d)
            for (std::size_t e = c + 1; e < m; ++e)
              for (std::size_t f = e + 1; f < m; ++f)
                if (distinct({a, b, c, d, e, f})) test6(a, b, c, d, e, f);
  } else {
    const std::uint64_t trials = mode.kind == ValidationMode::Kind::Sampled ? mode.trials : kDefaultTupleTrials;
    detail::Rng rng(mode.kind == ValidationMode::Kind::Sampled ? mode.seed : kGenerationSeed);
    const CenterGrid cg = CenterGrid::from(idx);
    const bool aimed = cg.usable() && !cg.lines.empty();
    auto random_ids = [&](std::size_t count, std::vector<std::size_t> v) {
      while (v.size() < count) {
        const std::size_t x = detail::uniform_below(rng, m);
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
      }
      return v;
    };
    auto random_symmetric = [&](LatticePoint sum, std::size_t count) {
      std::vector<std::pair<std::size_t, std::size_t>> chosen;
      auto pairs = cg.symmetric_pairs(sum);
      for (std::size_t i = 0; i < count && !pairs.empty(); ++i) {
        const std::size_t at = detail::uniform_below(rng, pairs.size());
        chosen.push_back(pairs[at]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(at));
      }
      return chosen;
    };
    // Tuples whose grid segments pass exactly through a common point only miss
    // each other by the jitter, so they are scanned in full when there are few.
    std::uint64_t structured = 0;
    bool structured_full = false;
    if (aimed) {
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
      std::uint64_t five_count = 0, six_count = 0;
      for (std::int64_t sx = 2; sx <= 2 * cg.g; ++sx)
        for (std::int64_t sy = 2; sy <= 2 * cg.g; ++sy) {
          by_sum.push_back(cg.symmetric_pairs({sx, sy}));
          const std::uint64_t p = by_sum.back().size();
          six_count += p * (p - 1) * (p - 2) / 6;
          if (sx % 2 == 0 && sy % 2 == 0) five_count += p;
        }
      structured_full = five_count + six_count <= kStructuredTupleCap;
      if (structured_full) {
        std::size_t at = 0;
        for (std::int64_t sx = 2; sx <= 2 * cg.g; ++sx)
          for (std::int64_t sy = 2; sy <= 2 * cg.g; ++sy) {
            const auto& pairs = by_sum[at++];
            if (sx % 2 == 0 && sy % 2 == 0) {
              const std::size_t a = cg.at(sx / 2, sy / 2);
              for (const auto& [d, e] : pairs) {
                std::vector<std::size_t> bc;
                for (std::size_t x = 0; x < m && bc.size() < 2; ++x)
                  if (x != a && x != d && x != e) bc.push_back(x);
                if (bc.size() < 2) continue;
                ++structured;
                test5(a, bc[0], bc[1], d, e);
              }
            }
            for (std::size_t i = 0; i < pairs.size() && six.ok; ++i)
              for (std::size_t j = i + 1; j < pairs.size() && six.ok; ++j)
                for (std::size_t k2 = j + 1; k2 < pairs.size() && six.ok; ++k2) {
                  ++structured;
                  test6(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second, pairs[k2].first,
                        pairs[k2].second);
                }
          }
      }
    }
    rep.facts.emplace_back("structured_tuples", structured_full ? std::to_string(structured) : "sampled");
    for (std::uint64_t t = 0; t < trials && five.ok; ++t) {
      std::vector<std::size_t> v;
      int variant = aimed ? static_cast<int>(t % 4) : 0;
      if (variant == 2 && structured_full) variant = 0;
      if (variant == 1) {
        // a, b, c on one lattice line.
        auto line = pick(rng, cg.lines);
        std::vector<std::size_t> abc;
        while (abc.size() < 3) {
          const std::size_t x = pick(rng, line);
          if (std::find(abc.begin(), abc.end(), x) == abc.end()) abc.push_back(x);
        }
        v = random_ids(5, abc);
      } else if (variant == 2) {
        // Segment d-e through the grid point of a.
        const std::size_t a = detail::uniform_below(rng, m);
        const LatticePoint q = cg.grid_of[a];
        auto de = random_symmetric({2 * q.x, 2 * q.y}, 1);
        if (de.empty()) continue;
        v = {a, de[0].first, de[0].second};
        v = random_ids(5, v);
        v = {v[0], v[3], v[4], v[1], v[2]};
      } else if (variant == 3) {
        // a, b, c collinear and d-e crossing a-b at its midpoint.
        auto line = pick(rng, cg.lines);
        std::vector<std::size_t> abc;
        while (abc.size() < 3) {
          const std::size_t x = pick(rng, line);
          if (std::find(abc.begin(), abc.end(), x) == abc.end()) abc.push_back(x);
        }
        const LatticePoint pa = cg.grid_of[abc[0]], pb = cg.grid_of[abc[1]];
        bool placed = false;
        for (const auto& [d, e] : random_symmetric({pa.x + pb.x, pa.y + pb.y}, 4)) {
          if (std::find(abc.begin(), abc.end(), d) != abc.end() || std::find(abc.begin(), abc.end(), e) != abc.end()) continue;
          v = {abc[0], abc[1], abc[2], d, e};
          placed = true;
          break;
        }
        if (!placed) continue;
      } else {
        v = random_ids(5, {});
      }
      test5(v[0], v[1], v[2], v[3], v[4]);
    }
    for (std::uint64_t t = 0; t < trials && six.ok; ++t) {
      std::vector<std::size_t> v;
      if (aimed && !structured_full && t % 2 == 1) {
        // Three segments with a common midpoint.
        const LatticePoint sum{static_cast<std::int64_t>(2 + detail::uniform_below(rng, 2 * cg.g - 1)),
                               static_cast<std::int64_t>(2 + detail::uniform_below(rng, 2 * cg.g - 1))};
        const auto chosen = random_symmetric(sum, 3);
        if (chosen.size() < 3) continue;
        for (const auto& [x, y] : chosen) {
          v.push_back(x);
          v.push_back(y);
        }
      } else {
        v = random_ids(6, {});
      }
      test6(v[0], v[1], v[2], v[3], v[4], v[5]);
    }
    rep.facts.emplace_back("tuple_trials", std::to_string(trials));
  }
  rep.checks.emplace_back("five_diamonds", five);
  rep.checks.emplace_back("six_diamonds", six);
  rep.facts.emplace_back("five_diamond_tuples", std::to_string(five_tests));
  rep.facts.emplace_back("six_diamond_tuples", std::to_string(six_tests));
  rep.facts.emplace_back("exact_hull_tests", std::to_string(hulls.exact_tests));
  rep.facts.emplace_back("tuple_checks", exhaustive ? "exhaustive" : "sampled");
  return rep;
}

SizeRuleParams size_rule_parameters(std::uint64_t n, double alpha) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("alpha must lie strictly between 0 and 1");
  SizeRuleParams t;
  t.n_requested = n;
  t.alpha = alpha;
  const double e = std::ceil(alpha / 2 * std::log2(static_cast<double>(n)) - 1e-12);
  t.g = 1 << static_cast<int>(std::max(0.0, e));
  t.m = static_cast<std::size_t>(t.g) * t.g;
  const std::uint64_t k = (n + t.m - 1) / t.m;
  t.k = static_cast<int>(std::max<std::uint64_t>(4, k));
  t.k_clamped = k < 4;
  t.n_realized = t.m * static_cast<std::uint64_t>(t.k);
  t.alpha_realized = t.m > 1 ? std::log(static_cast<double>(t.m)) / std::log(static_cast<double>(t.n_realized)) : 0.0;
  return t;
}

}  // namespace emptri
