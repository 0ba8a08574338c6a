#include "emptri/squared_horton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "emptri/detail/horton_impl.hpp"
#include "emptri/detail/int_frame.hpp"
#include "emptri/detail/random.hpp"
#include "emptri/horton.hpp"

namespace emptri {

namespace {

int log2_exact(int g) {
  if (g < 2 || (g & (g - 1)) != 0) throw std::invalid_argument("grid side must be a power of two >= 2");
  int t = 0;
  while ((1 << t) < g) ++t;
  return t;
}

/// Horton y-values of 2^t points mapped into [-1, 1] by a dyadic factor.
std::vector<Rational> unit_horton_offsets(int t) {
  const PointSet h = generate_horton(t);
  Integer ymax = 0;
  for (const auto& p : h.points) ymax = std::max(ymax, Integer(p.y.get_num()));
  Integer c = 1;
  while (c < ymax) c *= 2;
  std::vector<Rational> f;
  for (const auto& p : h.points) f.emplace_back(Rational(2 * p.y - Rational(ymax)) / Rational(c));
  return f;
}

/// Images of `members` in order of projection onto dir; empty on a tie.
template <class A>
std::vector<std::size_t> project_order(const std::vector<typename A::Point>& p, std::vector<std::size_t> idx,
                                       PrimitiveDirection dir, bool* tie) {
  using W = typename A::Wide;
  const W s(static_cast<long>(dir.s)), r(static_cast<long>(dir.r));
  auto proj = [&](std::size_t i) { return W(p[i].x) * s + W(p[i].y) * r; };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return proj(a) < proj(b); });
  *tie = false;
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (proj(idx[i - 1]) == proj(idx[i])) *tie = true;
  return idx;
}

std::string describe_dir(PrimitiveDirection d) {
  return "(" + std::to_string(d.s) + "," + std::to_string(d.r) + ")";
}

}  // namespace

std::vector<LatticePoint> PerturbationMap::preimages() const {
  std::vector<LatticePoint> out(position.size());
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) out.at(at(i, j)) = {i, j};
  return out;
}

SquaredHorton build_squared_horton(int g, const Rational& eps_x, const Rational& eps_y) {
  const int t = log2_exact(g);
  const auto f = unit_horton_offsets(t);
  SquaredHorton out;
  out.map.g = g;
  out.map.eps_x = eps_x;
  out.map.eps_y = eps_y;
  out.map.position.resize(static_cast<std::size_t>(g) * g);
  out.set.family = Family::SquaredHorton;
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) {
      const Rational hx = eps_x * f[i - 1];
      const Rational ey = -eps_y * f[j - 1];
      out.map.position[(i - 1) * g + (j - 1)] = out.set.points.size();
      out.set.points.emplace_back(Rational(i + ey), Rational(j + hx));
    }
  out.set.params["g"] = std::to_string(g);
  out.set.params["eps_x"] = eps_x.get_str();
  out.set.params["eps_y"] = eps_y.get_str();
  return out;
}

SquaredHorton generate_squared_horton(int g, ValidationMode mode) {
  log2_exact(g);
  Rational ex(1, 4);
  const Rational g2(static_cast<long>(g) * g);
  Rational ey = ex / (g2 * g2);
  for (int attempt = 1; attempt <= 64; ++attempt) {
    SquaredHorton sh = build_squared_horton(g, ex, ey);
    const ValidationReport rep = validate_squared_horton(sh.set, sh.map, mode);
    if (rep.ok()) {
      sh.set.params["eps_attempts"] = std::to_string(attempt);
      return sh;
    }
    if (!rep.find("orientation")->ok) {
      ex /= g2;
      ey /= g2;
    } else {
      ey /= g2;
    }
  }
  throw std::runtime_error("generate_squared_horton: no valid eps found");
}

PerturbationMap reconstruct_perturbation_map(const PointSet& s, int g) {
  log2_exact(g);
  if (s.size() != static_cast<std::size_t>(g) * g)
    throw std::invalid_argument("point count does not match g*g");
  PerturbationMap pm;
  pm.g = g;
  pm.position.assign(s.size(), s.size());
  Rational dx_max = 0, dy_max = 0;
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    const auto round = [](const Rational& v) {
      Integer fl;
      const Rational shifted = v + Rational(1, 2);
      mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
      return fl;
    };
    const Integer i = round(s[idx].x), j = round(s[idx].y);
    if (i < 1 || i > g || j < 1 || j > g) throw std::invalid_argument("point " + std::to_string(idx) + " is not near the grid");
    std::size_t& slot = pm.position[(i.get_si() - 1) * g + (j.get_si() - 1)];
    if (slot != s.size()) throw std::invalid_argument("two points round to the same grid point");
    slot = idx;
    dx_max = std::max(dx_max, Rational(abs(s[idx].x - Rational(i))));
    dy_max = std::max(dy_max, Rational(abs(s[idx].y - Rational(j))));
  }
  auto param = [&](const char* key, const Rational& fallback) {
    auto it = s.params.find(key);
    if (it == s.params.end()) return fallback;
    Rational v(it->second);
    v.canonicalize();
    return v;
  };
  pm.eps_x = param("eps_x", dy_max);
  pm.eps_y = param("eps_y", dx_max);
  return pm;
}

std::vector<LatticeLine> lattice_lines_of_grid(int g) {
  if (g < 2) throw std::invalid_argument("lattice_lines_of_grid: g must be at least 2");
  std::vector<PrimitiveDirection> dirs;
  for (std::int64_t s = 0; s < g; ++s)
    for (std::int64_t r = -(g - 1); r < g; ++r) {
      if (std::gcd(s, std::llabs(r)) != 1) continue;
      if (s == 0 && r != 1) continue;
      dirs.push_back({s, r});
    }
  std::sort(dirs.begin(), dirs.end());
  std::vector<LatticeLine> out;
  for (const auto d : dirs) {
    std::map<std::int64_t, std::vector<LatticePoint>> groups;
    for (int x = 1; x <= g; ++x)
      for (int y = 1; y <= g; ++y) groups[line_family_index(d, {x, y})].push_back({x, y});
    for (auto& [c, members] : groups) {
      if (members.size() < 2) continue;
      std::sort(members.begin(), members.end(), [&](LatticePoint a, LatticePoint b) {
        return a.x * d.s + a.y * d.r < b.x * d.s + b.y * d.r;
      });
      out.push_back({d, c, std::move(members)});
    }
  }
  return out;
}

ValidationReport validate_squared_horton(const PointSet& s, const PerturbationMap& pm, ValidationMode mode) {
  const int g = pm.g;
  const std::size_t n = static_cast<std::size_t>(g) * g;
  if (g < 2 || s.size() != n || pm.position.size() != n)
    throw std::invalid_argument("perturbation map does not match the point set");
  std::vector<LatticePoint> grid(n);
  {
    std::vector<bool> seen(n, false);
    for (int i = 1; i <= g; ++i)
      for (int j = 1; j <= g; ++j) {
        const std::size_t p = pm.at(i, j);
        if (p >= n || seen[p]) throw std::invalid_argument("perturbation map is not a bijection");
        seen[p] = true;
        grid[p] = {i, j};
      }
  }
  ValidationReport rep;
  rep.facts.emplace_back("mode", mode.describe());

  CheckResult consistency;
  const Rational bound = pm.eps_x + pm.eps_y;
  for (std::size_t p = 0; p < n && consistency.ok; ++p) {
    const Rational d = abs(s[p].x - grid[p].x) + abs(s[p].y - grid[p].y);
    if (d > bound) consistency = CheckResult::fail({p}, "point farther than eps_x + eps_y from its grid point");
  }
  rep.checks.emplace_back("consistency", consistency);

  const auto sp = detail::scale_points(s.points);
  detail::dispatch(sp, [&](auto tag, const auto& pts) {
    using A = decltype(tag);
    auto gcross = [&](std::size_t a, std::size_t b, std::size_t c) {
      return (grid[b].x - grid[a].x) * (grid[c].y - grid[a].y) - (grid[b].y - grid[a].y) * (grid[c].x - grid[a].x);
    };
    CheckResult orient;
    std::uint64_t checked = 0, skipped = 0;
    auto test = [&](std::size_t a, std::size_t b, std::size_t c) {
      const std::int64_t gc = gcross(a, b, c);
      if (gc == 0) {
        ++skipped;
        return true;
      }
      ++checked;
      const int want = gc > 0 ? 1 : -1;
      if (A::orient(pts[a], pts[b], pts[c]) != want) {
        orient = CheckResult::fail({a, b, c}, "grid triple changes orientation");
        return false;
      }
      return true;
    };
    if (mode.kind == ValidationMode::Kind::Full) {
      bool go = true;
      for (std::size_t a = 0; a < n && go; ++a)
        for (std::size_t b = a + 1; b < n && go; ++b)
          for (std::size_t c = b + 1; c < n && go; ++c) go = test(a, b, c);
    } else {
      detail::Rng rng(mode.seed);
      for (std::uint64_t t = 0; t < mode.trials; ++t) {
        std::size_t a, b, c;
        do {
          a = detail::uniform_below(rng, n);
          b = detail::uniform_below(rng, n);
          c = detail::uniform_below(rng, n);
        } while (a == b || b == c || a == c);
        if (!test(a, b, c)) break;
      }
    }
    rep.checks.emplace_back("orientation", orient);
    rep.facts.emplace_back("triples_checked", std::to_string(checked));
    rep.facts.emplace_back("triples_collinear_skipped", std::to_string(skipped));

    CheckResult lines, columns;
    std::uint64_t n_lines = 0, n_columns = 0;
    for (const auto& line : lattice_lines_of_grid(g)) {
      if (line.members.size() < 3) continue;
      const bool vertical = line.dir.s == 0;
      CheckResult& target = vertical ? columns : lines;
      ++(vertical ? n_columns : n_lines);
      if (!target.ok) continue;
      std::vector<std::size_t> idx;
      for (const auto& q : line.members) idx.push_back(pm.at(q.x, q.y));
      bool tie = false;
      const auto order = project_order<A>(pts, idx, line.dir, &tie);
      const std::string where = "line dir=" + describe_dir(line.dir) + " index=" + std::to_string(line.index);
      if (tie) {
        target = CheckResult::fail(idx, where + ": tied projections");
        continue;
      }
      CheckResult r;
      if (!detail::check_horton_indices<A>(pts, order, 0, &r)) {
        r.detail = where + ": " + r.detail;
        target = r;
      }
    }
    rep.checks.emplace_back("lines", lines);
    rep.checks.emplace_back("columns", columns);
    rep.facts.emplace_back("lines_checked", std::to_string(n_lines));
    rep.facts.emplace_back("columns_checked", std::to_string(n_columns));
    return 0;
  });
  return rep;
}

CheckResult check_strip_union(const PointSet& s, const PerturbationMap& pm, const LatticeLine& line1,
                              const LatticeLine& line2) {
  if (!(line1.dir == line2.dir)) throw std::invalid_argument("strip_union_is_horton: lines are not parallel");
  std::vector<ExactPoint> pts;
  std::vector<std::size_t> a, b, source;
  for (const auto& q : line1.members) {
    a.push_back(pts.size());
    source.push_back(pm.at(q.x, q.y));
    pts.push_back(s[source.back()]);
  }
  for (const auto& q : line2.members) {
    b.push_back(pts.size());
    source.push_back(pm.at(q.x, q.y));
    pts.push_back(s[source.back()]);
  }
  const auto sp = detail::scale_points(pts);
  CheckResult res = detail::dispatch(sp, [&](auto tag, const auto& p) {
    using A = decltype(tag);
    bool tie1 = false, tie2 = false;
    const auto oa = project_order<A>(p, a, line1.dir, &tie1);
    const auto ob = project_order<A>(p, b, line1.dir, &tie2);
    if (tie1 || tie2) return CheckResult::fail({}, "tied projections");
    CheckResult r;
    if (!detail::check_horton_indices<A>(p, oa, 0, &r) || !detail::check_horton_indices<A>(p, ob, 0, &r)) return r;
    if (detail::check_high_above<A>(p, oa, ob, +1, &r) || detail::check_high_above<A>(p, ob, oa, +1, nullptr))
      return CheckResult{};
    return r;
  });
  for (auto& w : res.witness) w = source[w];
  return res;
}

bool strip_union_is_horton(const PointSet& s, const PerturbationMap& pm, const LatticeLine& line1,
                           const LatticeLine& line2) {
  return check_strip_union(s, pm, line1, line2).ok;
}

}  // namespace emptri
