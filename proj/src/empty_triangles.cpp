#include <algorithm>
#include <numeric>

#include "emptri/detail/int_frame.hpp"
#include "emptri/lattice.hpp"
#include "emptri/triangles.hpp"

namespace emptri {

namespace {

template <class A>
using Pts = std::vector<typename A::Point>;

template <class A>
bool lex_less(const typename A::Point& a, const typename A::Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

template <class A>
CheckResult general_position(const Pts<A>& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> others;
  for (std::size_t c = 0; c < n; ++c) {
    others.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (i != c) others.push_back(i);
    // Directions from p[c], folded into a half-plane, sorted by angle.
    auto dir = [&](std::size_t i) {
      typename A::Point d{p[i].x - p[c].x, p[i].y - p[c].y};
      if (d.y < 0 || (d.y == 0 && d.x < 0)) d = {-d.x, -d.y};
      return d;
    };
    std::vector<typename A::Point> dirs(n);
    for (std::size_t i : others) dirs[i] = dir(i);
    const typename A::Point origin{};
    std::sort(others.begin(), others.end(),
              [&](std::size_t a, std::size_t b) { return A::orient(origin, dirs[a], dirs[b]) > 0; });
    for (std::size_t t = 1; t < others.size(); ++t)
      if (A::orient(origin, dirs[others[t - 1]], dirs[others[t]]) == 0) {
        std::vector<std::size_t> w{c, others[t - 1], others[t]};
        std::sort(w.begin(), w.end());
        if (p[w[0]] == p[w[1]] || p[w[1]] == p[w[2]] || p[w[0]] == p[w[2]])
          return CheckResult::fail(w, "repeated point");
        return CheckResult::fail(w, "three collinear points");
      }
  }
  return {};
}

/// Visibility graph of the fan around one pivot; calls emit(i, j) per edge.
template <class A>
class Fan {
 public:
  Fan(const Pts<A>& q, std::vector<std::size_t> order) : q_(q), ord_(std::move(order)), queues_(ord_.size()), heads_(ord_.size(), 0) {}

  template <class Emit>
  void run(Emit&& emit) {
    for (std::size_t i = 0; i + 1 < ord_.size(); ++i) proceed(i, i + 1, emit);
  }

 private:
  template <class Emit>
  void proceed(std::size_t i, std::size_t j, Emit& emit) {
    auto& qi = queues_[i];
    while (heads_[i] < qi.size() && A::orient(q_[ord_[qi[heads_[i]]]], q_[ord_[i]], q_[ord_[j]]) > 0) {
      proceed(qi[heads_[i]], j, emit);
      ++heads_[i];
    }
    emit(ord_[i], ord_[j]);
    queues_[j].push_back(i);
  }

  const Pts<A>& q_;
  std::vector<std::size_t> ord_;
  std::vector<std::vector<std::size_t>> queues_;
  std::vector<std::size_t> heads_;
};

template <class A>
Enumeration enumerate(const Pts<A>& p, std::uint64_t budget) {
  const std::size_t n = p.size();
  std::vector<std::size_t> lex(n);
  std::iota(lex.begin(), lex.end(), 0);
  std::sort(lex.begin(), lex.end(), [&](std::size_t a, std::size_t b) { return lex_less<A>(p[a], p[b]); });
  Enumeration out;
  for (std::size_t t = 0; t < n && !out.truncated; ++t) {
    const std::size_t piv = lex[t];
    std::vector<std::size_t> rest(lex.begin() + static_cast<std::ptrdiff_t>(t) + 1, lex.end());
    if (rest.size() < 2) continue;
    if (p[rest.front()] == p[piv]) throw GeneralPositionError({piv, rest.front()}, "repeated point");
    std::sort(rest.begin(), rest.end(),
              [&](std::size_t a, std::size_t b) { return A::orient(p[piv], p[a], p[b]) > 0; });
    for (std::size_t i = 1; i < rest.size(); ++i)
      if (A::orient(p[piv], p[rest[i - 1]], p[rest[i]]) == 0) {
        std::vector<std::size_t> w{piv, rest[i - 1], rest[i]};
        std::sort(w.begin(), w.end());
        throw GeneralPositionError(w, "three collinear points");
      }
    Fan<A> fan(p, rest);
    fan.run([&](std::size_t a, std::size_t b) {
      if (out.triangles.size() >= budget) {
        out.truncated = true;
        return;
      }
      std::size_t v[3] = {piv, a, b};
      std::sort(v, v + 3);
      out.triangles.push_back({v[0], v[1], v[2]});
    });
  }
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

}  // namespace

CheckResult check_general_position(const PointSet& s) {
  const auto sp = detail::scale_points(s.points);
  return detail::dispatch(sp, [&](auto tag, const auto& p) { return general_position<decltype(tag)>(p); });
}

std::vector<TriangleRef> empty_triangles_bruteforce(const PointSet& s) {
  const std::size_t n = s.size();
  if (n > 40) throw std::invalid_argument("empty_triangles_bruteforce: at most 40 points");
  std::vector<TriangleRef> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(s[i], s[j], s[k]) == Sign::Zero) continue;
        bool empty = true;
        for (std::size_t q = 0; q < n && empty; ++q)
          if (q != i && q != j && q != k && point_in_triangle(s[q], s[i], s[j], s[k]) == Location::Inside)
            empty = false;
        if (empty) out.push_back({i, j, k});
      }
  return out;
}

Enumeration empty_triangles_fast(const PointSet& s, std::uint64_t budget) {
  const auto sp = detail::scale_points(s.points);
  return detail::dispatch(sp, [&](auto tag, const auto& p) { return enumerate<decltype(tag)>(p, budget); });
}

std::uint64_t incidence_count(const PointSet& s, std::size_t p, std::span<const TriangleRef> triangles) {
  if (p >= s.size()) throw std::out_of_range("incidence_count: index out of range");
  std::uint64_t c = 0;
  for (const auto& t : triangles) c += (t.i == p || t.j == p || t.k == p);
  return c;
}

std::vector<std::uint64_t> incidence_counts(std::size_t n, std::span<const TriangleRef> triangles) {
  std::vector<std::uint64_t> c(n, 0);
  for (const auto& t : triangles) {
    ++c.at(t.i);
    ++c.at(t.j);
    ++c.at(t.k);
  }
  return c;
}

CheckResult degenerate_pullback_check(const PointSet& s, const PerturbationMap& pm,
                                      std::span<const TriangleRef> triangles) {
  if (pm.position.size() != s.size()) throw std::invalid_argument("pullback needs the perturbation map of this set");
  const auto grid = pm.preimages();
  for (const auto& t : triangles) {
    const GridTriangle gt{grid[t.i], grid[t.j], grid[t.k]};
    if (!is_collinear(gt) && !is_interior_empty(gt))
      return CheckResult::fail({t.i, t.j, t.k}, "empty triangle pulls back to a grid triangle with " +
                                                    std::to_string(interior_lattice_points(gt)) +
                                                    " interior lattice points");
  }
  return {};
}

}  // namespace emptri
