#include "emptri/horton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "emptri/detail/horton_impl.hpp"
#include "emptri/detail/int_frame.hpp"

namespace emptri {

namespace {

std::vector<std::size_t> x_order(std::span<const ExactPoint> pts) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a].x < pts[b].x; });
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (pts[idx[i - 1]].x == pts[idx[i]].x)
      throw std::invalid_argument("two points share the x-coordinate " + pts[idx[i]].x.get_str());
  return idx;
}

CheckResult run_check(std::span<const ExactPoint> pts, const std::vector<std::size_t>& order, int sign) {
  const auto sp = detail::scale_points(pts);
  return detail::dispatch(sp, [&](auto tag, const auto& p) {
    using A = decltype(tag);
    CheckResult r;
    if (detail::check_horton_indices<A>(p, order, sign, &r)) return CheckResult{};
    return r;
  });
}

void require_visibility_domain(const PointSet& h) {
  if (h.size() < 4) throw std::invalid_argument("visible edges need a Horton set of at least 4 points");
  if (!is_horton(h)) throw std::invalid_argument("visible edges need a Horton set");
}

}  // namespace

PointSet generate_horton(int k) {
  if (k < 1) throw std::invalid_argument("generate_horton: k must be at least 1");
  if (k > 16) throw std::invalid_argument("generate_horton: k larger than 16 is not supported");
  std::vector<Integer> ys{0, 0};
  std::string deltas;
  for (int t = 1; t < k; ++t) {
    Integer delta = 1;
    mpz_mul_2exp(delta.get_mpz_t(), delta.get_mpz_t(), 2 * t);
    const std::size_t n = ys.size();
    while (true) {
      std::vector<ExactPoint> next(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        next[2 * i] = ExactPoint(Rational(Integer(2 * i)), Rational(ys[i]));
        next[2 * i + 1] = ExactPoint(Rational(Integer(2 * i + 1)), Rational(ys[i] + delta));
      }
      // Both halves are affine copies of a Horton set, so only the top split needs checking.
      const auto sp = detail::scale_points(next);
      const bool ok = detail::dispatch(sp, [&](auto tag, const auto& p) {
        using A = decltype(tag);
        std::vector<std::size_t> h0, h1;
        for (std::size_t i = 0; i < 2 * n; ++i) (i % 2 == 0 ? h0 : h1).push_back(i);
        return detail::check_high_above<A>(p, h0, h1, +1, nullptr);
      });
      if (ok) break;
      delta *= 4;
    }
    std::vector<Integer> grown(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      grown[2 * i] = ys[i];
      grown[2 * i + 1] = ys[i] + delta;
    }
    ys = std::move(grown);
    if (!deltas.empty()) deltas += ",";
    deltas += delta.get_str();
  }
  PointSet out;
  out.family = Family::Horton;
  out.points.reserve(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i)
    out.points.emplace_back(Rational(Integer(i)), Rational(ys[i]));
  out.params["k"] = std::to_string(k);
  out.params["deltas"] = deltas.empty() ? "-" : deltas;
  return out;
}

std::vector<std::size_t> selector_indices(std::size_t n, std::string_view bits) {
  std::vector<std::size_t> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("selector must be a binary string");
    std::vector<std::size_t> next;
    for (std::size_t i = (c == '0' ? 0 : 1); i < cur.size(); i += 2) next.push_back(cur[i]);
    cur = std::move(next);
  }
  if (cur.empty()) throw std::invalid_argument("selector '" + std::string(bits) + "' selects no points");
  return cur;
}

PointSet subset_by_selector(const PointSet& x, std::string_view bits) {
  const auto ord = x_order(x.points);
  PointSet out;
  out.family = x.family;
  out.params = x.params;
  for (std::size_t pos : selector_indices(x.size(), bits)) out.points.push_back(x.points[ord[pos]]);
  return out;
}

CheckResult check_horton(std::span<const ExactPoint> pts) {
  return run_check(pts, x_order(pts), 0);
}

CheckResult check_horton_strict(std::span<const ExactPoint> pts) {
  return run_check(pts, x_order(pts), +1);
}

bool is_horton(const PointSet& x) { return check_horton(x.points).ok; }

std::vector<std::size_t> order_along(std::span<const ExactPoint> pts, const ExactPoint& direction) {
  if (sgn(direction.x) == 0 && sgn(direction.y) == 0)
    throw std::invalid_argument("direction must be nonzero");
  std::vector<Rational> proj(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) proj[i] = pts[i].x * direction.x + pts[i].y * direction.y;
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return proj[a] < proj[b]; });
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (proj[idx[i - 1]] == proj[idx[i]])
      throw std::invalid_argument("two points have the same projection onto the direction");
  return idx;
}

CheckResult check_horton_along_direction(std::span<const ExactPoint> pts, const ExactPoint& direction) {
  return run_check(pts, order_along(pts, direction), 0);
}

bool is_horton_along_direction(std::span<const ExactPoint> pts, const ExactPoint& direction) {
  return check_horton_along_direction(pts, direction).ok;
}

PointSet consecutive_or_stride_subset(const PointSet& x, std::size_t start, std::size_t stride,
                                      std::size_t count) {
  if (stride == 0) throw std::invalid_argument("stride must be positive");
  if (count == 0 || start >= x.size() || (count - 1) > (x.size() - 1 - start) / stride)
    throw std::out_of_range("subset runs past the end of the point set");
  const auto ord = x_order(x.points);
  PointSet out;
  out.family = x.family;
  out.params = x.params;
  for (std::size_t t = 0; t < count; ++t) out.points.push_back(x.points[ord[start + t * stride]]);
  return out;
}

std::vector<EdgeRef> visible_edges_geometric(const PointSet& h) {
  require_visibility_domain(h);
  const auto ord = x_order(h.points);
  const auto sp = detail::scale_points(h.points);
  std::vector<EdgeRef> out;
  detail::dispatch(sp, [&](auto tag, const auto& p) {
    using A = decltype(tag);
    for (int half = 0; half < 2; ++half) {
      std::vector<std::size_t> part;
      for (std::size_t i = half; i < ord.size(); i += 2) part.push_back(ord[i]);
      // Half 0: intermediate points strictly below; half 1: strictly above.
      const int want = half == 0 ? -1 : 1;
      for (std::size_t a = 0; a < part.size(); ++a)
        for (std::size_t b = a + 1; b < part.size(); ++b) {
          bool visible = true;
          for (std::size_t c = a + 1; c < b && visible; ++c)
            visible = A::orient(p[part[a]], p[part[b]], p[part[c]]) == want;
          if (visible) out.push_back({std::min(part[a], part[b]), std::max(part[a], part[b])});
        }
    }
    return 0;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeRef> visible_edges_structural(const PointSet& h) {
  require_visibility_domain(h);
  const auto ord = x_order(h.points);
  std::vector<EdgeRef> out;
  for (char lead : {'1', '0'}) {
    std::string b(1, lead);
    const char tail = lead == '1' ? '0' : '1';
    while (true) {
      const auto sel = selector_indices(h.size(), b);
      if (sel.size() < 2) break;
      for (std::size_t i = 0; i + 1 < sel.size(); ++i) {
        const std::size_t u = ord[sel[i]], v = ord[sel[i + 1]];
        out.push_back({std::min(u, v), std::max(u, v)});
      }
      b.push_back(tail);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace emptri
