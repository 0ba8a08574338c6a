// Integer frames: a point set rescaled by a common denominator so that every
// predicate becomes integer arithmetic. The coordinate and product types are
// picked from the bit length, so orientation stays exact for any input.
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "emptri/kernel.hpp"

namespace emptri::detail {

using i128 = __int128;
using i256 = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    256, 256, boost::multiprecision::signed_magnitude, boost::multiprecision::unchecked, void>>;
using BigInt = boost::multiprecision::cpp_int;

template <class C>
struct IPoint {
  C x{};
  C y{};
  friend bool operator==(const IPoint&, const IPoint&) = default;
};

template <class T>
inline int sign_of(const T& v) {
  if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, i128>) {
    return (v > 0) - (v < 0);
  } else {
    return v.sign();
  }
}

template <class T>
inline double to_double(const T& v) {
  if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, i128>) {
    return static_cast<double>(v);
  } else {
    return v.template convert_to<double>();
  }
}

/// Coordinate type C, product type W. Native pairs skip the float filter.
template <class C, class W>
struct Arith {
  using Coord = C;
  using Wide = W;
  using Point = IPoint<C>;
  static constexpr bool kNative = std::is_same_v<C, std::int64_t>;

  static W cross(const Point& a, const Point& b, const Point& c) {
    return W(b.x - a.x) * W(c.y - a.y) - W(b.y - a.y) * W(c.x - a.x);
  }

  /// Sign of (b - a) x (c - a).
  static int orient(const Point& a, const Point& b, const Point& c) {
    if constexpr (kNative) {
      const W l = W(b.x - a.x) * W(c.y - a.y);
      const W r = W(b.y - a.y) * W(c.x - a.x);
      return (l > r) - (l < r);
    } else {
      const double l = to_double(C(b.x - a.x)) * to_double(C(c.y - a.y));
      const double r = to_double(C(b.y - a.y)) * to_double(C(c.x - a.x));
      const double det = l - r;
      const double err = (std::abs(l) + std::abs(r)) * 1e-15;
      if (det > err) return 1;
      if (det < -err) return -1;
      const W lw = W(b.x - a.x) * W(c.y - a.y);
      const W rw = W(b.y - a.y) * W(c.x - a.x);
      return (lw > rw) - (lw < rw);
    }
  }

  /// Sign of e x u for direction vectors.
  static int cross_sign(const Point& e, const Point& u) {
    const W l = W(e.x) * W(u.y);
    const W r = W(e.y) * W(u.x);
    return (l > r) - (l < r);
  }
};

using NativeArith = Arith<std::int64_t, i128>;
using WideArith = Arith<i128, i256>;
using BigArith = Arith<BigInt, BigInt>;

Integer to_integer(std::int64_t v);
Integer to_integer(const i128& v);
Integer to_integer(const BigInt& v);

template <class C>
C from_integer(const Integer& v);
template <>
std::int64_t from_integer<std::int64_t>(const Integer& v);
template <>
i128 from_integer<i128>(const Integer& v);
template <>
BigInt from_integer<BigInt>(const Integer& v);

/// Points scaled to integers: true coordinate = integer / scale.
struct ScaledPoints {
  Integer scale;
  std::vector<Integer> x;
  std::vector<Integer> y;
  std::size_t bits = 0;  // max bit length of |coordinate|
};

/// scale = lcm(denominators) * multiplier.
ScaledPoints scale_points(std::span<const ExactPoint> pts, const Integer& multiplier = 1);

/// Bit bounds under which each arithmetic keeps all intermediate values exact.
inline constexpr std::size_t kNativeBits = 60;
inline constexpr std::size_t kWideBits = 124;

template <class A>
std::vector<typename A::Point> convert_points(const ScaledPoints& sp) {
  std::vector<typename A::Point> out(sp.x.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].x = from_integer<typename A::Coord>(sp.x[i]);
    out[i].y = from_integer<typename A::Coord>(sp.y[i]);
  }
  return out;
}

/// Calls fn(arith_tag, points) with the narrowest arithmetic that is exact for
/// coordinates of `bits` bits. Extra headroom can be requested for callers that
/// build derived points of larger magnitude.
template <class Fn>
decltype(auto) dispatch(const ScaledPoints& sp, Fn&& fn, std::size_t headroom = 0) {
  const std::size_t bits = sp.bits + headroom;
  if (bits <= kNativeBits) return fn(NativeArith{}, convert_points<NativeArith>(sp));
  if (bits <= kWideBits) return fn(WideArith{}, convert_points<WideArith>(sp));
  return fn(BigArith{}, convert_points<BigArith>(sp));
}

/// Convenience: integer frame of a point list with orient-by-index.
template <class A>
struct Frame {
  std::vector<typename A::Point> pts;
  int orient(std::size_t i, std::size_t j, std::size_t k) const {
    return A::orient(pts[i], pts[j], pts[k]);
  }
};

}  // namespace emptri::detail
