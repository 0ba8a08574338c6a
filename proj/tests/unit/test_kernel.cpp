#include <gtest/gtest.h>

#include "emptri/detail/int_frame.hpp"
#include "emptri/kernel.hpp"
#include "support.hpp"

using namespace emptri;
namespace ts = testing_support;

TEST(Kernel, OrientationSigns) {
  EXPECT_EQ(orient({0, 0}, {1, 0}, {0, 1}), Sign::Positive);
  EXPECT_EQ(orient({0, 0}, {0, 1}, {1, 0}), Sign::Negative);
  EXPECT_EQ(orient({0, 0}, {1, 1}, {2, 2}), Sign::Zero);
  EXPECT_EQ(orient({Rational(1, 3), 0}, {Rational(2, 3), Rational(1, 3)}, {1, Rational(2, 3)}), Sign::Zero);
}

TEST(Kernel, PointInTriangle) {
  const ExactPoint a{0, 0}, b{4, 0}, c{0, 4};
  EXPECT_EQ(point_in_triangle({1, 1}, a, b, c), Location::Inside);
  EXPECT_EQ(point_in_triangle({2, 0}, a, b, c), Location::Boundary);
  EXPECT_EQ(point_in_triangle({2, 2}, a, b, c), Location::Boundary);
  EXPECT_EQ(point_in_triangle({3, 3}, a, b, c), Location::Outside);
  EXPECT_EQ(point_in_triangle({1, 1}, a, c, b), Location::Inside);
  EXPECT_EQ(point_in_triangle({1, 1}, {0, 0}, {1, 1}, {2, 2}), Location::Boundary);
  EXPECT_EQ(point_in_triangle({3, 3}, {0, 0}, {1, 1}, {2, 2}), Location::Outside);
}

TEST(Kernel, ConvexHullDropsInteriorAndCollinear) {
  std::vector<ExactPoint> pts{{0, 0}, {2, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 1}, {2, 4}};
  const ConvexPolygon h = convex_hull(pts);
  ASSERT_EQ(h.size(), 4u);
  EXPECT_EQ(h.vertices()[0], ExactPoint(0, 0));
  EXPECT_EQ(h.vertices()[1], ExactPoint(4, 0));
  EXPECT_TRUE(h.contains({2, 0}));
  EXPECT_TRUE(h.contains({1, 1}));
  EXPECT_FALSE(h.contains({5, 1}));
  EXPECT_FALSE(in_convex_position(pts));
  std::vector<ExactPoint> quad{{0, 0}, {4, 0}, {5, 4}, {0, 4}};
  EXPECT_TRUE(in_convex_position(quad));
}

TEST(Kernel, FromCcwRejectsNonConvex) {
  EXPECT_THROW(ConvexPolygon::from_ccw({{0, 0}, {0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(ConvexPolygon::from_ccw({{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);
  const auto p = ConvexPolygon::from_ccw({{1, 0}, {1, 1}, {0, 0}});
  EXPECT_EQ(p.vertices().front(), ExactPoint(0, 0));
}

TEST(Kernel, HullIntersection) {
  const auto a = convex_hull(std::vector<ExactPoint>{{0, 0}, {2, 0}, {0, 2}});
  const auto b = convex_hull(std::vector<ExactPoint>{{1, 1}, {3, 1}, {1, 3}});   // touches a at (1, 1)
  const auto c = convex_hull(std::vector<ExactPoint>{{2, 2}, {3, 2}, {2, 3}});
  const auto seg = convex_hull(std::vector<ExactPoint>{{0, 1}, {3, 1}});
  std::vector<ConvexPolygon> ab{a, b}, ac{a, c}, abseg{a, b, seg};
  EXPECT_TRUE(hulls_have_common_point(ab));
  EXPECT_FALSE(hulls_have_common_point(ac));
  EXPECT_TRUE(hulls_have_common_point(abseg));
}

// Property: the integer frames agree with rational orientation in every
// arithmetic, including inputs that force the wide and big paths.
TEST(KernelProperty, FramesMatchRationalOrientation) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    std::vector<ExactPoint> pts;
    const int den_bits = round % 3 == 0 ? 1 : (round % 3 == 1 ? 40 : 90);
    Integer den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), den_bits);
    for (int i = 0; i < 12; ++i)
      pts.emplace_back(Rational(Integer(ts::between(rng, -1000000, 1000000)), den) + ts::between(rng, -3, 3),
                       Rational(Integer(ts::between(rng, -1000000, 1000000)), den + 1));
    pts.push_back(Rational(1, 2) * (pts[0] + pts[1]));  // exact collinearity
    const auto sp = detail::scale_points(pts);
    const int mismatches = detail::dispatch(sp, [&](auto tag, const auto& p) {
      using A = decltype(tag);
      int bad = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
          for (std::size_t k = 0; k < p.size(); ++k)
            bad += A::orient(p[i], p[j], p[k]) != ts::orient3(pts[i], pts[j], pts[k]);
      return bad;
    });
    EXPECT_EQ(mismatches, 0) << round;
  }
}
