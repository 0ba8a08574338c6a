#include <gtest/gtest.h>

#include "emptri/horton.hpp"
#include "support.hpp"

using namespace emptri;
namespace ts = testing_support;

namespace {

// Text-book definition: H is Horton if |H| <= 3, or its even and odd halves
// are Horton and one of them is high above the other while that other is deep below it.
bool above_all(const std::vector<ExactPoint>& upper, const std::vector<ExactPoint>& lower) {
  for (std::size_t a = 0; a < upper.size(); ++a)
    for (std::size_t b = a + 1; b < upper.size(); ++b)
      for (const auto& c : lower)
        if (ts::orient3(upper[a], upper[b], c) >= 0) return false;
  for (std::size_t a = 0; a < lower.size(); ++a)
    for (std::size_t b = a + 1; b < lower.size(); ++b)
      for (const auto& c : upper)
        if (ts::orient3(lower[a], lower[b], c) <= 0) return false;
  return true;
}

bool horton_oracle(const std::vector<ExactPoint>& h) {
  if (h.size() <= 3) return true;
  std::vector<ExactPoint> ev, od;
  for (std::size_t i = 0; i < h.size(); ++i) (i % 2 ? od : ev).push_back(h[i]);
  return horton_oracle(ev) && horton_oracle(od) && (above_all(od, ev) || above_all(ev, od));
}

}  // namespace

TEST(Horton, SmallSets) {
  const PointSet h3 = generate_horton(3);
  ASSERT_EQ(h3.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(h3[i].x, Rational(static_cast<long>(i)));
  EXPECT_TRUE(is_horton(h3));
  EXPECT_EQ(h3.params.at("k"), "3");
  EXPECT_EQ(generate_horton(1).size(), 2u);
  EXPECT_THROW(generate_horton(0), std::invalid_argument);
  EXPECT_THROW(generate_horton(17), std::invalid_argument);
}

TEST(Horton, GeneratedSetsMatchOracle) {
  for (int k = 1; k <= 7; ++k) {
    const PointSet h = generate_horton(k);
    EXPECT_TRUE(horton_oracle(h.points)) << k;
    EXPECT_TRUE(check_horton_strict(h.points).ok) << k;
    EXPECT_TRUE(ts::in_general_position(h.points)) << k;
  }
}

TEST(Horton, SwappedHeightsAreRejected) {
  PointSet h = generate_horton(3);
  std::swap(h.points[1].y, h.points[3].y);
  const CheckResult r = check_horton(h.points);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness.size(), 3u);
  EXPECT_FALSE(horton_oracle(h.points));
}

TEST(Horton, InputOrderDoesNotMatter) {
  PointSet h = generate_horton(4);
  std::reverse(h.points.begin(), h.points.end());
  EXPECT_TRUE(check_horton(h.points).ok);
}

TEST(Horton, SelectorSubsets) {
  EXPECT_EQ(selector_indices(8, ""), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(selector_indices(8, "0"), (std::vector<std::size_t>{0, 2, 4, 6}));
  EXPECT_EQ(selector_indices(8, "01"), (std::vector<std::size_t>{2, 6}));
  const PointSet h = generate_horton(5);
  for (const char* bits : {"0", "1", "00", "01", "10", "11", "101"}) EXPECT_TRUE(is_horton(subset_by_selector(h, bits)));
}

// Property: consecutive and stride subsets of a Horton set stay Horton.
TEST(HortonProperty, ConsecutiveAndStrideSubsets) {
  const PointSet h = generate_horton(6);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t stride = std::size_t{1} << ts::below(rng, 3);
    const std::size_t count = 2 + ts::below(rng, 14);
    if ((count - 1) * stride >= h.size()) continue;
    const std::size_t start = ts::below(rng, h.size() - (count - 1) * stride);
    const PointSet sub = consecutive_or_stride_subset(h, start, stride, count);
    ASSERT_EQ(sub.size(), count);
    EXPECT_TRUE(is_horton(sub)) << start << " " << stride << " " << count;
    EXPECT_TRUE(horton_oracle(sub.points));
  }
}

// Property: affine maps that preserve x-order and orientation keep the property.
TEST(HortonProperty, ShearAndScaleInvariance) {
  std::mt19937_64 rng(5);
  const PointSet h = generate_horton(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational sx(ts::between(rng, 1, 9), ts::between(rng, 1, 9));
    const Rational sy(ts::between(rng, 1, 9), ts::between(rng, 1, 9));
    const Rational shear(ts::between(rng, -50, 50), 7);
    std::vector<ExactPoint> moved;
    for (const auto& p : h.points) moved.emplace_back(Rational(sx * p.x + 3), Rational(sy * p.y + shear * p.x));
    EXPECT_TRUE(check_horton(moved).ok);
  }
}

TEST(Horton, AlongDirection) {
  const PointSet h = generate_horton(4);
  std::vector<ExactPoint> rotated;  // 90 degree turn: x-order becomes y-order
  for (const auto& p : h.points) rotated.emplace_back(Rational(-p.y), p.x);
  EXPECT_TRUE(is_horton_along_direction(rotated, {0, 1}));
  EXPECT_THROW(is_horton_along_direction(h.points, {0, 1}), std::invalid_argument);
}

namespace {

std::vector<EdgeRef> visible_oracle(const PointSet& h) {
  std::vector<std::size_t> ev, od;
  for (std::size_t i = 0; i < h.size(); ++i) (i % 2 ? od : ev).push_back(i);
  std::vector<EdgeRef> out;
  auto scan = [&](const std::vector<std::size_t>& half, int side) {
    for (std::size_t a = 0; a < half.size(); ++a)
      for (std::size_t b = a + 1; b < half.size(); ++b) {
        bool ok = true;
        for (std::size_t c = a + 1; c < b && ok; ++c)
          ok = ts::orient3(h[half[a]], h[half[b]], h[half[c]]) * side > 0;
        if (ok) out.push_back({half[a], half[b]});
      }
  };
  scan(ev, -1);  // intermediate points below the edge
  scan(od, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Horton, VisibleEdgesAgree) {
  for (int k = 2; k <= 7; ++k) {
    const PointSet h = generate_horton(k);
    const auto geo = visible_edges_geometric(h);
    EXPECT_EQ(geo, visible_edges_structural(h)) << k;
    EXPECT_EQ(geo, visible_oracle(h)) << k;
  }
  PointSet three;
  three.points = {{0, 0}, {1, 5}, {2, 1}};
  EXPECT_THROW(visible_edges_geometric(three), std::invalid_argument);
}
