#include <gtest/gtest.h>

#include "emptri/horton.hpp"
#include "emptri/squared_horton.hpp"
#include "support.hpp"

using namespace emptri;
namespace ts = testing_support;

TEST(SquaredHorton, SmallGridsValidate) {
  for (int g : {2, 4, 8}) {
    const SquaredHorton sh = generate_squared_horton(g);
    ASSERT_EQ(sh.set.size(), static_cast<std::size_t>(g * g));
    EXPECT_TRUE(validate_squared_horton(sh.set, sh.map, ValidationMode::full()).ok()) << g;
    EXPECT_TRUE(ts::in_general_position(sh.set.points)) << g;
    EXPECT_EQ(sh.set.params.at("g"), std::to_string(g));
  }
  EXPECT_THROW(generate_squared_horton(3), std::invalid_argument);
}

TEST(SquaredHorton, ImagesStayCloseToTheirGridPoints) {
  const SquaredHorton sh = generate_squared_horton(8);
  const auto pre = sh.map.preimages();
  for (std::size_t i = 0; i < sh.set.size(); ++i) {
    const Rational dx = sh.set[i].x - pre[i].x, dy = sh.set[i].y - pre[i].y;
    EXPECT_LE(abs(dx), sh.map.eps_y) << i;
    EXPECT_LE(abs(dy), sh.map.eps_x) << i;
  }
  EXPECT_EQ(sh.map.at(3, 5), static_cast<std::size_t>(2 * 8 + 4));
}

// Property: every non-collinear grid triple keeps its orientation.
TEST(SquaredHortonProperty, OrientationPreserved) {
  const SquaredHorton sh = generate_squared_horton(8);
  const auto pre = sh.map.preimages();
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t a = ts::below(rng, 64), b = ts::below(rng, 64), c = ts::below(rng, 64);
    const long o = (pre[b].x - pre[a].x) * (pre[c].y - pre[a].y) - (pre[b].y - pre[a].y) * (pre[c].x - pre[a].x);
    if (o == 0) continue;
    ASSERT_EQ(ts::orient3(sh.set[a], sh.set[b], sh.set[c]), o > 0 ? 1 : -1);
  }
}

TEST(SquaredHorton, LatticeLinesAreHorton) {
  const SquaredHorton sh = generate_squared_horton(8);
  const auto lines = lattice_lines_of_grid(8);
  for (const auto& line : lines) {
    std::vector<ExactPoint> pts;
    for (const auto& q : line.members) pts.push_back(sh.set[sh.map.at(q.x, q.y)]);
    EXPECT_TRUE(is_horton_along_direction(pts, ExactPoint(line.dir.s, line.dir.r)));
  }
}

TEST(SquaredHorton, LatticeLineCensus) {
  // Lines with at least two points of the 3x3 grid: 3 rows, 3 columns, 2 long
  // diagonals plus 4 short ones, and the 8 lines of slopes +-2, +-1/2.
  const auto lines = lattice_lines_of_grid(3);
  std::size_t rows = 0, cols = 0;
  for (const auto& l : lines) {
    rows += l.dir == PrimitiveDirection{1, 0};
    cols += l.dir == PrimitiveDirection{0, 1};
    EXPECT_GE(l.members.size(), 2u);
  }
  EXPECT_EQ(rows, 3u);
  EXPECT_EQ(cols, 3u);
  EXPECT_EQ(lines.size(), 3u + 3u + 6u + 8u);
}

TEST(SquaredHorton, StripUnions) {
  for (int g : {4, 8}) {
    const SquaredHorton sh = generate_squared_horton(g);
    const auto lines = lattice_lines_of_grid(g);
    for (std::size_t a = 0; a < lines.size(); ++a)
      for (std::size_t b = a + 1; b < lines.size(); ++b)
        if (lines[a].dir == lines[b].dir) ASSERT_TRUE(strip_union_is_horton(sh.set, sh.map, lines[a], lines[b]));
    EXPECT_THROW(check_strip_union(sh.set, sh.map, lines.front(), lines.back()), std::invalid_argument);
  }
}

TEST(SquaredHorton, UnitPerturbationIsRejected) {
  const SquaredHorton bad = build_squared_horton(4, 1, 1);
  const ValidationReport r = validate_squared_horton(bad.set, bad.map, ValidationMode::full());
  EXPECT_FALSE(r.ok());
  const CheckResult* fail = nullptr;
  for (const auto& [name, c] : r.checks)
    if (!c.ok && !fail) fail = &c;
  ASSERT_NE(fail, nullptr);
  EXPECT_FALSE(fail->witness.empty());
}

TEST(SquaredHorton, MapReconstruction) {
  const SquaredHorton sh = generate_squared_horton(4);
  const PerturbationMap pm = reconstruct_perturbation_map(sh.set, 4);
  EXPECT_EQ(pm.position, sh.map.position);
  EXPECT_EQ(pm.eps_x, sh.map.eps_x);
  EXPECT_EQ(pm.eps_y, sh.map.eps_y);
}

TEST(SquaredHorton, SampledModeIsSeeded) {
  const SquaredHorton sh = generate_squared_horton(8);
  const auto a = validate_squared_horton(sh.set, sh.map, ValidationMode::sampled(9, 5000));
  const auto b = validate_squared_horton(sh.set, sh.map, ValidationMode::sampled(9, 5000));
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.facts, b.facts);
}
