#include <gtest/gtest.h>

#include "emptri/diamond.hpp"
#include "emptri/epts.hpp"
#include "emptri/horton.hpp"
#include "emptri/squared_horton.hpp"

using namespace emptri;

TEST(Epts, HortonText) {
  const std::string text = to_epts(generate_horton(2));
  EXPECT_EQ(text, "EPTS v1 4 horton 1\n# deltas=4\n# k=2\n0 0\n1 4\n2 0\n3 4\n");
}

TEST(Epts, RoundTrips) {
  for (const PointSet& s : {generate_horton(5), generate_squared_horton(8).set,
                            generate_diamond_squared_horton(4, 8).set}) {
    const PointSet back = parse_epts(to_epts(s));
    EXPECT_EQ(back.points, s.points);
    EXPECT_EQ(back.family, s.family);
    EXPECT_EQ(back.params, s.params);
    EXPECT_EQ(back.diamond_id, s.diamond_id);
    EXPECT_EQ(to_epts(back), to_epts(s));
  }
}

TEST(Epts, CommonDenominator) {
  PointSet s;
  s.points = {{Rational(1, 2), Rational(1, 3)}, {Rational(5, 6), 2}};
  EXPECT_EQ(to_epts(s), "EPTS v1 2 raw 6\n3 2\n5 12\n");
}

TEST(Epts, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_epts(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return 0;
  };
  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("EPTS v2 1 raw 1\n0 0\n"), 1u);
  EXPECT_EQ(line_of("EPTS v1 1 blob 1\n0 0\n"), 1u);
  EXPECT_EQ(line_of("EPTS v1 2 raw 0\n0 0\n1 1\n"), 1u);
  EXPECT_EQ(line_of("EPTS v1 2 raw 1\n0 0\n1 x\n"), 3u);
  EXPECT_EQ(line_of("EPTS v1 2 raw 1\n# k=1\n0 0\n"), 4u);
  EXPECT_EQ(line_of("EPTS v1 1 raw 1\n0 0 7\n"), 2u);
  EXPECT_EQ(line_of("EPTS v1 1 diamond 1\n0 0\n"), 2u);
  EXPECT_EQ(line_of("EPTS v1 1 raw 1\n0 0\n1 1\n"), 3u);
  EXPECT_EQ(line_of("EPTS v1 2 raw 1\n0 0\n# late=1\n1 1\n"), 3u);
  EXPECT_NE(line_of("EPTS v1 2 raw 1\n0 0\n0 0\n"), 0u);
  EXPECT_EQ(line_of("EPTS v1 1 raw 1\n\n-5 +7\r\n"), 0u);
}
