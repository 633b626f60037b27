#include <gtest/gtest.h>

#include "cubix/dual.hpp"
#include "cubix/fixtures.hpp"
#include "cubix/io/dot.hpp"
#include "cubix/io/formats.hpp"
#include "helpers.hpp"

using namespace cubix;
using fx::code_of;

namespace {

ParseError parse_failure(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error";
  return ParseError(0, 0, "");
}

}  // namespace

TEST(Io, WallspaceRoundtrip) {
  const auto text = "cubix wallspace v1\n# two walls\npoints: 1,2,3,4\n1,2|3,4\n1,3 | 2,4   # crossing\n";
  const auto ws = io::parse_wallspace(text);
  EXPECT_EQ(ws.point_count(), 4U);
  EXPECT_EQ(ws.wall_count(), 2U);
  EXPECT_TRUE(crosses(ws, 0, 1));
  const auto out = io::write_wallspace(ws);
  EXPECT_EQ(out, "cubix wallspace v1\npoints: 1,2,3,4\n1,2|3,4\n1,3|2,4\n");
  EXPECT_EQ(io::write_wallspace(io::parse_wallspace(out)), out);

  const auto r = fixtures::random_wallspace(11, 9, 3);
  EXPECT_EQ(io::write_wallspace(io::parse_wallspace(io::write_wallspace(r))), io::write_wallspace(r));
}

TEST(Io, ComplexRoundtrip) {
  const auto w = fixtures::staircase(4);
  const auto text = io::write_complex(w.complex, &w.interior);
  const auto back = io::parse_complex(text);
  EXPECT_EQ(back.complex.names(), w.complex.names());
  EXPECT_EQ(back.complex.edges(), w.complex.edges());
  ASSERT_TRUE(back.interior);
  EXPECT_EQ(*back.interior, w.interior);
  EXPECT_EQ(io::write_complex(back.complex, &*back.interior), text);

  const auto plain = io::parse_complex("cubix complex v1\nvertices: a,b\na-b\n");
  EXPECT_FALSE(plain.interior);
  EXPECT_EQ(plain.complex.edge_count(), 1U);
}

TEST(Io, ActionRoundtrip) {
  const auto w = fixtures::grid(1, {5});
  const auto text = io::write_action(w.complex, w.generators);
  const auto gens = io::parse_action(text, w.complex);
  ASSERT_EQ(gens.size(), 1U);
  EXPECT_EQ(gens[0].name, "t1");
  EXPECT_EQ(gens[0].map, w.generators[0].map);
  EXPECT_EQ(io::write_action(w.complex, gens), text);

  const auto star = fixtures::star(3, 1);
  EXPECT_EQ(io::parse_action(io::write_action(star.complex, star.generators), star.complex)[0].map,
            star.generators[0].map);
}

TEST(Io, PartitionRoundtrip) {
  const auto p = io::parse_partition("cubix partition v1\n0, 2\n1\n");
  EXPECT_EQ(p, (std::vector<std::vector<WallId>>{{0, 2}, {1}}));
  EXPECT_EQ(io::write_partition(p), "cubix partition v1\n0,2\n1\n");
}

TEST(Io, DualTable) {
  const auto table = io::write_dual_table(dual_complex(fx::single_wall()));
  EXPECT_NE(table.find("cubix dual-table v1"), std::string::npos);
  EXPECT_NE(table.find("vertex cL L"), std::string::npos);
  EXPECT_NE(table.find("wall 0 hyperplane 0"), std::string::npos);
}

TEST(Io, ParseErrorsCarryPosition) {
  auto e = parse_failure([] { io::parse_wallspace(""); });
  EXPECT_EQ(e.line(), 1U);
  e = parse_failure([] { io::parse_wallspace("cubix complex v1\n"); });
  EXPECT_EQ(e.line(), 1U);
  EXPECT_EQ(e.column(), 1U);
  e = parse_failure([] { io::parse_wallspace("cubix wallspace v1\npoints: a,b\na|b\na b\n"); });
  EXPECT_EQ(e.line(), 4U);
  e = parse_failure([] { io::parse_wallspace("cubix wallspace v1\npoints: a,b?\n"); });
  EXPECT_EQ(e.line(), 2U);
  EXPECT_EQ(e.column(), 11U);
  e = parse_failure([] { io::parse_complex("cubix complex v1\nvertices: a,b\n\n  a-\n"); });
  EXPECT_EQ(e.line(), 4U);
  EXPECT_GE(e.column(), 3U);
  e = parse_failure([] { io::parse_partition("cubix partition v1\n0,x\n"); });
  EXPECT_EQ(e.line(), 2U);
  EXPECT_EQ(e.column(), 3U);
  EXPECT_EQ(code_of([] { io::parse_complex("cubix complex v1\nvertices: a,b\n"); }), ErrorCode::Disconnected);
  EXPECT_EQ(code_of([] { io::parse_wallspace("cubix wallspace v1\npoints: a,b\na|a\n"); }),
            ErrorCode::OverlappingHalfspaces);
}

TEST(Io, ActionErrors) {
  const auto c = fx::path(3);
  EXPECT_EQ(code_of([&] { io::parse_action("cubix action v1\np0->p1\n", c); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { io::parse_action("cubix action v1\ngenerator s\np0->zz\n", c); }), ErrorCode::ParseError);
}

TEST(Io, ValidNames) {
  EXPECT_TRUE(io::valid_name("v3_m2"));
  EXPECT_TRUE(io::valid_name("c0+c1"));
  EXPECT_FALSE(io::valid_name(""));
  EXPECT_FALSE(io::valid_name("a-b"));
  EXPECT_FALSE(io::valid_name("a b"));
}

TEST(Io, Dot) {
  const auto sq = fx::cycle(4);
  const auto sys = hyperplanes(sq);
  const VertexId path[] = {0, 1, 2};
  const auto dot = io::to_dot(sq, &sys, path);
  EXPECT_EQ(dot.rfind("graph", 0), 0U);
  EXPECT_NE(dot.find("label=\"h0\""), std::string::npos);
  EXPECT_NE(dot.find("penwidth=3"), std::string::npos);
  EXPECT_EQ(dot, io::to_dot(sq, &sys, path));
  EXPECT_EQ(io::to_dot(sq).find("penwidth"), std::string::npos);
}
