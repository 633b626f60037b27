#include <gtest/gtest.h>

#include "cubix/dual.hpp"
#include "cubix/fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cubix;
using fx::code_of;

TEST(Wallspace, SmallestLegal) {
  const auto ws = fx::single_wall();
  EXPECT_EQ(ws.wall_count(), 1U);
  EXPECT_EQ(ws.point_count(), 2U);
}

TEST(Wallspace, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { Wallspace::create({"a", "b"}, {{{"a"}, {"b"}}, {{"b"}, {"a"}}}); }), ErrorCode::DuplicateWall);
  EXPECT_EQ(code_of([] { Wallspace::create({"a", "b"}, {{{"a", "b"}, {}}}); }), ErrorCode::EmptyHalfspace);
  EXPECT_EQ(code_of([] { Wallspace::create({"a", "b"}, {{{"a", "b"}, {"b"}}}); }), ErrorCode::OverlappingHalfspaces);
  EXPECT_EQ(code_of([] { Wallspace::create({"a", "b", "c"}, {{{"a"}, {"b"}}}); }), ErrorCode::IncompleteCover);
  EXPECT_EQ(code_of([] { Wallspace::create({"a", "b"}, {{{"a"}, {"z"}}}); }), ErrorCode::UnknownPoint);
  EXPECT_EQ(code_of([] { Wallspace::create({}, {}); }), ErrorCode::EmptyPointSet);
  EXPECT_EQ(code_of([] { Wallspace::create({"a", "a"}, {}); }), ErrorCode::DuplicatePoint);
}

TEST(Wallspace, DuplicateWallMessageNamesBothWalls) {
  try {
    Wallspace::create({"a", "b", "c"}, {{{"a"}, {"b", "c"}}, {{"a", "b"}, {"c"}}, {{"b", "c"}, {"a"}}});
    FAIL();
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find('0'), std::string::npos);
    EXPECT_NE(msg.find('2'), std::string::npos);
  }
}

TEST(Wallspace, QuadrantWallsCross) {
  const auto ws = fx::quadrant();
  const auto p = oracle::plain(ws);
  EXPECT_TRUE(oracle::crosses(p, 0, 1));
  EXPECT_TRUE(crosses(ws, 0, 1));
  EXPECT_TRUE(crosses(ws, 1, 0));
  EXPECT_EQ(code_of([&] { crosses(ws, 0, 0); }), ErrorCode::SameWall);
  EXPECT_EQ(code_of([&] { crosses(ws, 0, 7); }), ErrorCode::UnknownWall);
}

TEST(Wallspace, Separation) {
  const auto single = fx::single_wall();
  EXPECT_TRUE(separates(single, 0, 0, 1));
  EXPECT_FALSE(separates(single, 0, 0, 0));

  const auto q = fx::quadrant();
  EXPECT_TRUE(separates(q, 0, q.point_index("1"), q.point_index("4")));
  EXPECT_EQ(separating_walls(q, 0, 3), (std::vector<WallId>{0, 1}));
  EXPECT_TRUE(separating_walls(q, 2, 2).empty());

  const auto line = fx::nested_line();
  EXPECT_EQ(separating_walls(line, 0, 3), (std::vector<WallId>{0, 1, 2}));
  EXPECT_FALSE(crosses(line, 0, 1));
  EXPECT_FALSE(crosses(line, 0, 2));
  EXPECT_FALSE(crosses(line, 1, 2));
  EXPECT_EQ(code_of([&] { separating_walls(line, 0, 9); }), ErrorCode::UnknownPoint);
}

TEST(Wallspace, RestrictToFullSetIsIdentity) {
  const auto q = fx::quadrant();
  const auto r = restrict(q, Bitset::full(4));
  EXPECT_EQ(r.wallspace.wall_count(), 2U);
  EXPECT_TRUE(r.merges.empty());
  for (WallId w = 0; w < 2; ++w) {
    ASSERT_TRUE(r.wall_map[w]);
    EXPECT_EQ(r.wall_map[w]->id, w);
    EXPECT_FALSE(r.wall_map[w]->flipped);
  }
}

TEST(Wallspace, RestrictQuadrantToTwoPoints) {
  const auto q = fx::quadrant();
  const PointId k[] = {0, 1};
  const auto r = restrict(q, k);
  ASSERT_EQ(r.wallspace.wall_count(), 1U);
  EXPECT_FALSE(r.wall_map[0]);  // ({1,2},{3,4}) misses K
  ASSERT_TRUE(r.wall_map[1]);
  const auto& w = r.wallspace.walls()[0];
  EXPECT_EQ(r.wallspace.point_name(w.left.find_first()), "1");
  EXPECT_EQ(r.wallspace.point_name(w.right.find_first()), "2");
}

TEST(Wallspace, RestrictMergesCollidingWalls) {
  // A and B agree on {1,2,4}; C survives separately
  const auto ws = Wallspace::create({"1", "2", "3", "4", "5"}, {{{"1", "2"}, {"3", "4", "5"}},
                                                               {{"1", "2", "3"}, {"4", "5"}},
                                                               {{"1"}, {"2", "3", "4", "5"}}});
  const PointId k[] = {0, 1, 3};
  const auto r = restrict(ws, k);
  EXPECT_EQ(r.wallspace.wall_count(), 2U);
  ASSERT_EQ(r.merges.size(), 1U);
  EXPECT_EQ(r.merges[0].kept, 0U);
  EXPECT_EQ(r.merges[0].merged, 1U);
  EXPECT_EQ(r.wall_map[1]->id, r.wall_map[0]->id);
  EXPECT_EQ(code_of([&] { restrict(ws, Bitset(5)); }), ErrorCode::EmptySubset);
}

TEST(Wallspace, RestrictRecordsFlipWhenLabelsDisagree) {
  // walls 0 and 1 agree on {a, c} with opposite labelling
  const auto ws = Wallspace::create({"a", "b", "c"}, {{{"a"}, {"b", "c"}}, {{"a", "b"}, {"c"}}});
  const PointId k[] = {0, 2};
  const auto r = restrict(ws, k);
  ASSERT_EQ(r.wallspace.wall_count(), 1U);
  EXPECT_FALSE(r.wall_map[0]->flipped);
  EXPECT_FALSE(r.wall_map[1]->flipped);

  const auto ws2 = Wallspace::create({"a", "b", "c", "d"}, {{{"a", "b"}, {"c", "d"}}, {{"c"}, {"a", "b", "d"}}});
  const PointId k2[] = {0, 2};
  const auto r2 = restrict(ws2, k2);
  ASSERT_EQ(r2.wallspace.wall_count(), 1U);
  EXPECT_TRUE(r2.wall_map[1]->flipped);
}

TEST(Wallspace, CrossingClasses) {
  EXPECT_EQ(crossing_classes(fx::nested_line()).size(), 1U);
  EXPECT_EQ(crossing_classes(fx::quadrant()), (std::vector<std::vector<WallId>>{{0}, {1}}));
  const auto grid = hyperplane_wallspace(fixtures::grid_complex({4, 4}));
  const auto classes = crossing_classes(grid);
  ASSERT_EQ(classes.size(), 2U);
  EXPECT_EQ(classes[0].size(), 3U);
  EXPECT_EQ(classes[1].size(), 3U);
}

TEST(Wallspace, PartitionValidation) {
  const auto line = fx::nested_line();
  EXPECT_EQ(code_of([&] { validate_partition(line, {{0}, {1, 2}}); }), ErrorCode::PartitionNotPairwiseCrossing);
  EXPECT_EQ(code_of([&] { validate_partition(line, {{0, 1}}); }), ErrorCode::InvalidPartition);
  EXPECT_EQ(code_of([&] { validate_partition(line, {{0, 1, 2}, {2}}); }), ErrorCode::InvalidPartition);
  EXPECT_NO_THROW(validate_partition(fx::quadrant(), {{1}, {0}}));
}

TEST(Wallspace, SubWallspace) {
  const auto line = fx::nested_line();
  const WallId pick[] = {2, 0};
  const auto sub = sub_wallspace(line, pick);
  EXPECT_EQ(sub.wall_count(), 2U);
  EXPECT_EQ(sub.walls()[0].right.count(), 1U);  // ({p0,p1,p2},{p3}) first
  const WallId twice[] = {1, 1};
  EXPECT_EQ(code_of([&] { sub_wallspace(line, twice); }), ErrorCode::NotSubset);
}
