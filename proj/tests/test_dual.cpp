#include <gtest/gtest.h>

#include <set>

#include "cubix/dual.hpp"
#include "cubix/fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cubix;
using fx::code_of;

namespace {

std::vector<std::string> strings(const std::vector<Orientation>& os) {
  std::vector<std::string> out;
  for (const auto& o : os) out.push_back(o.to_string());
  return out;
}

Orientation O(std::string_view s) { return Orientation::parse(s); }

}  // namespace

TEST(Orientation, ParseAndOrder) {
  EXPECT_EQ(O("LRRL").to_string(), "LRRL");
  EXPECT_EQ(O("LRRL").side(1), Side::Right);
  EXPECT_EQ(code_of([] { O("LXR"); }), ErrorCode::InvalidOrientation);
  EXPECT_TRUE(O("LLR") < O("LRL"));
  EXPECT_TRUE(O("LRR") < O("RLL"));
  EXPECT_FALSE(O("RL") < O("RL"));
  auto o = O("LL");
  o.flip(1);
  EXPECT_EQ(o, O("LR"));
}

TEST(Dual, CanonicalZeroCubes) {
  EXPECT_EQ(canonical_zero_cube(fx::single_wall(), 0).to_string(), "L");
  EXPECT_EQ(canonical_zero_cube(fx::quadrant(), 0).to_string(), "LL");
  EXPECT_EQ(canonical_zero_cube(fx::quadrant(), 3).to_string(), "RR");
  EXPECT_EQ(canonical_zero_cube(fx::nested_line(), 0).to_string(), "LLL");
  EXPECT_EQ(canonical_zero_cube(fx::nested_line(), 2).to_string(), "RRL");
  EXPECT_EQ(code_of([] { canonical_zero_cube(fx::quadrant(), 9); }), ErrorCode::UnknownPoint);
  const auto ws = fixtures::random_wallspace(10, 8, 4);
  for (PointId p = 0; p < ws.point_count(); ++p) EXPECT_TRUE(is_zero_cube(ws, canonical_zero_cube(ws, p)));
}

TEST(Dual, BruteForce) {
  EXPECT_EQ(enumerate_zero_cubes_bruteforce(fx::single_wall()).size(), 2U);
  EXPECT_EQ(strings(enumerate_zero_cubes_bruteforce(fx::quadrant())),
            (std::vector<std::string>{"LL", "LR", "RL", "RR"}));
  EXPECT_EQ(strings(enumerate_zero_cubes_bruteforce(fx::nested_line())),
            (std::vector<std::string>{"LLL", "RLL", "RRL", "RRR"}));
  EXPECT_EQ(code_of([] { enumerate_zero_cubes_bruteforce(fx::nested_line(), 4); }), ErrorCode::LimitExceeded);
}

TEST(Dual, IntersectionViolation) {
  const auto ws = fx::nested_line();
  EXPECT_FALSE(intersection_violation(ws, O("RRL")));
  const auto v = intersection_violation(ws, O("LRL"));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->first, 0U);
  EXPECT_EQ(v->second, 1U);
  EXPECT_EQ(code_of([&] { intersection_violation(ws, O("LR")); }), ErrorCode::InvalidOrientation);
}

TEST(Dual, Complexes) {
  const auto one = dual_complex(fx::single_wall());
  EXPECT_EQ(one.complex.size(), 2U);
  EXPECT_EQ(one.complex.edge_count(), 1U);

  const auto q = dual_complex(fx::quadrant());
  EXPECT_EQ(q.complex.size(), 4U);
  EXPECT_TRUE(oracle::find_isomorphism(q.complex, fx::cycle(4)));
  EXPECT_EQ(q.complex.median_state(), MedianState::Verified);
  EXPECT_EQ(cubes(q.complex, 2).back().dim, 2U);

  const auto line = dual_complex(fx::nested_line());
  EXPECT_TRUE(oracle::find_isomorphism(line.complex, fx::path(4)));
  EXPECT_EQ(line.complex.name(0), "cLLL");
  ASSERT_TRUE(line.vertex_of(O("RRL")));
  EXPECT_EQ(*line.vertex_of(O("RRL")), 2U);
  EXPECT_FALSE(line.vertex_of(O("LRL")));
}

TEST(Dual, MatchesOracleOnRandomWallspaces) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const std::size_t points = 3 + seed % 9;
    const std::size_t cap = (std::size_t{1} << (points - 1)) - 1;
    const auto ws = fixtures::random_wallspace(points, 1 + seed % std::min<std::size_t>(10, cap), seed);
    const auto d = dual_complex(ws);
    EXPECT_EQ(strings(d.zero_cubes), oracle::zero_cubes(oracle::plain(ws))) << seed;
    EXPECT_TRUE(oracle::median_by_definition(d.complex)) << seed;
    for (const auto& e : d.complex.edges()) {
      EXPECT_EQ((d.zero_cubes[e.u].bits() ^ d.zero_cubes[e.v].bits()).count(), 1U);
    }
  }
}

TEST(Dual, WallHyperplaneBijection) {
  const auto ws = fixtures::random_wallspace(9, 7, 11);
  const auto d = dual_complex(ws);
  const auto sys = hyperplanes(d.complex);
  ASSERT_EQ(sys.planes.size(), ws.wall_count());
  std::set<HyperplaneId> seen(d.wall_to_hyperplane.begin(), d.wall_to_hyperplane.end());
  EXPECT_EQ(seen.size(), ws.wall_count());
  for (WallId w = 0; w < ws.wall_count(); ++w) {
    std::set<std::size_t> differing;
    for (std::size_t i = 0; i < d.complex.edges().size(); ++i) {
      const auto& e = d.complex.edges()[i];
      if (d.zero_cubes[e.u].side(w) != d.zero_cubes[e.v].side(w)) differing.insert(i);
    }
    const auto& h = sys.planes[d.wall_to_hyperplane[w]];
    EXPECT_EQ(differing, std::set<std::size_t>(h.dual_edges.begin(), h.dual_edges.end()));
  }
}

TEST(Dual, HyperplaneWallspace) {
  EXPECT_EQ(hyperplane_wallspace(fx::path(2)).wall_count(), 1U);
  const auto g = hyperplane_wallspace(fixtures::grid_complex({4, 4}));
  EXPECT_EQ(g.wall_count(), 6U);
  const auto classes = crossing_classes(g);
  ASSERT_EQ(classes.size(), 2U);
  EXPECT_EQ(classes[0].size(), 3U);
  EXPECT_EQ(classes[1].size(), 3U);

  const auto t = hyperplane_wallspace(fixtures::tree(10, 2));
  EXPECT_EQ(t.wall_count(), 9U);
  for (WallId a = 0; a < t.wall_count(); ++a) {
    for (WallId b = a + 1; b < t.wall_count(); ++b) EXPECT_FALSE(crosses(t, a, b));
  }
  EXPECT_EQ(code_of([] { hyperplane_wallspace(fx::cycle(6)); }), ErrorCode::NotMedian);
}

TEST(Dual, Roundtrip) {
  for (const auto& x : {fixtures::grid_complex({3, 4}), fixtures::tree(14, 6), fixtures::staircase(3).complex,
                        fixtures::grid_complex({2, 2, 3})}) {
    const auto ws = hyperplane_wallspace(x);
    const auto d = dual_complex(ws);
    std::vector<VertexId> map;
    for (VertexId v = 0; v < x.size(); ++v) map.push_back(*d.vertex_of(canonical_zero_cube(ws, v)));
    EXPECT_TRUE(is_isomorphism(x, d.complex, map));
  }
}

TEST(Dual, CanonicalDistanceIdentity) {
  const auto ws = fixtures::random_wallspace(12, 9, 77);
  const auto d = dual_complex(ws);
  const DistanceMatrix dm(d.complex);
  for (PointId x = 0; x < ws.point_count(); ++x) {
    for (PointId y = 0; y < ws.point_count(); ++y) {
      const auto cx = *d.vertex_of(canonical_zero_cube(ws, x));
      const auto cy = *d.vertex_of(canonical_zero_cube(ws, y));
      EXPECT_EQ(dm(cx, cy), separating_walls(ws, x, y).size());
    }
  }
}

TEST(Dual, RestrictionQuotient) {
  const auto q = fx::quadrant();
  const WallId all[] = {0, 1};
  EXPECT_EQ(restriction_quotient(q, all, O("RL")), O("RL"));
  const WallId first[] = {0};
  EXPECT_EQ(restriction_quotient(q, first, O("RL")).to_string(), "R");
  const WallId bad[] = {5};
  EXPECT_EQ(code_of([&] { restriction_quotient(q, bad, O("RL")); }), ErrorCode::NotSubset);
  EXPECT_EQ(code_of([&] { restriction_quotient(fx::nested_line(), first, O("LRL")); }), ErrorCode::InvalidOrientation);

  // 4x3 grid, walls of one direction: fibres are the columns
  const auto ws = hyperplane_wallspace(fixtures::grid_complex({4, 3}));
  const auto classes = crossing_classes(ws);
  const auto d = dual_complex(ws);
  for (const auto& cls : classes) {
    std::map<std::string, std::size_t> fibres;
    for (const auto& c : d.zero_cubes) ++fibres[restriction_quotient(ws, cls, c).to_string()];
    EXPECT_EQ(fibres.size(), cls.size() + 1);
    for (const auto& [key, size] : fibres) EXPECT_EQ(size, d.zero_cubes.size() / fibres.size());
  }
}

TEST(Dual, Lift) {
  const auto q = fx::quadrant();
  const WallId all[] = {0, 1};
  EXPECT_EQ(lift_zero_cube(q, all, O("LR"), 0), O("LR"));
  // point 2 sits on wall 1's Right
  const WallId first[] = {0};
  EXPECT_EQ(lift_zero_cube(q, first, O("L"), 1).to_string(), "LR");
  EXPECT_EQ(lift_zero_cube(q, first, O("L"), 0).to_string(), "LL");

  const auto line = fx::nested_line();
  const WallId outer[] = {2};
  for (PointId s = 0; s < 4; ++s) EXPECT_EQ(lift_zero_cube(line, outer, O("R"), s).to_string(), "RRR");
  EXPECT_EQ(code_of([&] { lift_zero_cube(line, outer, O("R"), 9); }), ErrorCode::UnknownPoint);
  EXPECT_EQ(code_of([&] { lift_zero_cube(line, outer, O("RR"), 0); }), ErrorCode::InvalidOrientation);
}

TEST(Dual, LiftIsSection) {
  for (std::uint64_t seed = 3; seed < 15; ++seed) {
    const auto ws = fixtures::random_wallspace(8, 7, seed);
    std::vector<WallId> subset;
    for (WallId w = 0; w < ws.wall_count(); ++w) {
      if ((seed >> (w % 4)) & 1U) subset.push_back(w);
    }
    if (subset.empty()) subset.push_back(0);
    const auto sub = sub_wallspace(ws, subset);
    for (const auto& z : dual_complex(sub).zero_cubes) {
      for (PointId s = 0; s < ws.point_count(); ++s) {
        const auto lifted = lift_zero_cube(ws, subset, z, s);
        EXPECT_TRUE(is_zero_cube(ws, lifted));
        EXPECT_EQ(restriction_quotient(ws, subset, lifted), z);
      }
    }
  }
}

TEST(Dual, RestrictedEmbedding) {
  const auto g = fixtures::grid_complex({4, 4});
  const auto whole = embed_restricted_dual(g, Bitset::full(g.size()));
  EXPECT_TRUE(whole.verdict.isometric);
  EXPECT_EQ(std::set<VertexId>(whole.into_complex.begin(), whole.into_complex.end()).size(), g.size());
  for (std::size_t i = 0; i < whole.images.size(); ++i) {
    EXPECT_EQ(whole.images[i], canonical_zero_cube(whole.ambient_walls, whole.into_complex[i]));
  }

  // boundary row: ids 0..3 share the first coordinate
  const auto row = embed_restricted_dual(g, Bitset::from_indices(16, std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_TRUE(row.verdict.isometric);
  EXPECT_TRUE(oracle::find_isomorphism(row.sub_dual.complex, fx::path(4)));
  std::set<VertexId> hit(row.into_complex.begin(), row.into_complex.end());
  EXPECT_EQ(hit, (std::set<VertexId>{0, 1, 2, 3}));

  const auto t = fixtures::tree(16, 8);
  Bitset sub(16);
  sub.set(0);
  for (VertexId nb : t.neighbors(0)) sub.set(nb);
  const auto tr = embed_restricted_dual(t, sub);
  EXPECT_TRUE(tr.verdict.isometric);

  EXPECT_EQ(code_of([&] { embed_restricted_dual(g, Bitset::from_indices(16, std::vector<std::uint32_t>{0, 15})); }),
            ErrorCode::NotConnected);
  EXPECT_EQ(code_of([] { embed_restricted_dual(fx::cycle(6), Bitset::full(6)); }), ErrorCode::NotMedian);
}
