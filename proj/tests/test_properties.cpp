// Seeded property checks. Each generator below draws a structure from a
// mt19937_64 stream; failures print the seed so a case can be replayed.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cubix/axis.hpp"
#include "cubix/dual.hpp"
#include "cubix/fixtures.hpp"
#include "cubix/io/formats.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cubix;
using fixtures::GridShape;

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Wallspace gen_wallspace(Rng& rng, std::size_t max_walls = 10) {
  const std::size_t points = pick(rng, 2, 10);
  const std::size_t cap = (std::size_t{1} << (points - 1)) - 1;
  return fixtures::random_wallspace(points, pick(rng, 1, std::min(max_walls, cap)), rng());
}

// Median graphs from three sources: duals, trees, boxes.
CubicalComplex gen_median(Rng& rng) {
  switch (pick(rng, 0, 2)) {
    case 0: return dual_complex(gen_wallspace(rng, 8)).complex;
    case 1: return fixtures::tree(pick(rng, 1, 25), rng());
    default: {
      std::vector<std::size_t> w(pick(rng, 1, 3));
      for (auto& x : w) x = pick(rng, 1, 4);
      return fixtures::grid_complex(w);
    }
  }
}

Bitset gen_connected_subset(Rng& rng, const CubicalComplex& c, std::size_t target) {
  Bitset in(c.size());
  std::vector<VertexId> frontier{static_cast<VertexId>(pick(rng, 0, c.size() - 1))};
  in.set(frontier[0]);
  std::size_t count = 1;
  while (count < target) {
    const VertexId from = frontier[pick(rng, 0, frontier.size() - 1)];
    const auto nbs = c.neighbors(from);
    const VertexId to = nbs[pick(rng, 0, nbs.size() - 1)];
    if (!in.test(to)) {
      in.set(to);
      frontier.push_back(to);
      ++count;
    }
  }
  return in;
}

ActionWindow total(CubicalComplex c, std::vector<Automorphism> gens) {
  const auto n = c.size();
  return ActionWindow{std::move(c), Bitset::full(n), std::move(gens)};
}

// Finite group actions: signed permutations of an odd cube, or leg
// permutations of a star.
ActionWindow gen_finite_action(Rng& rng) {
  if (pick(rng, 0, 1) == 0) {
    const std::size_t dim = pick(rng, 1, 3);
    const std::size_t width = dim == 3 ? 3 : 2 * pick(rng, 1, 2) + 1;
    const std::vector<std::size_t> widths(dim, width);
    const GridShape shape(widths);
    std::vector<Automorphism> gens;
    for (std::size_t g = pick(rng, 1, 2); g > 0; --g) {
      std::vector<std::size_t> perm(dim);
      std::iota(perm.begin(), perm.end(), 0U);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> signs(dim);
      for (auto& s : signs) s = pick(rng, 0, 1) ? 1 : -1;
      gens.push_back(fixtures::grid_symmetry(shape, perm, signs, "g" + std::to_string(g)));
    }
    return total(fixtures::grid_complex(widths), std::move(gens));
  }
  const std::size_t legs = pick(rng, 2, 5);
  const std::size_t len = pick(rng, 1, 3);
  auto w = fixtures::star(legs, len);
  std::vector<std::size_t> perm(legs);
  std::iota(perm.begin(), perm.end(), 0U);
  std::shuffle(perm.begin(), perm.end(), rng);
  w.generators = {fixtures::star_permutation(legs, len, perm, "p")};
  return w;
}

std::set<std::pair<std::set<std::string>, std::set<std::string>>> wall_set(const Wallspace& ws) {
  std::set<std::pair<std::set<std::string>, std::set<std::string>>> out;
  for (const auto& w : ws.walls()) {
    std::set<std::string> l, r;
    for (auto i : w.left.indices()) l.insert(ws.point_name(i));
    for (auto i : w.right.indices()) r.insert(ws.point_name(i));
    out.insert(std::min(std::pair{l, r}, std::pair{r, l}));
  }
  return out;
}

constexpr int kCases = 60;

}  // namespace

TEST(WallspaceProperties, TriangleInequalityAndCrossing) {
  Rng rng(101);
  for (int i = 0; i < kCases; ++i) {
    const auto ws = gen_wallspace(rng);
    const auto n = ws.point_count();
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        for (PointId z = 0; z < n; ++z) {
          EXPECT_LE(separating_walls(ws, x, z).size(),
                    separating_walls(ws, x, y).size() + separating_walls(ws, y, z).size());
        }
      }
    }
    const auto p = oracle::plain(ws);
    for (WallId a = 0; a < ws.wall_count(); ++a) {
      EXPECT_EQ(fx::code_of([&] { crosses(ws, a, a); }), ErrorCode::SameWall);
      for (WallId b = a + 1; b < ws.wall_count(); ++b) {
        EXPECT_EQ(crosses(ws, a, b), crosses(ws, b, a));
        EXPECT_EQ(crosses(ws, a, b), oracle::crosses(p, a, b));
      }
    }
    const auto classes = crossing_classes(ws);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t d = c + 1; d < classes.size(); ++d) {
        for (WallId a : classes[c]) {
          for (WallId b : classes[d]) EXPECT_TRUE(crosses(ws, a, b));
        }
      }
    }
    EXPECT_NO_THROW(validate_partition(ws, classes));
  }
}

TEST(WallspaceProperties, RestrictIsFunctorial) {
  Rng rng(102);
  for (int i = 0; i < kCases; ++i) {
    const auto ws = gen_wallspace(rng);
    const auto n = ws.point_count();
    Bitset big(n), small(n);
    for (PointId p = 0; p < n; ++p) {
      if (pick(rng, 0, 3) > 0) big.set(p);
    }
    if (big.none()) big.set(0);
    for (PointId p : big.indices()) {
      if (pick(rng, 0, 1)) small.set(p);
    }
    if (small.none()) small.set(big.find_first());

    const auto direct = restrict(ws, small);
    const auto first = restrict(ws, big);
    Bitset inner(first.wallspace.point_count());
    for (PointId q = 0; q < first.point_map.size(); ++q) {
      if (small.test(first.point_map[q])) inner.set(q);
    }
    const auto twice = restrict(first.wallspace, inner);
    EXPECT_EQ(wall_set(direct.wallspace), wall_set(twice.wallspace)) << i;
    EXPECT_EQ(direct.wallspace.points(), twice.wallspace.points());
  }
}

TEST(WallspaceProperties, TextRoundtrip) {
  Rng rng(103);
  for (int i = 0; i < kCases; ++i) {
    const auto ws = gen_wallspace(rng);
    const auto text = io::write_wallspace(ws);
    const auto back = io::parse_wallspace(text);
    EXPECT_EQ(io::write_wallspace(back), text);
    EXPECT_EQ(wall_set(back), wall_set(ws));
  }
}

TEST(ComplexProperties, DistanceIsSeparatingHyperplaneCount) {
  Rng rng(201);
  for (int i = 0; i < kCases; ++i) {
    const auto c = gen_median(rng);
    const auto sys = hyperplanes(c);
    const auto d = oracle::floyd(c);
    for (VertexId x = 0; x < c.size(); ++x) {
      for (VertexId y = 0; y < c.size(); ++y) {
        EXPECT_EQ(static_cast<std::size_t>(d[x][y]), sys.separating(x, y).size());
      }
    }
  }
}

TEST(ComplexProperties, HyperplaneStructure) {
  Rng rng(202);
  for (int i = 0; i < kCases; ++i) {
    const auto c = gen_median(rng);
    const auto sys = hyperplanes(c);
    for (const auto& h : sys.planes) {
      std::set<VertexId> left_ends, right_ends;
      for (auto e : h.dual_edges) {
        const auto& edge = c.edges()[e];
        EXPECT_NE(h.left.test(edge.u), h.left.test(edge.v));
        (h.left.test(edge.u) ? left_ends : right_ends).insert(edge.u);
        (h.left.test(edge.v) ? left_ends : right_ends).insert(edge.v);
      }
      // a perfect matching between the carrier's two sides
      EXPECT_EQ(left_ends.size(), h.dual_edges.size());
      EXPECT_EQ(right_ends.size(), h.dual_edges.size());
      EXPECT_EQ(left_ends.size() + right_ends.size(), h.carrier.count());
      EXPECT_TRUE(is_convex(c, h.left).convex);
      EXPECT_TRUE(is_convex(c, h.right).convex);
      std::vector<bool> lv(c.size());
      for (VertexId v = 0; v < c.size(); ++v) lv[v] = h.left.test(v);
      EXPECT_TRUE(oracle::convex(c, lv));
    }
  }
}

TEST(ComplexProperties, ConvexityMatchesOracle) {
  Rng rng(203);
  for (int i = 0; i < kCases; ++i) {
    const auto c = gen_median(rng);
    const auto y = gen_connected_subset(rng, c, pick(rng, 1, c.size()));
    std::vector<bool> yv(c.size());
    for (VertexId v = 0; v < c.size(); ++v) yv[v] = y.test(v);
    EXPECT_EQ(is_convex(c, y).convex, oracle::convex(c, yv)) << i;
  }
}

TEST(ComplexProperties, Subdivision) {
  Rng rng(204);
  for (int i = 0; i < 25; ++i) {
    const auto c = gen_median(rng);
    if (c.size() > 40) continue;
    const auto sub = cubical_subdivision(c);
    EXPECT_EQ(sub.complex.size(), all_cubes(c).size());
    EXPECT_TRUE(is_median(sub.complex).median);
    const DistanceMatrix dc(c), ds(sub.complex);
    for (VertexId x = 0; x < c.size(); ++x) {
      for (VertexId y = 0; y < c.size(); ++y) {
        EXPECT_EQ(ds(*sub.vertex_of({x}), *sub.vertex_of({y})), 2 * dc(x, y));
      }
    }
  }
  const auto grid = cubical_subdivision(fixtures::grid_complex({4, 4}));
  EXPECT_EQ(hyperplanes(grid.complex).planes.size(), 12U);
}

TEST(ComplexProperties, CubeCountsMatchBoxFormula) {
  Rng rng(205);
  for (int i = 0; i < 20; ++i) {
    std::vector<std::size_t> w(pick(rng, 1, 4));
    for (auto& x : w) x = pick(rng, 1, 4);
    const auto cs = all_cubes(fixtures::grid_complex(w));
    for (std::size_t k = 0; k <= w.size(); ++k) {
      const auto n = std::count_if(cs.begin(), cs.end(), [&](const Cube& q) { return q.dim == k; });
      EXPECT_EQ(static_cast<std::size_t>(n), oracle::box_cube_count(w, k));
    }
  }
}

TEST(DualProperties, OracleEquivalenceAndMedian) {
  Rng rng(301);
  for (int i = 0; i < kCases; ++i) {
    const auto ws = gen_wallspace(rng, 12);
    const auto d = dual_complex(ws);
    std::vector<std::string> got;
    for (const auto& o : d.zero_cubes) got.push_back(o.to_string());
    EXPECT_EQ(got, oracle::zero_cubes(oracle::plain(ws)));
    EXPECT_TRUE(is_median(d.complex).median);
  }
}

TEST(DualProperties, Roundtrip) {
  Rng rng(302);
  for (int i = 0; i < kCases; ++i) {
    const auto x = gen_median(rng);
    const auto ws = hyperplane_wallspace(x);
    const auto d = dual_complex(ws);
    std::vector<VertexId> map;
    for (VertexId v = 0; v < x.size(); ++v) map.push_back(*d.vertex_of(canonical_zero_cube(ws, v)));
    EXPECT_TRUE(is_isomorphism(x, d.complex, map)) << i;
  }
}

TEST(DualProperties, LiftSurjectivity) {
  Rng rng(303);
  for (int i = 0; i < kCases; ++i) {
    const auto ws = gen_wallspace(rng);
    std::vector<WallId> subset;
    for (WallId w = 0; w < ws.wall_count(); ++w) {
      if (pick(rng, 0, 1)) subset.push_back(w);
    }
    if (subset.empty()) subset.push_back(static_cast<WallId>(ws.wall_count() - 1));
    for (const auto& z : dual_complex(sub_wallspace(ws, subset)).zero_cubes) {
      for (PointId s = 0; s < ws.point_count(); ++s) {
        const auto lifted = lift_zero_cube(ws, subset, z, s);
        EXPECT_TRUE(is_zero_cube(ws, lifted));
        EXPECT_EQ(restriction_quotient(ws, subset, lifted), z);
      }
    }
  }
}

TEST(DualProperties, RestrictedEmbeddingsAreIsometric) {
  Rng rng(304);
  for (int i = 0; i < kCases; ++i) {
    const auto x = gen_median(rng);
    const auto z = gen_connected_subset(rng, x, pick(rng, 1, x.size()));
    const auto e = embed_restricted_dual(x, z);
    EXPECT_TRUE(e.verdict.isometric) << i;
  }
}

TEST(ActionProperties, SubdivisionRemovesInversions) {
  Rng rng(401);
  for (int i = 0; i < 30; ++i) {
    const auto w = gen_finite_action(rng);
    const auto sub = subdivide_action(w);
    EXPECT_TRUE(detect_inversions(sub).empty()) << i;
    EXPECT_NO_THROW(validate_action(sub));
  }
  auto refl = fixtures::grid(1, {9});
  refl.generators = {fixtures::path_reflection(GridShape({9}), 1, "s")};
  EXPECT_FALSE(detect_inversions(refl).empty());
  EXPECT_TRUE(detect_inversions(subdivide_action(refl)).empty());
}

TEST(ActionProperties, MinimizationOfFiniteGroups) {
  Rng rng(402);
  for (int i = 0; i < 30; ++i) {
    auto w = gen_finite_action(rng);
    if (!detect_inversions(w).empty()) w = subdivide_action(w);
    const auto m = minimize_invariant_subcomplex(w);
    EXPECT_EQ(m.vertices.count(), 1U) << i;
    EXPECT_TRUE(is_convex(w.complex, m.vertices).convex);
    const VertexId v = static_cast<VertexId>(m.vertices.find_first());
    for (const auto& g : w.generators) EXPECT_EQ(*g.apply(v), v);
    // running the loop again on its output removes nothing
    const auto again = minimize_invariant_subcomplex(total(induced_subcomplex(w.complex, m.vertices).complex,
                                                           {Automorphism::identity(1)}));
    EXPECT_TRUE(again.log.empty());
  }
}

TEST(ActionProperties, QuotientIsEquivariant) {
  Rng rng(403);
  for (int i = 0; i < 30; ++i) {
    const auto w = gen_finite_action(rng);
    const auto ws = hyperplane_wallspace(w.complex);
    const auto sys = hyperplanes(w.complex);
    const auto wa = induced_wall_action(w, sys);
    // orbit of a random hyperplane
    std::set<WallId> orbit{static_cast<WallId>(pick(rng, 0, ws.wall_count() - 1))};
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& images : wa.images) {
        for (WallId h : std::vector<WallId>(orbit.begin(), orbit.end())) grew |= orbit.insert(images[h]->target).second;
      }
    }
    const std::vector<WallId> v(orbit.begin(), orbit.end());
    for (std::size_t g = 0; g < w.generators.size(); ++g) {
      for (VertexId x = 0; x < w.complex.size(); ++x) {
        const auto c = canonical_zero_cube(ws, x);
        const auto lhs = restriction_quotient(ws, v, act_on_zero_cube(wa, g, c));
        const auto z = restriction_quotient(ws, v, c);
        Orientation rhs(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
          const auto& img = *wa.images[g][v[k]];
          const auto pos = static_cast<WallId>(std::lower_bound(v.begin(), v.end(), img.target) - v.begin());
          rhs.set(pos, img.side_preserved ? z.side(static_cast<WallId>(k)) : opposite(z.side(static_cast<WallId>(k))));
        }
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(ActionProperties, ProductMetricIsL1) {
  Rng rng(404);
  for (int i = 0; i < 20; ++i) {
    std::vector<std::size_t> widths(pick(rng, 1, 3));
    for (auto& x : widths) x = pick(rng, 2, 4);
    const auto ws = hyperplane_wallspace(fixtures::grid_complex(widths));
    const auto p = product_decomposition(ws);
    EXPECT_TRUE(p.certificate.passed()) << p.certificate.witness;
    std::size_t nontrivial = 0;
    for (auto x : widths) nontrivial += x > 1;
    EXPECT_EQ(p.factors.size(), nontrivial);
    const DistanceMatrix d(p.dual.complex);
    std::vector<DistanceMatrix> fd;
    for (const auto& f : p.factors) fd.emplace_back(f.dual.complex);
    for (VertexId x = 0; x < p.dual.complex.size(); ++x) {
      for (VertexId y = 0; y < p.dual.complex.size(); ++y) {
        std::size_t sum = 0;
        for (std::size_t k = 0; k < fd.size(); ++k) sum += fd[k](p.coordinates[x][k], p.coordinates[y][k]);
        EXPECT_EQ(d(x, y), sum);
      }
    }
  }
  for (int i = 0; i < 20; ++i) {
    const auto ws = gen_wallspace(rng);
    EXPECT_TRUE(product_decomposition(ws).certificate.passed());
  }
}

TEST(ActionProperties, ConjugacyInvariance) {
  Rng rng(405);
  for (int i = 0; i < 30; ++i) {
    const auto w = gen_finite_action(rng);
    const auto group = word_maps(w);
    const auto& g = group[pick(rng, 0, group.size() - 1)].map;
    const auto& h = group[pick(rng, 0, group.size() - 1)].map;
    const auto c = conjugate(h, g);
    EXPECT_EQ(translation_length(w.complex, g), translation_length(w.complex, c));
    EXPECT_EQ(translation_length(w.complex, g), oracle::min_displacement(w.complex, g.map));
  }
}

TEST(AxisProperties, Dichotomy) {
  Rng rng(501);
  for (int i = 0; i < 25; ++i) {
    ActionWindow w;
    switch (pick(rng, 0, 2)) {
      case 0: w = fixtures::staircase(pick(rng, 3, 9)); break;
      case 1: w = gen_finite_action(rng); break;
      default: {
        const std::size_t width = 2 * pick(rng, 3, 5) + 1;
        w = fixtures::grid(2, {width, width}, 2);
        const std::int64_t off[] = {static_cast<std::int64_t>(pick(rng, 0, 1)), static_cast<std::int64_t>(pick(rng, 1, 2))};
        w.generators = {fixtures::grid_translation(GridShape({width, width}), off, "d")};
      }
    }
    if (!detect_inversions(w).empty()) w = subdivide_action(w);
    const auto out = build_axis(w, 0);
    const auto& g = w.generators[0];
    if (const auto* fixed = std::get_if<FixedZeroCube>(&out)) {
      EXPECT_EQ(*g.apply(fixed->vertex), fixed->vertex);
      continue;
    }
    const auto& a = std::get<AxisCertificate>(out);
    EXPECT_TRUE(a.checks.all()) << i;
    const auto d = oracle::floyd(w.complex);
    int best = oracle::kInf;
    for (VertexId v : w.interior.indices()) {
      if (g.defined(v)) best = std::min(best, d[v][g.map[v]]);
    }
    EXPECT_EQ(a.translation_length, static_cast<std::size_t>(best));
    for (std::size_t p = 0; p < a.full_path.size(); ++p) {
      for (std::size_t q = 0; q < a.full_path.size(); ++q) {
        EXPECT_EQ(static_cast<std::size_t>(d[a.full_path[p]][a.full_path[q]]), p > q ? p - q : q - p);
      }
      if (p + a.translation_length < a.full_path.size() && g.defined(a.full_path[p])) {
        EXPECT_EQ(g.map[a.full_path[p]], a.full_path[p + a.translation_length]);
      }
    }
    const auto sys = hyperplanes(w.complex);
    std::set<HyperplaneId> crossed;
    for (std::size_t p = 0; p + 1 < a.full_path.size(); ++p) {
      EXPECT_TRUE(crossed.insert(sys.plane_of_edge[*w.complex.edge_index(a.full_path[p], a.full_path[p + 1])]).second);
    }
  }
}

TEST(FixtureProperties, DeterministicMedianValid) {
  Rng rng(601);
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t seed = rng();
    const auto a = fixtures::tree(pick(rng, 1, 20), seed);
    const auto b = fixtures::tree(a.size(), seed);
    EXPECT_EQ(a.edges(), b.edges());
    EXPECT_TRUE(is_median(a).median);
    const auto w = gen_finite_action(rng);
    EXPECT_TRUE(is_median(w.complex).median);
    EXPECT_NO_THROW(validate_action(w));
    const auto text = io::write_complex(w.complex);
    EXPECT_EQ(io::write_complex(io::parse_complex(text).complex), text);
    EXPECT_EQ(io::parse_action(io::write_action(w.complex, w.generators), w.complex)[0].map, w.generators[0].map);
  }
}
