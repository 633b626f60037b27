#pragma once

// Deterministic complexes, wallspaces and actions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubix/actions.hpp"
#include "cubix/wallspace.hpp"

namespace cubix::fixtures {

// Integer box with per-axis extents; axis i runs over lo_i .. lo_i + w_i - 1
// with lo_i = -((w_i - 1) / 2). Vertex ids follow the lexicographic order of
// coordinate tuples; names are "v" + coordinates joined by '_', with a
// leading 'm' for negatives (v3_m2).
class GridShape {
 public:
  explicit GridShape(std::vector<std::size_t> widths);

  std::size_t dimension() const noexcept { return widths_.size(); }
  std::size_t size() const noexcept { return size_; }
  const std::vector<std::size_t>& widths() const noexcept { return widths_; }
  std::int64_t low(std::size_t axis) const noexcept { return lo_[axis]; }
  std::int64_t high(std::size_t axis) const noexcept {
    return lo_[axis] + static_cast<std::int64_t>(widths_[axis]) - 1;
  }

  std::vector<std::int64_t> coordinates(VertexId v) const;
  std::optional<VertexId> vertex(std::span<const std::int64_t> coords) const;
  std::string name(VertexId v) const;

 private:
  std::vector<std::size_t> widths_;
  std::vector<std::int64_t> lo_;
  std::size_t size_ = 1;
};

std::string coordinate_name(std::span<const std::int64_t> coords);

inline constexpr std::size_t kMaxGridDimension = 4;
inline constexpr std::size_t kMaxFixtureVertices = 200000;

// The box's 1-skeleton, any widths >= 1. Throws GuardExceeded past
// kMaxFixtureVertices.
CubicalComplex grid_complex(const std::vector<std::size_t>& widths);

// Partial map v -> v + offset.
Automorphism grid_translation(const GridShape& shape, std::span<const std::int64_t> offset, std::string name);

// Signed coordinate permutation about the origin, total when every width is
// equal and odd: coordinate i of the image is signs[i] * coordinate perm[i].
Automorphism grid_symmetry(const GridShape& shape, std::span<const std::size_t> perm, std::span<const int> signs,
                           std::string name);

// Window on the n-dimensional lattice, unit translations t1..tn, interior
// excluding `margin` shells. Throws GuardExceeded unless 1 <= n <= 4, there
// are n widths, and each width >= 2 * margin + 1 and >= 3.
ActionWindow grid(std::size_t n, const std::vector<std::size_t>& widths, std::size_t margin = 1);

// Reflection v -> offset - v on a one-dimensional grid window, defined where
// the image lies in the window.
Automorphism path_reflection(const GridShape& shape, std::int64_t offset, std::string name);

struct TorusComplex {
  std::size_t generators = 0;
  std::size_t max_dim = 0;
  std::vector<std::vector<std::uint32_t>> cells;  // generator subsets, by (size, lex)
  std::vector<std::size_t> cube_counts;           // per dimension 0..max_dim

  // Universal-cover window of radius/width `width`: for one-dimensional
  // truncations with several generators the Cayley tree of the free group
  // (ball of radius `width`, left multiplication by a, b, ...), otherwise
  // the Z^k grid of that width.
  ActionWindow cover(std::size_t width) const;
};

// One 0-cube, k 1-cubes, and a j-cube per j-subset for j <= d. Throws
// GuardExceeded unless 1 <= k <= 5 and 1 <= d <= k.
TorusComplex torus_complex(std::size_t k, std::size_t d);

// Tree with `legs` paths of `leg_length` edges from a centre ("c";
// leg j vertex k is "l<j>_<k>"). Generator "r" rotates legs cyclically.
// Throws GuardExceeded unless legs >= 2, leg_length >= 1.
ActionWindow star(std::size_t legs, std::size_t leg_length);

// Leg j goes to leg perm[j]. Throws InvalidAction on a non-permutation.
Automorphism star_permutation(std::size_t legs, std::size_t leg_length, std::span<const std::size_t> perm,
                              std::string name);

// Unit squares [i, i+1]^2 for i < steps, glued at the diagonal corners, with
// the partial glide g: (x, y) -> (x+1, y+1). Interior: min coordinate >= 1,
// max <= steps - 1. Throws GuardExceeded unless steps >= 3.
ActionWindow staircase(std::size_t steps);

// Path of `length` vertices times an edge, shift "t" along the path.
// Throws GuardExceeded unless length >= 3.
ActionWindow ladder(std::size_t length);

// Random recursive tree on `vertices` vertices ("t0", "t1", ...).
CubicalComplex tree(std::size_t vertices, std::uint64_t seed);

inline constexpr std::size_t kMaxRandomPoints = 24;

// Points "p0".. ; each wall is a uniformly drawn proper bipartition,
// rejected when already present. Throws GuardExceeded unless
// 2 <= points <= 24 and walls fits the 2^(points-1) - 1 available.
Wallspace random_wallspace(std::size_t points, std::size_t walls, std::uint64_t seed);

enum class FixtureKind { Grid, TorusComplex, Star, Staircase, Ladder, RandomWallspace, Tree };

struct FixtureSpec {
  FixtureKind kind = FixtureKind::Grid;
  std::vector<std::size_t> params;
  std::uint64_t seed = 0;
};

struct Fixture {
  std::optional<ActionWindow> window;
  std::optional<CubicalComplex> complex;
  std::optional<Wallspace> wallspace;
  std::optional<TorusComplex> torus;
};

// Throws GuardExceeded on a bad kind or parameter count.
FixtureKind parse_fixture_kind(const std::string& kind);
std::string to_string(FixtureKind kind);

// Parameters: grid n w1..wn | torus k d width | star legs length |
// staircase steps | ladder length | random-wallspace points walls | tree
// vertices. Seeds apply to the random kinds.
Fixture make_fixture(const FixtureSpec& spec);

}  // namespace cubix::fixtures
