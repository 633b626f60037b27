#pragma once

// Sageev duals of finite wallspaces. A 0-cube picks one halfspace per wall
// such that any two picks intersect; 0-cubes differing on exactly one wall
// are adjacent.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubix/bitset.hpp"
#include "cubix/complex.hpp"
#include "cubix/wallspace.hpp"

namespace cubix {

// Side per wall, packed with bit = Right. Compared as the side string
// ("LRRL") with L < R.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::size_t walls) : bits_(walls) {}
  explicit Orientation(Bitset right_bits) : bits_(std::move(right_bits)) {}

  // Throws InvalidOrientation on characters other than L and R.
  static Orientation parse(std::string_view sides);

  std::size_t size() const noexcept { return bits_.size(); }
  Side side(WallId w) const noexcept { return bits_.test(w) ? Side::Right : Side::Left; }
  void set(WallId w, Side s) noexcept { bits_.assign(w, s == Side::Right); }
  void flip(WallId w) noexcept { bits_.flip(w); }
  const Bitset& bits() const noexcept { return bits_; }

  std::string to_string() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend bool operator<(const Orientation& a, const Orientation& b) noexcept {
    return Bitset::index_lex_less(a.bits_, b.bits_);
  }

 private:
  Bitset bits_;
};

struct OrientationHash {
  std::size_t operator()(const Orientation& o) const noexcept { return o.bits().hash(); }
};

const Bitset& chosen_halfspace(const Wallspace& ws, const Orientation& o, WallId w);

// First pair of walls whose chosen halfspaces are disjoint. Cofiniteness
// holds automatically for finite wall lists.
std::optional<std::pair<WallId, WallId>> intersection_violation(const Wallspace& ws, const Orientation& o);
bool is_zero_cube(const Wallspace& ws, const Orientation& o);

// Throws UnknownPoint.
Orientation canonical_zero_cube(const Wallspace& ws, PointId x);

// All 2^walls side assignments filtered by the pairwise test, in canonical
// order. Throws LimitExceeded when 2^walls > limit.
std::vector<Orientation> enumerate_zero_cubes_bruteforce(const Wallspace& ws, std::uint64_t limit = 1U << 16);

struct DualComplex {
  Wallspace base;
  std::vector<Orientation> zero_cubes;  // canonical order; vertex i is zero_cubes[i]
  CubicalComplex complex;               // median-certified
  std::vector<HyperplaneId> wall_to_hyperplane;
  std::unordered_map<Orientation, VertexId, OrientationHash> index;

  std::optional<VertexId> vertex_of(const Orientation& o) const;
};

// Flip-search from the canonical 0-cube of the first point.
DualComplex dual_complex(const Wallspace& ws);

// One wall per hyperplane, sides as computed by hyperplanes(). Throws
// NotMedian.
Wallspace hyperplane_wallspace(const CubicalComplex& complex);

// Sorted, duplicate-free copy of V. Throws NotSubset.
std::vector<WallId> normalize_wall_subset(const Wallspace& ws, std::span<const WallId> subset);

// c restricted to V (ascending ids); a 0-cube of sub_wallspace(ws, V).
// Throws NotSubset, InvalidOrientation.
Orientation restriction_quotient(const Wallspace& ws, std::span<const WallId> subset, const Orientation& c);

// The explicit preimage: walls in V copy z; a wall outside V points to a side
// containing some chosen halfspace of z (the Right side is tried first), and
// otherwise to the side holding the basepoint. Throws NotSubset,
// InvalidOrientation, UnknownPoint.
Orientation lift_zero_cube(const Wallspace& ws, std::span<const WallId> subset, const Orientation& z,
                           PointId basepoint);

struct RestrictedEmbedding {
  Wallspace ambient_walls;              // hyperplane wallspace of X
  Restriction restriction;              // to Z
  DualComplex sub_dual;                 // C(Z, V)
  std::vector<Orientation> images;      // per sub-dual vertex, the 0-cube of C(X, W)
  std::vector<VertexId> into_complex;   // per sub-dual vertex, the vertex of X with that canonical 0-cube
  EmbeddingVerdict verdict;
};

// Walls meeting Z follow the restricted 0-cube; all other walls point at Z.
// Throws NotConnected, NotMedian.
RestrictedEmbedding embed_restricted_dual(const CubicalComplex& complex, const Bitset& subset);

}  // namespace cubix
