#pragma once

// Finite wallspaces: a ground set of named points and a duplicate-free list
// of two-sided partitions. Halfspaces are stored as bitsets over point ids.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubix/bitset.hpp"
#include "cubix/types.hpp"

namespace cubix {

struct Wall {
  WallId id = 0;
  Bitset left;
  Bitset right;

  const Bitset& side(Side s) const noexcept { return s == Side::Left ? left : right; }
};

// A wall as written by a user: two lists of point names.
struct RawWall {
  std::vector<std::string> left;
  std::vector<std::string> right;
};

class Wallspace {
 public:
  // Empty placeholder; real wallspaces come from the factories.
  Wallspace() = default;

  // Validates and assigns wall ids in input order. Throws EmptyPointSet,
  // DuplicatePoint, UnknownPoint, EmptyHalfspace, OverlappingHalfspaces,
  // IncompleteCover or DuplicateWall.
  static Wallspace create(std::vector<std::string> points, const std::vector<RawWall>& walls);

  // Same validation, halfspaces given as (left, right) bitsets over points.
  static Wallspace from_halfspaces(std::vector<std::string> points,
                                   std::vector<std::pair<Bitset, Bitset>> walls);

  std::size_t point_count() const noexcept { return points_.size(); }
  std::size_t wall_count() const noexcept { return walls_.size(); }

  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<Wall>& walls() const noexcept { return walls_; }
  const std::string& point_name(PointId p) const;
  const Wall& wall(WallId w) const;

  PointId point_index(const std::string& name) const;
  std::optional<PointId> find_point(const std::string& name) const;

  Side side_of(WallId w, PointId p) const;

  // Validates that p names a point; throws UnknownPoint otherwise.
  void check_point(PointId p) const;

 private:

  std::vector<std::string> points_;
  std::unordered_map<std::string, PointId> index_;
  std::vector<Wall> walls_;
};

bool separates(const Wallspace& ws, WallId w, PointId x, PointId y);

// The walls separating x and y, ascending. Its size is the wall distance.
std::vector<WallId> separating_walls(const Wallspace& ws, PointId x, PointId y);

// All four quadrants nonempty. Throws UnknownWall or SameWall.
bool crosses(const Wallspace& ws, WallId a, WallId b);

struct RestrictedWall {
  WallId id = 0;
  // true when the restricted wall's Left is the original's Right; happens
  // only for walls merged into an earlier wall with the opposite labelling.
  bool flipped = false;
};

struct WallMerge {
  WallId kept;     // original id of the surviving wall
  WallId merged;   // original id folded into it
};

struct Restriction {
  Wallspace wallspace;
  // original point id of each restricted point
  std::vector<PointId> point_map;
  // per original wall: restricted wall, or nullopt when the wall does not
  // intersect the subset
  std::vector<std::optional<RestrictedWall>> wall_map;
  std::vector<WallMerge> merges;
};

// Throws EmptySubset or UnknownPoint.
Restriction restrict(const Wallspace& ws, const Bitset& subset);
Restriction restrict(const Wallspace& ws, std::span<const PointId> subset);

// Components of the non-crossing graph; every two walls from different
// classes cross. Classes ordered by their least wall id, ids ascending.
std::vector<std::vector<WallId>> crossing_classes(const Wallspace& ws);

// Checks that `partition` covers every wall exactly once (InvalidPartition)
// and that walls in distinct classes cross (PartitionNotPairwiseCrossing,
// with the first offending pair in the message).
void validate_partition(const Wallspace& ws, const std::vector<std::vector<WallId>>& partition);

// (S, V): the same ground set with only the walls in `walls`, in the given
// order. Throws UnknownWall; duplicates in `walls` are rejected as NotSubset.
Wallspace sub_wallspace(const Wallspace& ws, std::span<const WallId> walls);

}  // namespace cubix
