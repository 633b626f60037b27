#include "cubix/wallspace.hpp"

#include <algorithm>
#include <numeric>

#include "cubix/error.hpp"

namespace cubix {
namespace {

std::string describe(const Wallspace& ws, const Bitset& side) {
  std::string out = "{";
  bool first = true;
  side.for_each([&](std::uint32_t p) {
    if (!first) out += ",";
    out += ws.points()[p];
    first = false;
  });
  return out + "}";
}

// The halfspace containing point 0 identifies the unordered partition.
const Bitset& canonical_side(const Bitset& left, const Bitset& right) {
  return left.test(0) ? left : right;
}

}  // namespace

Wallspace Wallspace::create(std::vector<std::string> points, const std::vector<RawWall>& walls) {
  Wallspace probe;
  if (points.empty()) throw Error(ErrorCode::EmptyPointSet, "a wallspace needs at least one point");
  for (PointId i = 0; i < points.size(); ++i) {
    if (!probe.index_.emplace(points[i], i).second) {
      throw Error(ErrorCode::DuplicatePoint, "point '" + points[i] + "' listed twice");
    }
  }
  std::vector<std::pair<Bitset, Bitset>> halves;
  halves.reserve(walls.size());
  for (std::size_t w = 0; w < walls.size(); ++w) {
    Bitset left(points.size());
    Bitset right(points.size());
    for (const auto& name : walls[w].left) {
      const auto it = probe.index_.find(name);
      if (it == probe.index_.end()) {
        throw Error(ErrorCode::UnknownPoint, "wall " + std::to_string(w) + " names unknown point '" + name + "'");
      }
      left.set(it->second);
    }
    for (const auto& name : walls[w].right) {
      const auto it = probe.index_.find(name);
      if (it == probe.index_.end()) {
        throw Error(ErrorCode::UnknownPoint, "wall " + std::to_string(w) + " names unknown point '" + name + "'");
      }
      right.set(it->second);
    }
    // A point listed on both sides, or twice on one side, must be caught
    // before the bitsets forget the multiplicity.
    const std::size_t listed = walls[w].left.size() + walls[w].right.size();
    if (left.intersects(right) || listed != left.count() + right.count()) {
      throw Error(ErrorCode::OverlappingHalfspaces, "wall " + std::to_string(w) + " lists a point twice");
    }
    halves.emplace_back(std::move(left), std::move(right));
  }
  return from_halfspaces(std::move(points), std::move(halves));
}

Wallspace Wallspace::from_halfspaces(std::vector<std::string> points,
                                     std::vector<std::pair<Bitset, Bitset>> walls) {
  Wallspace ws;
  if (points.empty()) throw Error(ErrorCode::EmptyPointSet, "a wallspace needs at least one point");
  for (PointId i = 0; i < points.size(); ++i) {
    if (!ws.index_.emplace(points[i], i).second) {
      throw Error(ErrorCode::DuplicatePoint, "point '" + points[i] + "' listed twice");
    }
  }
  ws.points_ = std::move(points);
  const std::size_t n = ws.points_.size();
  const Bitset everything = Bitset::full(n);

  std::unordered_map<Bitset, WallId, BitsetHash> seen;
  ws.walls_.reserve(walls.size());
  for (std::size_t w = 0; w < walls.size(); ++w) {
    auto& [left, right] = walls[w];
    if (left.size() != n || right.size() != n) {
      throw Error(ErrorCode::UnknownPoint, "wall " + std::to_string(w) + " is sized for a different ground set");
    }
    if (left.none() || right.none()) {
      throw Error(ErrorCode::EmptyHalfspace, "wall " + std::to_string(w) + " has an empty halfspace");
    }
    if (left.intersects(right)) {
      throw Error(ErrorCode::OverlappingHalfspaces,
                  "wall " + std::to_string(w) + " halfspaces share " + describe(ws, left & right));
    }
    if ((left | right) != everything) {
      throw Error(ErrorCode::IncompleteCover,
                  "wall " + std::to_string(w) + " misses " + describe(ws, everything - (left | right)));
    }
    const auto [it, inserted] = seen.emplace(canonical_side(left, right), static_cast<WallId>(w));
    if (!inserted) {
      throw Error(ErrorCode::DuplicateWall, "walls " + std::to_string(it->second) + " and " +
                                                std::to_string(w) + " induce the same partition");
    }
    ws.walls_.push_back(Wall{static_cast<WallId>(w), std::move(left), std::move(right)});
  }
  return ws;
}

const std::string& Wallspace::point_name(PointId p) const {
  check_point(p);
  return points_[p];
}

const Wall& Wallspace::wall(WallId w) const {
  if (w >= walls_.size()) throw Error(ErrorCode::UnknownWall, "wall id " + std::to_string(w));
  return walls_[w];
}

PointId Wallspace::point_index(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorCode::UnknownPoint, "no point named '" + name + "'");
  return it->second;
}

std::optional<PointId> Wallspace::find_point(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Wallspace::check_point(PointId p) const {
  if (p >= points_.size()) throw Error(ErrorCode::UnknownPoint, "point id " + std::to_string(p));
}

Side Wallspace::side_of(WallId w, PointId p) const {
  check_point(p);
  return wall(w).left.test(p) ? Side::Left : Side::Right;
}

bool separates(const Wallspace& ws, WallId w, PointId x, PointId y) {
  return ws.side_of(w, x) != ws.side_of(w, y);
}

std::vector<WallId> separating_walls(const Wallspace& ws, PointId x, PointId y) {
  ws.check_point(x);
  ws.check_point(y);
  std::vector<WallId> out;
  for (const auto& w : ws.walls()) {
    if (w.left.test(x) != w.left.test(y)) out.push_back(w.id);
  }
  return out;
}

bool crosses(const Wallspace& ws, WallId a, WallId b) {
  const Wall& wa = ws.wall(a);
  const Wall& wb = ws.wall(b);
  if (a == b) throw Error(ErrorCode::SameWall, "wall " + std::to_string(a) + " compared with itself");
  return wa.left.intersects(wb.left) && wa.left.intersects(wb.right) &&
         wa.right.intersects(wb.left) && wa.right.intersects(wb.right);
}

Restriction restrict(const Wallspace& ws, const Bitset& subset) {
  if (subset.size() != ws.point_count()) {
    throw Error(ErrorCode::UnknownPoint, "subset is sized for a different ground set");
  }
  if (subset.none()) throw Error(ErrorCode::EmptySubset, "restriction to the empty set");

  Restriction out{Wallspace(), subset.indices(), {}, {}};
  const std::size_t m = out.point_map.size();

  std::vector<std::string> names;
  names.reserve(m);
  for (PointId p : out.point_map) names.push_back(ws.points()[p]);

  auto project = [&](const Bitset& side) {
    Bitset local(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (side.test(out.point_map[i])) local.set(i);
    }
    return local;
  };

  std::vector<std::pair<Bitset, Bitset>> kept;
  std::unordered_map<Bitset, WallId, BitsetHash> seen;
  out.wall_map.assign(ws.wall_count(), std::nullopt);
  std::vector<WallId> kept_origin;
  for (const auto& w : ws.walls()) {
    if (!w.left.intersects(subset) || !w.right.intersects(subset)) continue;
    Bitset left = project(w.left);
    Bitset right = project(w.right);
    const Bitset& key = canonical_side(left, right);
    const auto it = seen.find(key);
    if (it != seen.end()) {
      const bool flipped = kept[it->second].first != left;
      out.wall_map[w.id] = RestrictedWall{it->second, flipped};
      out.merges.push_back(WallMerge{kept_origin[it->second], w.id});
      continue;
    }
    const auto id = static_cast<WallId>(kept.size());
    seen.emplace(key, id);
    out.wall_map[w.id] = RestrictedWall{id, false};
    kept_origin.push_back(w.id);
    kept.emplace_back(std::move(left), std::move(right));
  }
  out.wallspace = Wallspace::from_halfspaces(std::move(names), std::move(kept));
  return out;
}

Restriction restrict(const Wallspace& ws, std::span<const PointId> subset) {
  Bitset mask(ws.point_count());
  for (PointId p : subset) {
    ws.check_point(p);
    mask.set(p);
  }
  return restrict(ws, mask);
}

std::vector<std::vector<WallId>> crossing_classes(const Wallspace& ws) {
  const std::size_t n = ws.wall_count();
  std::vector<WallId> parent(n);
  std::iota(parent.begin(), parent.end(), WallId{0});
  auto find = [&](WallId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (WallId a = 0; a < n; ++a) {
    for (WallId b = a + 1; b < n; ++b) {
      if (!crosses(ws, a, b)) {
        const WallId ra = find(a);
        const WallId rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  std::vector<std::vector<WallId>> classes;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (WallId w = 0; w < n; ++w) {
    const WallId r = find(w);
    if (slot[r] == SIZE_MAX) {
      slot[r] = classes.size();
      classes.emplace_back();
    }
    classes[slot[r]].push_back(w);
  }
  return classes;
}

void validate_partition(const Wallspace& ws, const std::vector<std::vector<WallId>>& partition) {
  std::vector<std::size_t> owner(ws.wall_count(), SIZE_MAX);
  for (std::size_t c = 0; c < partition.size(); ++c) {
    if (partition[c].empty()) throw Error(ErrorCode::InvalidPartition, "class " + std::to_string(c) + " is empty");
    for (WallId w : partition[c]) {
      ws.wall(w);
      if (owner[w] != SIZE_MAX) {
        throw Error(ErrorCode::InvalidPartition, "wall " + std::to_string(w) + " appears in two classes");
      }
      owner[w] = c;
    }
  }
  for (WallId w = 0; w < ws.wall_count(); ++w) {
    if (owner[w] == SIZE_MAX) {
      throw Error(ErrorCode::InvalidPartition, "wall " + std::to_string(w) + " is in no class");
    }
  }
  for (WallId a = 0; a < ws.wall_count(); ++a) {
    for (WallId b = a + 1; b < ws.wall_count(); ++b) {
      if (owner[a] != owner[b] && !crosses(ws, a, b)) {
        throw Error(ErrorCode::PartitionNotPairwiseCrossing,
                    "walls " + std::to_string(a) + " and " + std::to_string(b) +
                        " lie in different classes but do not cross");
      }
    }
  }
}

Wallspace sub_wallspace(const Wallspace& ws, std::span<const WallId> walls) {
  std::vector<std::pair<Bitset, Bitset>> halves;
  std::vector<bool> used(ws.wall_count(), false);
  for (WallId w : walls) {
    const Wall& wall = ws.wall(w);
    if (used[w]) throw Error(ErrorCode::NotSubset, "wall " + std::to_string(w) + " repeated");
    used[w] = true;
    halves.emplace_back(wall.left, wall.right);
  }
  return Wallspace::from_halfspaces(ws.points(), std::move(halves));
}

}  // namespace cubix
