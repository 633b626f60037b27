#include "cubix/dual.hpp"

#include <algorithm>
#include <deque>

#include "cubix/error.hpp"

namespace cubix {

Orientation Orientation::parse(std::string_view sides) {
  Orientation o(sides.size());
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (sides[i] == 'R') {
      o.set(static_cast<WallId>(i), Side::Right);
    } else if (sides[i] != 'L') {
      throw Error(ErrorCode::InvalidOrientation, "side string '" + std::string(sides) + "' has a non L/R character");
    }
  }
  return o;
}

std::string Orientation::to_string() const {
  std::string out(bits_.size(), 'L');
  bits_.for_each([&](std::uint32_t w) { out[w] = 'R'; });
  return out;
}

const Bitset& chosen_halfspace(const Wallspace& ws, const Orientation& o, WallId w) {
  return ws.walls()[w].side(o.side(w));
}

std::optional<std::pair<WallId, WallId>> intersection_violation(const Wallspace& ws, const Orientation& o) {
  if (o.size() != ws.wall_count()) {
    throw Error(ErrorCode::InvalidOrientation, "orientation has " + std::to_string(o.size()) + " sides for " +
                                                   std::to_string(ws.wall_count()) + " walls");
  }
  for (WallId a = 0; a < ws.wall_count(); ++a) {
    const Bitset& ha = chosen_halfspace(ws, o, a);
    for (WallId b = a + 1; b < ws.wall_count(); ++b) {
      if (!ha.intersects(chosen_halfspace(ws, o, b))) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

bool is_zero_cube(const Wallspace& ws, const Orientation& o) { return !intersection_violation(ws, o); }

Orientation canonical_zero_cube(const Wallspace& ws, PointId x) {
  ws.check_point(x);
  Orientation o(ws.wall_count());
  for (const auto& w : ws.walls()) {
    if (w.right.test(x)) o.set(w.id, Side::Right);
  }
  return o;
}

std::vector<Orientation> enumerate_zero_cubes_bruteforce(const Wallspace& ws, std::uint64_t limit) {
  const std::size_t n = ws.wall_count();
  if (n >= 63 || (std::uint64_t{1} << n) > limit) {
    throw Error(ErrorCode::LimitExceeded,
                "2^" + std::to_string(n) + " side assignments exceed the limit " + std::to_string(limit));
  }
  // Deliberately point-by-point (no bitset kernels): this is the reference
  // the flip-search is checked against.
  auto meet = [&](WallId a, Side sa, WallId b, Side sb) {
    for (PointId p = 0; p < ws.point_count(); ++p) {
      if (ws.side_of(a, p) == sa && ws.side_of(b, p) == sb) return true;
    }
    return false;
  };
  std::vector<Orientation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Orientation o(n);
    for (WallId w = 0; w < n; ++w) {
      if ((mask >> w) & 1U) o.set(w, Side::Right);
    }
    bool ok = true;
    for (WallId a = 0; a < n && ok; ++a) {
      for (WallId b = a + 1; b < n && ok; ++b) ok = meet(a, o.side(a), b, o.side(b));
    }
    if (ok) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexId> DualComplex::vertex_of(const Orientation& o) const {
  const auto it = index.find(o);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

DualComplex dual_complex(const Wallspace& ws) {
  const std::size_t n = ws.wall_count();
  std::unordered_map<Orientation, VertexId, OrientationHash> seen;
  std::vector<Orientation> found;
  std::deque<VertexId> frontier;

  Orientation start = canonical_zero_cube(ws, 0);
  seen.emplace(start, 0);
  found.push_back(std::move(start));
  frontier.push_back(0);
  while (!frontier.empty()) {
    const VertexId current = frontier.front();
    frontier.pop_front();
    for (WallId w = 0; w < n; ++w) {
      // Only pairs involving w change under the flip.
      const Bitset& flipped_side = ws.walls()[w].side(opposite(found[current].side(w)));
      bool ok = true;
      for (WallId v = 0; v < n && ok; ++v) {
        if (v != w) ok = flipped_side.intersects(chosen_halfspace(ws, found[current], v));
      }
      if (!ok) continue;
      Orientation next = found[current];
      next.flip(w);
      if (seen.count(next)) continue;
      const auto id = static_cast<VertexId>(found.size());
      seen.emplace(next, id);
      found.push_back(std::move(next));
      frontier.push_back(id);
    }
  }

  std::sort(found.begin(), found.end());
  DualComplex dual{ws, std::move(found), {}, {}, {}};
  for (VertexId i = 0; i < dual.zero_cubes.size(); ++i) dual.index.emplace(dual.zero_cubes[i], i);

  std::vector<std::string> names;
  names.reserve(dual.zero_cubes.size());
  for (const auto& o : dual.zero_cubes) names.push_back("c" + o.to_string());
  std::vector<Edge> edges;
  for (VertexId i = 0; i < dual.zero_cubes.size(); ++i) {
    for (WallId w = 0; w < n; ++w) {
      Orientation other = dual.zero_cubes[i];
      other.flip(w);
      if (const auto j = dual.vertex_of(other); j && *j > i) edges.push_back(Edge{i, *j});
    }
  }
  dual.complex = certify(CubicalComplex::from_index_edges(std::move(names), std::move(edges)));
  if (dual.complex.median_state() != MedianState::Verified) {
    throw Error(ErrorCode::NotMedian, "dual complex failed median certification");
  }

  const HyperplaneSystem sys = hyperplanes(dual.complex);
  if (sys.planes.size() != n) {
    throw Error(ErrorCode::SideCountNot2, "dual has " + std::to_string(sys.planes.size()) + " hyperplanes for " +
                                              std::to_string(n) + " walls");
  }
  dual.wall_to_hyperplane.assign(n, 0);
  std::vector<char> assigned(n, 0);
  for (const auto& h : sys.planes) {
    std::optional<WallId> wall;
    for (std::size_t e : h.dual_edges) {
      const Edge& edge = dual.complex.edges()[e];
      const Bitset& a = dual.zero_cubes[edge.u].bits();
      const Bitset& b = dual.zero_cubes[edge.v].bits();
      const auto w = static_cast<WallId>((a ^ b).find_first());
      if (wall && *wall != w) {
        throw Error(ErrorCode::SideCountNot2, "hyperplane " + std::to_string(h.id) + " spans two walls");
      }
      wall = w;
    }
    if (assigned[*wall]) throw Error(ErrorCode::SideCountNot2, "wall " + std::to_string(*wall) + " has two hyperplanes");
    assigned[*wall] = 1;
    dual.wall_to_hyperplane[*wall] = h.id;
  }
  return dual;
}

Wallspace hyperplane_wallspace(const CubicalComplex& c) {
  const HyperplaneSystem sys = hyperplanes(c);
  std::vector<std::pair<Bitset, Bitset>> halves;
  halves.reserve(sys.planes.size());
  for (const auto& h : sys.planes) halves.emplace_back(h.left, h.right);
  return Wallspace::from_halfspaces(c.names(), std::move(halves));
}

std::vector<WallId> normalize_wall_subset(const Wallspace& ws, std::span<const WallId> subset) {
  std::vector<WallId> v(subset.begin(), subset.end());
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw Error(ErrorCode::NotSubset, "wall subset lists a wall twice");
  }
  if (!v.empty() && v.back() >= ws.wall_count()) {
    throw Error(ErrorCode::NotSubset, "wall " + std::to_string(v.back()) + " is not a wall of the wallspace");
  }
  return v;
}

Orientation restriction_quotient(const Wallspace& ws, std::span<const WallId> subset, const Orientation& c) {
  const auto v = normalize_wall_subset(ws, subset);
  if (c.size() != ws.wall_count() || !is_zero_cube(ws, c)) {
    throw Error(ErrorCode::InvalidOrientation, "'" + c.to_string() + "' is not a 0-cube");
  }
  Orientation out(v.size());
  for (WallId i = 0; i < v.size(); ++i) out.set(i, c.side(v[i]));
  return out;
}

Orientation lift_zero_cube(const Wallspace& ws, std::span<const WallId> subset, const Orientation& z,
                           PointId basepoint) {
  const auto v = normalize_wall_subset(ws, subset);
  ws.check_point(basepoint);
  const Wallspace restricted = sub_wallspace(ws, v);
  if (z.size() != v.size() || !is_zero_cube(restricted, z)) {
    throw Error(ErrorCode::InvalidOrientation, "'" + z.to_string() + "' is not a 0-cube over the subset");
  }
  std::vector<char> in_subset(ws.wall_count(), 0);
  for (WallId w : v) in_subset[w] = 1;

  Orientation x(ws.wall_count());
  for (WallId i = 0; i < v.size(); ++i) x.set(v[i], z.side(i));
  for (const auto& wall : ws.walls()) {
    if (in_subset[wall.id]) continue;
    auto contains_some = [&](const Bitset& halfspace) {
      for (WallId i = 0; i < v.size(); ++i) {
        if (chosen_halfspace(restricted, z, i).is_subset_of(halfspace)) return true;
      }
      return false;
    };
    if (contains_some(wall.right)) {
      x.set(wall.id, Side::Right);
    } else if (contains_some(wall.left)) {
      x.set(wall.id, Side::Left);
    } else {
      x.set(wall.id, wall.right.test(basepoint) ? Side::Right : Side::Left);
    }
  }
  if (const auto bad = intersection_violation(ws, x)) {
    throw Error(ErrorCode::InvalidOrientation, "lift violates the intersection condition on walls " +
                                                   std::to_string(bad->first) + ", " + std::to_string(bad->second));
  }
  return x;
}

RestrictedEmbedding embed_restricted_dual(const CubicalComplex& complex, const Bitset& subset) {
  require_median(complex);
  induced_subcomplex(complex, subset);  // NotConnected
  Wallspace walls = hyperplane_wallspace(complex);
  Restriction restriction = restrict(walls, subset);
  DualComplex sub = dual_complex(restriction.wallspace);

  std::unordered_map<Orientation, VertexId, OrientationHash> canonical;
  for (VertexId v = 0; v < complex.size(); ++v) canonical.emplace(canonical_zero_cube(walls, v), v);

  const auto anchor = static_cast<PointId>(subset.find_first());
  std::vector<Orientation> images;
  std::vector<VertexId> into;
  images.reserve(sub.zero_cubes.size());
  for (const auto& c : sub.zero_cubes) {
    Orientation image(walls.wall_count());
    for (const auto& wall : walls.walls()) {
      const auto& entry = restriction.wall_map[wall.id];
      if (entry) {
        const Side s = c.side(entry->id);
        image.set(wall.id, entry->flipped ? opposite(s) : s);
      } else {
        image.set(wall.id, walls.side_of(wall.id, anchor));
      }
    }
    const auto it = canonical.find(image);
    if (it == canonical.end()) {
      throw Error(ErrorCode::InvalidOrientation, "image '" + image.to_string() + "' is not a vertex of the complex");
    }
    into.push_back(it->second);
    images.push_back(std::move(image));
  }
  EmbeddingVerdict verdict = isometric_embedding_check(sub.complex, complex, into);
  return RestrictedEmbedding{std::move(walls), std::move(restriction), std::move(sub),
                             std::move(images), std::move(into),       std::move(verdict)};
}

}  // namespace cubix
