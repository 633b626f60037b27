#include "cubix/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "cubix/error.hpp"

namespace cubix {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

bool connected(std::size_t n, const std::vector<std::vector<VertexId>>& adjacency) {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

// k-cube with its corners indexed by direction bitmask; corner[0] is the
// least vertex of the cube.
struct Frame {
  std::vector<VertexId> corner;
  std::vector<VertexId> directions;  // neighbours of corner[0], ascending
};

std::optional<VertexId> other_common_neighbor(const CubicalComplex& c, VertexId a, VertexId b,
                                              VertexId excluded) {
  for (VertexId w : c.neighbors(a)) {
    if (w != excluded && c.adjacent(w, b)) return w;
  }
  return std::nullopt;
}

std::optional<Frame> extend(const CubicalComplex& c, const Frame& f, VertexId direction) {
  const std::size_t k = f.directions.size();
  const std::size_t corners = std::size_t{1} << k;
  std::vector<VertexId> lifted(corners, kNoVertex);
  lifted[0] = direction;
  // Masks in increasing popcount order guarantee every lower corner is known.
  std::vector<std::size_t> order(corners);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [](std::size_t a, std::size_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  for (std::size_t mask : order) {
    if (mask == 0) continue;
    const std::size_t low = mask & (~mask + 1);
    const auto w = other_common_neighbor(c, f.corner[mask], lifted[mask ^ low], f.corner[mask ^ low]);
    if (!w) return std::nullopt;
    for (std::size_t bit = 1; bit <= mask; bit <<= 1) {
      if ((mask & bit) && !c.adjacent(*w, lifted[mask ^ bit])) return std::nullopt;
    }
    lifted[mask] = *w;
  }
  Frame out;
  out.corner = f.corner;
  out.corner.insert(out.corner.end(), lifted.begin(), lifted.end());
  std::vector<VertexId> sorted = out.corner;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  if (sorted.front() != f.corner[0]) return std::nullopt;  // counted from its least corner
  out.directions = f.directions;
  out.directions.push_back(direction);
  return out;
}

Cube to_cube(const Frame& f) {
  Cube q;
  q.dim = f.directions.size();
  q.vertices = f.corner;
  std::sort(q.vertices.begin(), q.vertices.end());
  return q;
}

// Frames grouped by dimension, up to max_dim. If `probe_beyond`, also reports
// whether a cube of dimension max_dim + 1 exists.
std::vector<std::vector<Frame>> enumerate_frames(const CubicalComplex& c, std::size_t max_dim,
                                                 bool probe_beyond, bool* beyond_found) {
  require_median(c);
  std::vector<std::vector<Frame>> levels(1);
  for (VertexId v = 0; v < c.size(); ++v) levels[0].push_back(Frame{{v}, {}});
  const std::size_t limit = probe_beyond ? max_dim + 1 : max_dim;
  for (std::size_t k = 1; k <= limit; ++k) {
    std::vector<Frame> next;
    for (const Frame& f : levels[k - 1]) {
      const VertexId base = f.corner[0];
      for (VertexId a : c.neighbors(base)) {
        if (a < base) continue;
        if (!f.directions.empty() && a <= f.directions.back()) continue;
        if (auto g = extend(c, f, a)) next.push_back(std::move(*g));
      }
    }
    if (k > max_dim) {
      if (beyond_found) *beyond_found = !next.empty();
      break;
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  for (auto& level : levels) {
    std::sort(level.begin(), level.end(), [](const Frame& a, const Frame& b) {
      return to_cube(a).vertices < to_cube(b).vertices;
    });
  }
  return levels;
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

CubicalComplex CubicalComplex::from_edges(std::vector<std::string> vertices,
                                          const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, VertexId> index;
  for (VertexId i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], i).second) {
      throw Error(ErrorCode::DuplicateVertex, "vertex '" + vertices[i] + "' listed twice");
    }
  }
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw Error(ErrorCode::UnknownEndpoint, "edge " + a + "-" + b + " names an unknown vertex");
    }
    ids.push_back(Edge{ia->second, ib->second});
  }
  return from_index_edges(std::move(vertices), std::move(ids));
}

CubicalComplex CubicalComplex::from_index_edges(std::vector<std::string> vertices, std::vector<Edge> edges) {
  CubicalComplex c;
  const std::size_t n = vertices.size();
  for (VertexId i = 0; i < n; ++i) {
    if (!c.index_.emplace(vertices[i], i).second) {
      throw Error(ErrorCode::DuplicateVertex, "vertex '" + vertices[i] + "' listed twice");
    }
  }
  c.names_ = std::move(vertices);
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::UnknownEndpoint, "edge endpoint out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::LoopEdge, "loop at '" + c.names_[e.u] + "'");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorCode::DuplicateEdge, "edge " + c.names_[dup->u] + "-" + c.names_[dup->v] + " listed twice");
  }
  c.edges_ = std::move(edges);
  c.adjacency_.assign(n, {});
  for (const auto& e : c.edges_) {
    c.adjacency_[e.u].push_back(e.v);
    c.adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : c.adjacency_) std::sort(row.begin(), row.end());
  if (!connected(n, c.adjacency_)) {
    throw Error(ErrorCode::Disconnected, n == 0 ? "complex has no vertices" : "1-skeleton is disconnected");
  }
  return c;
}

const std::string& CubicalComplex::name(VertexId v) const {
  check_vertex(v);
  return names_[v];
}

VertexId CubicalComplex::index_of(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "no vertex named '" + name + "'");
  return it->second;
}

std::optional<VertexId> CubicalComplex::find(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void CubicalComplex::check_vertex(VertexId v) const {
  if (v >= names_.size()) throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(v));
}

bool CubicalComplex::adjacent(VertexId a, VertexId b) const noexcept {
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::optional<std::size_t> CubicalComplex::edge_index(VertexId a, VertexId b) const noexcept {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

// ---------------------------------------------------------------------------
// metric

std::vector<std::uint32_t> bfs_distances(const CubicalComplex& c, VertexId source) {
  std::vector<std::uint32_t> dist(c.size(), kUnreached);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : c.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const CubicalComplex& c) : n_(c.size()), d_(c.size() * c.size()) {
  for (VertexId v = 0; v < n_; ++v) {
    const auto row = bfs_distances(c, v);
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(v * n_));
  }
}

std::size_t dist_c(const CubicalComplex& c, VertexId x, VertexId y) {
  c.check_vertex(x);
  c.check_vertex(y);
  return bfs_distances(c, x)[y];
}

Bitset interval(const DistanceMatrix& d, VertexId x, VertexId y) {
  Bitset out(d.size());
  const auto rx = d.row(x);
  const auto ry = d.row(y);
  const std::uint32_t target = rx[y];
  for (VertexId m = 0; m < d.size(); ++m) {
    if (rx[m] + ry[m] == target) out.set(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// median certification

MedianVerdict is_median(const CubicalComplex& c) {
  const std::size_t n = c.size();
  if (n < 3) return {true, std::nullopt};
  const DistanceMatrix d(c);
  const std::size_t words = (n + 63) / 64;
  // Interval I(x, y) for x < y, packed row-major over the upper triangle.
  auto slot = [n](std::size_t x, std::size_t y) { return x * n - x * (x + 1) / 2 + (y - x - 1); };
  std::vector<kernels::Word> intervals(n * (n - 1) / 2 * words, 0);
  for (VertexId x = 0; x < n; ++x) {
    const auto rx = d.row(x);
    for (VertexId y = x + 1; y < n; ++y) {
      const auto ry = d.row(y);
      kernels::Word* out = intervals.data() + slot(x, y) * words;
      const std::uint32_t target = rx[y];
      for (VertexId m = 0; m < n; ++m) {
        if (rx[m] + ry[m] == target) out[m / 64] |= kernels::Word{1} << (m % 64);
      }
    }
  }
  const auto& k = kernels::active();
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      const kernels::Word* ixy = intervals.data() + slot(x, y) * words;
      for (VertexId z = y + 1; z < n; ++z) {
        const kernels::Word* ixz = intervals.data() + slot(x, z) * words;
        const kernels::Word* iyz = intervals.data() + slot(y, z) * words;
        const std::size_t medians = k.count_and3(ixy, ixz, iyz, words);
        if (medians != 1) return {false, MedianWitness{x, y, z, medians}};
      }
    }
  }
  return {true, std::nullopt};
}

CubicalComplex certify(CubicalComplex c) {
  if (c.median_state_ != MedianState::Unchecked) return c;
  const MedianVerdict verdict = is_median(c);
  c.median_state_ = verdict.median ? MedianState::Verified : MedianState::Refuted;
  c.witness_ = verdict.witness;
  return c;
}

void require_median(const CubicalComplex& c) {
  switch (c.median_state()) {
    case MedianState::Verified:
      return;
    case MedianState::Refuted:
      throw Error(ErrorCode::NotMedian, "complex was refuted as a median graph");
    case MedianState::Unchecked:
      if (const auto verdict = is_median(c); !verdict.median) {
        const auto& w = *verdict.witness;
        throw Error(ErrorCode::NotMedian, "triple (" + c.names()[w.x] + ", " + c.names()[w.y] + ", " +
                                              c.names()[w.z] + ") has " + std::to_string(w.median_count) +
                                              " medians");
      }
      return;
  }
}

// ---------------------------------------------------------------------------
// hyperplanes

std::vector<HyperplaneId> HyperplaneSystem::separating(VertexId x, VertexId y) const {
  std::vector<HyperplaneId> out;
  for (const auto& h : planes) {
    if (h.left.test(x) != h.left.test(y)) out.push_back(h.id);
  }
  return out;
}

HyperplaneSystem hyperplanes(const CubicalComplex& c) {
  require_median(c);
  const std::size_t m = c.edge_count();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  // Every square v-a-w-b: opposite edges share a class.
  for (VertexId v = 0; v < c.size(); ++v) {
    const auto nbrs = c.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const VertexId a = nbrs[i];
        const VertexId b = nbrs[j];
        for (VertexId w : c.neighbors(a)) {
          if (w == v || !c.adjacent(w, b)) continue;
          unite(*c.edge_index(v, a), *c.edge_index(b, w));
          unite(*c.edge_index(v, b), *c.edge_index(a, w));
        }
      }
    }
  }

  HyperplaneSystem sys;
  sys.plane_of_edge.assign(m, 0);
  std::vector<std::size_t> slot(m, SIZE_MAX);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t r = find(e);
    if (slot[r] == SIZE_MAX) {
      slot[r] = sys.planes.size();
      Hyperplane h;
      h.id = static_cast<HyperplaneId>(sys.planes.size());
      sys.planes.push_back(std::move(h));
    }
    sys.planes[slot[r]].dual_edges.push_back(e);
    sys.plane_of_edge[e] = static_cast<HyperplaneId>(slot[r]);
  }

  const std::size_t n = c.size();
  for (auto& h : sys.planes) {
    std::vector<char> cut(m, 0);
    for (std::size_t e : h.dual_edges) cut[e] = 1;
    h.left = Bitset(n);
    std::vector<VertexId> stack{0};
    h.left.set(0);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : c.neighbors(v)) {
        if (h.left.test(w) || cut[*c.edge_index(v, w)]) continue;
        h.left.set(w);
        stack.push_back(w);
      }
    }
    h.right = h.left.complement();
    if (h.right.none()) {
      throw Error(ErrorCode::SideCountNot2, "hyperplane " + std::to_string(h.id) + " does not separate");
    }
    // The right side must be connected too, and each dual edge must cross.
    Bitset reached(n);
    const VertexId start = static_cast<VertexId>(h.right.find_first());
    stack.assign(1, start);
    reached.set(start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : c.neighbors(v)) {
        if (reached.test(w) || cut[*c.edge_index(v, w)]) continue;
        reached.set(w);
        stack.push_back(w);
      }
    }
    if (reached != h.right) {
      throw Error(ErrorCode::SideCountNot2, "hyperplane " + std::to_string(h.id) + " leaves more than two sides");
    }
    h.carrier = Bitset(n);
    for (std::size_t e : h.dual_edges) {
      const Edge& edge = c.edges()[e];
      if (h.left.test(edge.u) == h.left.test(edge.v)) {
        throw Error(ErrorCode::SideCountNot2, "dual edge does not cross hyperplane " + std::to_string(h.id));
      }
      h.carrier.set(edge.u);
      h.carrier.set(edge.v);
    }
  }
  return sys;
}

// ---------------------------------------------------------------------------
// subcomplexes and convexity

Subcomplex induced_subcomplex(const CubicalComplex& c, const Bitset& vertices) {
  if (vertices.size() != c.size()) throw Error(ErrorCode::UnknownVertex, "subset sized for another complex");
  std::vector<VertexId> to_parent = vertices.indices();
  if (to_parent.empty()) throw Error(ErrorCode::NotConnected, "empty vertex subset");
  std::vector<VertexId> local(c.size(), kNoVertex);
  std::vector<std::string> names;
  names.reserve(to_parent.size());
  for (VertexId i = 0; i < to_parent.size(); ++i) {
    local[to_parent[i]] = i;
    names.push_back(c.names()[to_parent[i]]);
  }
  std::vector<Edge> edges;
  for (const auto& e : c.edges()) {
    if (local[e.u] != kNoVertex && local[e.v] != kNoVertex) edges.push_back(Edge{local[e.u], local[e.v]});
  }
  try {
    return Subcomplex{CubicalComplex::from_index_edges(std::move(names), std::move(edges)), std::move(to_parent)};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Disconnected) throw Error(ErrorCode::NotConnected, "subset induces a disconnected subgraph");
    throw;
  }
}

std::pair<Subcomplex, Subcomplex> halfspace_subcomplexes(const CubicalComplex& c, const HyperplaneSystem& sys,
                                                         HyperplaneId h) {
  if (h >= sys.planes.size()) throw Error(ErrorCode::UnknownHyperplane, "hyperplane id " + std::to_string(h));
  return {induced_subcomplex(c, sys.planes[h].left), induced_subcomplex(c, sys.planes[h].right)};
}

ConvexityVerdict is_convex(const CubicalComplex& c, const Bitset& subset) {
  induced_subcomplex(c, subset);  // connectivity precondition
  const DistanceMatrix d(c);
  const auto members = subset.indices();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Bitset between = interval(d, members[i], members[j]);
      if (!between.is_subset_of(subset)) {
        const auto z = static_cast<VertexId>((between - subset).find_first());
        return {false, std::array<VertexId, 3>{members[i], members[j], z}};
      }
    }
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// cubes and subdivision

std::vector<Cube> cubes(const CubicalComplex& c, std::size_t max_dim, std::size_t dim_guard) {
  if (max_dim > dim_guard) {
    throw Error(ErrorCode::DimLimitExceeded,
                "requested dimension " + std::to_string(max_dim) + " exceeds guard " + std::to_string(dim_guard));
  }
  std::vector<Cube> out;
  for (const auto& level : enumerate_frames(c, max_dim, false, nullptr)) {
    for (const auto& f : level) out.push_back(to_cube(f));
  }
  return out;
}

std::vector<Cube> all_cubes(const CubicalComplex& c, std::size_t dim_guard) {
  bool beyond = false;
  const auto levels = enumerate_frames(c, dim_guard, true, &beyond);
  if (beyond) {
    throw Error(ErrorCode::DimLimitExceeded, "complex has cubes above dimension " + std::to_string(dim_guard));
  }
  std::vector<Cube> out;
  for (const auto& level : levels) {
    for (const auto& f : level) out.push_back(to_cube(f));
  }
  return out;
}

std::vector<Cube> maximal_cubes(const CubicalComplex& c, std::size_t dim_guard) {
  const auto every = all_cubes(c, dim_guard);
  // A cube is maximal iff no cube one dimension up contains it.
  std::set<std::vector<VertexId>> covered;
  for (const auto& q : every) {
    if (q.dim == 0) continue;
    for (const auto& r : every) {
      if (r.dim + 1 != q.dim) continue;
      if (std::includes(q.vertices.begin(), q.vertices.end(), r.vertices.begin(), r.vertices.end())) {
        covered.insert(r.vertices);
      }
    }
  }
  std::vector<Cube> out;
  for (const auto& q : every) {
    if (!covered.count(q.vertices)) out.push_back(q);
  }
  return out;
}

std::optional<VertexId> Subdivision::vertex_of(const std::vector<VertexId>& cube_vertices) const {
  const auto it = by_cube.find(cube_vertices);
  if (it == by_cube.end()) return std::nullopt;
  return it->second;
}

Subdivision cubical_subdivision(const CubicalComplex& c, std::size_t dim_guard) {
  bool beyond = false;
  const auto levels = enumerate_frames(c, dim_guard, true, &beyond);
  if (beyond) {
    throw Error(ErrorCode::DimLimitExceeded, "complex has cubes above dimension " + std::to_string(dim_guard));
  }
  Subdivision sub;
  std::vector<std::string> names;
  for (const auto& level : levels) {
    for (const auto& f : level) {
      Cube q = to_cube(f);
      std::string name;
      for (VertexId v : q.vertices) {
        if (!name.empty()) name += '+';
        name += c.names()[v];
      }
      sub.by_cube.emplace(q.vertices, static_cast<VertexId>(names.size()));
      names.push_back(std::move(name));
      sub.origin.push_back(std::move(q));
    }
  }
  std::vector<Edge> edges;
  for (const auto& level : levels) {
    for (const auto& f : level) {
      const std::size_t k = f.directions.size();
      if (k == 0) continue;
      const VertexId self = sub.by_cube.at(to_cube(f).vertices);
      for (std::size_t dir = 0; dir < k; ++dir) {
        for (std::size_t value = 0; value < 2; ++value) {
          std::vector<VertexId> face;
          for (std::size_t mask = 0; mask < f.corner.size(); ++mask) {
            if (((mask >> dir) & 1U) == value) face.push_back(f.corner[mask]);
          }
          std::sort(face.begin(), face.end());
          edges.push_back(Edge{sub.by_cube.at(face), self});
        }
      }
    }
  }
  sub.complex = CubicalComplex::from_index_edges(std::move(names), std::move(edges));
  return sub;
}

// ---------------------------------------------------------------------------
// maps between complexes

EmbeddingVerdict isometric_embedding_check(const CubicalComplex& sub, const CubicalComplex& ambient,
                                           std::span<const VertexId> vertex_map) {
  if (vertex_map.size() != sub.size()) {
    throw Error(ErrorCode::NotInjective, "vertex map has " + std::to_string(vertex_map.size()) +
                                             " entries for " + std::to_string(sub.size()) + " vertices");
  }
  std::vector<char> hit(ambient.size(), 0);
  for (VertexId v = 0; v < sub.size(); ++v) {
    const VertexId image = vertex_map[v];
    ambient.check_vertex(image);
    if (hit[image]) throw Error(ErrorCode::NotInjective, "two vertices map to '" + ambient.names()[image] + "'");
    hit[image] = 1;
  }
  for (const auto& e : sub.edges()) {
    if (!ambient.adjacent(vertex_map[e.u], vertex_map[e.v])) {
      throw Error(ErrorCode::NotSimplicial,
                  "edge " + sub.names()[e.u] + "-" + sub.names()[e.v] + " is not sent to an edge");
    }
  }
  const DistanceMatrix ds(sub);
  const DistanceMatrix da(ambient);
  for (VertexId x = 0; x < sub.size(); ++x) {
    for (VertexId y = x + 1; y < sub.size(); ++y) {
      if (ds(x, y) != da(vertex_map[x], vertex_map[y])) return {false, std::pair{x, y}};
    }
  }
  return {true, std::nullopt};
}

bool is_isomorphism(const CubicalComplex& a, const CubicalComplex& b, std::span<const VertexId> vertex_map) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count() || vertex_map.size() != a.size()) return false;
  std::vector<char> hit(b.size(), 0);
  for (VertexId image : vertex_map) {
    if (image >= b.size() || hit[image]) return false;
    hit[image] = 1;
  }
  return std::all_of(a.edges().begin(), a.edges().end(),
                     [&](const Edge& e) { return b.adjacent(vertex_map[e.u], vertex_map[e.v]); });
}

}  // namespace cubix
