#pragma once

// Cube complexes stored by their 1-skeleton. A finite connected graph is the
// 1-skeleton of a CAT(0) cube complex exactly when it is a median graph; the
// higher cubes are recovered from the graph on demand.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubix/bitset.hpp"
#include "cubix/types.hpp"

namespace cubix {

struct Edge {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class MedianState { Unchecked, Verified, Refuted };

struct MedianWitness {
  VertexId x = 0, y = 0, z = 0;
  std::size_t median_count = 0;  // 0 or >= 2
};

class CubicalComplex {
 public:
  // Empty placeholder; real complexes come from the factories.
  CubicalComplex() = default;

  // Throws Disconnected, LoopEdge, DuplicateEdge, DuplicateVertex,
  // UnknownEndpoint.
  static CubicalComplex from_edges(std::vector<std::string> vertices,
                                   const std::vector<std::pair<std::string, std::string>>& edges);
  static CubicalComplex from_index_edges(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(VertexId v) const;
  VertexId index_of(const std::string& name) const;  // throws UnknownVertex
  std::optional<VertexId> find(const std::string& name) const;
  void check_vertex(VertexId v) const;                // throws UnknownVertex

  std::span<const VertexId> neighbors(VertexId v) const noexcept { return adjacency_[v]; }
  bool adjacent(VertexId a, VertexId b) const noexcept;

  // Sorted by (u, v); edge ids index into this list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::optional<std::size_t> edge_index(VertexId a, VertexId b) const noexcept;

  MedianState median_state() const noexcept { return median_state_; }
  const std::optional<MedianWitness>& median_witness() const noexcept { return witness_; }

 private:
  friend CubicalComplex certify(CubicalComplex complex);

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  MedianState median_state_ = MedianState::Unchecked;
  std::optional<MedianWitness> witness_;
};

struct MedianVerdict {
  bool median = false;
  std::optional<MedianWitness> witness;
};

// Exhaustive triple check: every triple must have exactly one vertex lying on
// geodesics between each pair. Intervals are packed bitsets, so the check
// costs O(V^3 * V/64) word operations and O(V^3/128) bytes.
MedianVerdict is_median(const CubicalComplex& complex);

// Runs is_median and records the verdict in the returned value.
CubicalComplex certify(CubicalComplex complex);

// Throws NotMedian unless the complex is (or checks out as) median.
void require_median(const CubicalComplex& complex);

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const CubicalComplex& complex);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(VertexId a, VertexId b) const noexcept { return d_[a * n_ + b]; }
  std::span<const std::uint32_t> row(VertexId a) const noexcept { return {d_.data() + a * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

std::vector<std::uint32_t> bfs_distances(const CubicalComplex& complex, VertexId source);

// Shortest-path length. Throws UnknownVertex.
std::size_t dist_c(const CubicalComplex& complex, VertexId x, VertexId y);

// Vertices on some geodesic from x to y.
Bitset interval(const DistanceMatrix& d, VertexId x, VertexId y);

struct Hyperplane {
  HyperplaneId id = 0;
  std::vector<std::size_t> dual_edges;  // edge ids, ascending
  Bitset left;                          // side containing the least vertex id
  Bitset right;
  Bitset carrier;                       // endpoints of dual edges

  const Bitset& side(Side s) const noexcept { return s == Side::Left ? left : right; }
  Side side_of(VertexId v) const noexcept { return left.test(v) ? Side::Left : Side::Right; }
};

struct HyperplaneSystem {
  std::vector<Hyperplane> planes;  // ordered by least dual edge id
  std::vector<HyperplaneId> plane_of_edge;

  bool separates(HyperplaneId h, VertexId x, VertexId y) const noexcept {
    return planes[h].left.test(x) != planes[h].left.test(y);
  }
  std::vector<HyperplaneId> separating(VertexId x, VertexId y) const;
};

// Edge classes of the square-opposite relation, with sides computed as the
// components left after deleting each class. Throws NotMedian, SideCountNot2.
HyperplaneSystem hyperplanes(const CubicalComplex& complex);

struct Subcomplex {
  CubicalComplex complex;
  std::vector<VertexId> to_parent;
};

// Induced subgraph. Throws NotConnected when empty or disconnected.
Subcomplex induced_subcomplex(const CubicalComplex& complex, const Bitset& vertices);

// L(h) and R(h). Throws UnknownHyperplane.
std::pair<Subcomplex, Subcomplex> halfspace_subcomplexes(const CubicalComplex& complex,
                                                         const HyperplaneSystem& system,
                                                         HyperplaneId h);

struct ConvexityVerdict {
  bool convex = false;
  std::optional<std::array<VertexId, 3>> witness;  // x, y in Y; z on a geodesic, z not in Y
};

// Interval closure. Throws NotConnected when Y does not induce a connected
// subgraph.
ConvexityVerdict is_convex(const CubicalComplex& complex, const Bitset& subset);

struct Cube {
  std::size_t dim = 0;
  std::vector<VertexId> vertices;  // sorted, size 2^dim
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

inline constexpr std::size_t kDefaultDimGuard = 8;

// All cubes of dimension <= max_dim, ordered by (dim, vertices). Throws
// NotMedian, or DimLimitExceeded when max_dim exceeds the guard.
std::vector<Cube> cubes(const CubicalComplex& complex, std::size_t max_dim,
                        std::size_t dim_guard = kDefaultDimGuard);

// Every cube. Throws DimLimitExceeded if a cube above the guard exists.
std::vector<Cube> all_cubes(const CubicalComplex& complex, std::size_t dim_guard = kDefaultDimGuard);

// Cubes not contained in a larger cube.
std::vector<Cube> maximal_cubes(const CubicalComplex& complex, std::size_t dim_guard = kDefaultDimGuard);

struct Subdivision {
  CubicalComplex complex;
  std::vector<Cube> origin;  // per new vertex, the cube it stands for
  std::map<std::vector<VertexId>, VertexId> by_cube;

  std::optional<VertexId> vertex_of(const std::vector<VertexId>& cube_vertices) const;
};

// One vertex per cube; a cube is joined to each codimension-1 face.
Subdivision cubical_subdivision(const CubicalComplex& complex, std::size_t dim_guard = kDefaultDimGuard);

struct EmbeddingVerdict {
  bool isometric = false;
  std::optional<std::pair<VertexId, VertexId>> witness;  // vertices of `sub`
};

// Throws NotInjective or NotSimplicial (an edge not sent to an edge).
EmbeddingVerdict isometric_embedding_check(const CubicalComplex& sub, const CubicalComplex& ambient,
                                           std::span<const VertexId> vertex_map);

// Bijective on vertices and on edges.
bool is_isomorphism(const CubicalComplex& a, const CubicalComplex& b, std::span<const VertexId> vertex_map);

}  // namespace cubix
