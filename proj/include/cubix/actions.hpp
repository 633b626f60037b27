#pragma once

// Actions on complexes by (partial) automorphisms. A window is a finite piece
// of a possibly infinite complex; generators need only be defined on its
// interior, and everything computed from them is certified within the window.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubix/bitset.hpp"
#include "cubix/complex.hpp"
#include "cubix/dual.hpp"
#include "cubix/wallspace.hpp"

namespace cubix {

struct Automorphism {
  std::string name;
  std::vector<VertexId> map;  // kNoVertex where undefined

  static Automorphism identity(std::size_t n, std::string name = "id");

  bool defined(VertexId v) const noexcept { return v < map.size() && map[v] != kNoVertex; }
  std::optional<VertexId> apply(VertexId v) const noexcept;
  bool total() const noexcept;
  std::size_t domain_size() const noexcept;
};

// (a after b), defined where both steps are.
Automorphism compose(const Automorphism& a, const Automorphism& b);
// Throws NotInjective.
Automorphism inverse(const Automorphism& a);
// h g h^-1. Throws NotInjective.
Automorphism conjugate(const Automorphism& h, const Automorphism& g);

struct ActionWindow {
  CubicalComplex complex;
  Bitset interior;
  std::vector<Automorphism> generators;

  std::size_t generator_index(const std::string& name) const;  // throws InvalidAction
};

struct GeneratorCoverage {
  std::string generator;
  std::size_t edges_checked = 0;
  std::size_t edges_total = 0;
  double fraction() const noexcept {
    return edges_total == 0 ? 1.0 : static_cast<double>(edges_checked) / static_cast<double>(edges_total);
  }
};

struct ActionReport {
  std::vector<GeneratorCoverage> coverage;
  bool all_total = false;
};

// Checks map shape, injectivity, images of the interior, interior
// connectivity and adjacency wherever both endpoints are mapped. Throws
// InvalidAction, NotInjective, NotConnected, AdjacencyViolation.
ActionReport validate_action(const ActionWindow& window);

struct WallImage {
  HyperplaneId target = 0;
  bool side_preserved = true;
};

// Per generator, per hyperplane of the window: the image hyperplane when
// every mapped dual edge lands in a single hyperplane with a consistent side
// pairing, nullopt otherwise (including when no dual edge is mapped).
struct WallAction {
  std::vector<std::vector<std::optional<WallImage>>> images;
};

WallAction induced_wall_action(const ActionWindow& window, const HyperplaneSystem& system);

// Side vector of g.c, where (g.c)[g(h)] is g applied to c[h]. Throws
// NotTotalAction when g is not defined on some hyperplane.
Orientation act_on_zero_cube(const WallAction& action, std::size_t generator, const Orientation& c);

// Letters are 1-based generator indices, negative for inverses.
using Word = std::vector<int>;
std::string format_word(const ActionWindow& window, const Word& word);

struct Inversion {
  Word word;
  HyperplaneId hyperplane = 0;
};

inline constexpr std::size_t kDefaultWordLength = 6;
inline constexpr std::size_t kGroupGuard = 100000;

// Every distinct (partial) map given by a word of length <= max_length,
// keeping the shortest word, or the whole generated group when all
// generators are total (GuardExceeded past `guard` elements). The identity
// comes first.
struct WordMap {
  Word word;
  Automorphism map;
};
std::vector<WordMap> word_maps(const ActionWindow& window, std::size_t max_length = kDefaultWordLength,
                               std::size_t guard = kGroupGuard);

// Maps stabilizing a hyperplane (every mapped dual edge goes to a dual edge
// of the same hyperplane, at least one mapped) while exchanging its sides.
std::vector<Inversion> detect_inversions(const ActionWindow& window, std::size_t max_length = kDefaultWordLength);

// Generators transported to the cubical subdivision: a cube goes to the cube
// spanned by the images of its vertices. The new interior is the set of cubes
// with every vertex in the old interior.
ActionWindow subdivide_action(const ActionWindow& window, std::size_t dim_guard = kDefaultDimGuard);

// Vertices fixed by every generator, ascending.
std::vector<VertexId> fixed_zero_cubes(const ActionWindow& window);

struct OrbitResult {
  std::vector<VertexId> vertices;  // ascending
  bool escaped = false;
};

// Closure of seed under words of length <= bound. Throws UnknownVertex.
OrbitResult orbit(const ActionWindow& window, VertexId seed, std::size_t bound);

enum class RemovalKind { Explicit, Collateral };

struct RemovalStep {
  RemovalKind kind = RemovalKind::Explicit;
  std::vector<HyperplaneId> orbit;   // hyperplane ids of the input complex
  std::string fixed_sides;           // explicit steps: the chosen fixed 0-cube over the orbit
  std::size_t remaining = 0;         // vertices left after the step
};

struct Minimization {
  Bitset vertices;
  std::vector<std::vector<HyperplaneId>> orbits;  // hyperplane orbits of the input
  std::vector<RemovalStep> log;
};

// Repeatedly cuts down to the intersection of halfspaces picked by a fixed
// 0-cube of an orbit's restriction quotient. Throws NotTotalAction,
// HasInversions.
Minimization minimize_invariant_subcomplex(const ActionWindow& window);

struct ProductFactor {
  std::vector<WallId> walls;
  Wallspace wallspace;
  DualComplex dual;
};

struct ProductCertificate {
  bool bijective = false;
  bool adjacency_preserved = false;
  bool l1_additive = false;
  std::string witness;  // first failure, empty when all pass
  bool passed() const noexcept { return bijective && adjacency_preserved && l1_additive; }
};

struct ProductDecomposition {
  DualComplex dual;
  std::vector<ProductFactor> factors;
  std::vector<std::vector<VertexId>> coordinates;  // per dual vertex, one factor vertex per factor
  ProductCertificate certificate;
};

// Defaults to crossing_classes. Throws InvalidPartition,
// PartitionNotPairwiseCrossing.
ProductDecomposition product_decomposition(const Wallspace& ws,
                                           const std::optional<std::vector<std::vector<WallId>>>& partition = {});

struct CrossingBound {
  std::size_t size = 0;
  std::vector<WallId> clique;
};

inline constexpr std::size_t kCliqueGuard = 24;

// Largest pairwise-crossing family inside `walls`. Throws NotSubset,
// LimitExceeded.
CrossingBound bounded_crossing_certificate(const Wallspace& ws, const std::vector<WallId>& walls);

struct QuasilineReport {
  VertexId center = 0;
  std::size_t radius = 0;
  std::vector<std::size_t> ball_sizes;  // |B(r)| for r = 0..radius
  std::size_t orbits_half = 0;          // maximal-cube shift orbits inside B(radius/2)
  std::size_t orbits_full = 0;          // and inside B(radius)
  std::size_t growth_constant = 0;
  bool bounded_orbits = false;
  bool linear_growth = false;
  bool passed() const noexcept { return bounded_orbits && linear_growth; }
};

// Balls are centred at the least vertex of minimum eccentricity; radius is
// clipped to that eccentricity (0 means use it). Throws FixedVertexFound,
// InvalidAction.
QuasilineReport quasiline_certificate(const CubicalComplex& factor, const Automorphism& shift, std::size_t radius = 0,
                                      std::size_t dim_guard = kDefaultDimGuard);

}  // namespace cubix
