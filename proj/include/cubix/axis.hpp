#pragma once

// Fixed 0-cubes versus combinatorial geodesic axes for a single generator of
// an action window.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cubix/actions.hpp"

namespace cubix {

// dist(x, g.x). Throws EscapesWindow when g.x is undefined.
std::size_t displacement(const ActionWindow& window, const Automorphism& g, VertexId x);

struct MinDisplacement {
  VertexId vertex = 0;        // least id among interior minimizers
  std::size_t tau = 0;
  bool stable = false;        // dist(x, g^2 x) = 2 tau at `vertex`
  std::vector<VertexId> minimizers;         // ascending
  std::vector<VertexId> stable_minimizers;  // ascending
};

// Over interior vertices with g.x defined. Throws EscapesWindow when there
// are none.
MinDisplacement min_displacement_vertex(const ActionWindow& window, const Automorphism& g);

// min over all vertices of dist(x, g.x) for a total automorphism.
std::size_t translation_length(const CubicalComplex& complex, const Automorphism& g);

// Hyperplanes separating x and y ordered by inclusion of their x-sides.
// Throws NotTotallyOrdered when two of them are not nested.
std::vector<HyperplaneId> order_separating_hyperplanes(const CubicalComplex& complex, const HyperplaneSystem& system,
                                                       VertexId x, VertexId y);

struct FixedZeroCube {
  VertexId vertex = 0;
};

enum class PeriodRule { Nesting, LeastGeodesic };

struct AxisChecks {
  bool consecutive_adjacent = false;
  bool geodesic = false;
  bool single_crossing = false;
  bool g_invariant = false;
  bool all() const noexcept { return consecutive_adjacent && geodesic && single_crossing && g_invariant; }
};

struct AxisCertificate {
  VertexId base_vertex = 0;
  std::size_t translation_length = 0;
  std::vector<VertexId> period;        // x, ..., g.x
  std::vector<VertexId> full_path;     // across the window
  std::size_t base_index = 0;          // position of x in full_path
  std::vector<HyperplaneId> hyperplane_order;  // dual to the period's edges
  PeriodRule rule = PeriodRule::Nesting;
  AxisChecks checks;
};

using AxisOutcome = std::variant<FixedZeroCube, AxisCertificate>;

AxisChecks check_axis(const CubicalComplex& complex, const HyperplaneSystem& system, const Automorphism& g,
                      const std::vector<VertexId>& path, std::size_t tau);

// Returns the least fixed vertex if any; otherwise tries stable minimizers in
// ascending id, first with the nesting order and then with the least BFS
// geodesic, and returns the first certificate whose checks all pass. Throws
// InvalidAction, EscapesWindow, NoStableVertexInWindow.
AxisOutcome build_axis(const ActionWindow& window, std::size_t generator);

}  // namespace cubix
