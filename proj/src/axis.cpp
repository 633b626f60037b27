#include "cubix/axis.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "cubix/error.hpp"

namespace cubix {
namespace {

std::optional<std::vector<VertexId>> period_by_nesting(const CubicalComplex& c, const HyperplaneSystem& sys,
                                                       VertexId x, VertexId gx) {
  const auto order = order_separating_hyperplanes(c, sys, x, gx);
  std::vector<VertexId> path{x};
  for (HyperplaneId h : order) {
    const VertexId cur = path.back();
    std::optional<VertexId> step;
    for (VertexId nb : c.neighbors(cur)) {
      if (sys.plane_of_edge[*c.edge_index(cur, nb)] == h) {
        step = nb;
        break;
      }
    }
    if (!step) return std::nullopt;
    path.push_back(*step);
  }
  if (path.back() != gx) return std::nullopt;
  return path;
}

std::vector<VertexId> least_geodesic(const CubicalComplex& c, const DistanceMatrix& d, VertexId x, VertexId y) {
  std::vector<VertexId> path{x};
  while (path.back() != y) {
    const VertexId cur = path.back();
    for (VertexId nb : c.neighbors(cur)) {
      if (d(nb, y) + 1 == d(cur, y)) {
        path.push_back(nb);
        break;
      }
    }
  }
  return path;
}

// Pushes g-translates forward and g^-1-translates backward until an image
// leaves the window. Returns the path and the index of x.
std::pair<std::vector<VertexId>, std::size_t> extend_period(const Automorphism& g, const Automorphism& ginv,
                                                            const std::vector<VertexId>& period, std::size_t limit) {
  const std::size_t tau = period.size() - 1;
  std::deque<VertexId> path(period.begin(), period.end());
  std::size_t base = 0;
  for (std::size_t i = 1; path.size() <= limit && g.defined(path[i]); ++i) path.push_back(g.map[path[i]]);
  while (path.size() <= limit && ginv.defined(path[tau - 1])) {
    path.push_front(ginv.map[path[tau - 1]]);
    ++base;
  }
  return {std::vector<VertexId>(path.begin(), path.end()), base};
}

}  // namespace

std::size_t displacement(const ActionWindow& window, const Automorphism& g, VertexId x) {
  window.complex.check_vertex(x);
  if (!g.defined(x)) {
    throw Error(ErrorCode::EscapesWindow, g.name + " moves " + window.complex.name(x) + " out of the window");
  }
  return dist_c(window.complex, x, g.map[x]);
}

MinDisplacement min_displacement_vertex(const ActionWindow& window, const Automorphism& g) {
  const CubicalComplex& c = window.complex;
  const DistanceMatrix d(c);
  std::optional<std::size_t> tau;
  for (VertexId x = 0; x < c.size(); ++x) {
    if (!window.interior.test(x) || !g.defined(x)) continue;
    const std::size_t disp = d(x, g.map[x]);
    if (!tau || disp < *tau) tau = disp;
  }
  if (!tau) throw Error(ErrorCode::EscapesWindow, g.name + " moves every interior vertex out of the window");

  MinDisplacement out;
  out.tau = *tau;
  for (VertexId x = 0; x < c.size(); ++x) {
    if (!window.interior.test(x) || !g.defined(x) || d(x, g.map[x]) != *tau) continue;
    out.minimizers.push_back(x);
    const VertexId gx = g.map[x];
    if (g.defined(gx) && d(x, g.map[gx]) == 2 * *tau) out.stable_minimizers.push_back(x);
  }
  out.stable = !out.stable_minimizers.empty();
  out.vertex = out.stable ? out.stable_minimizers.front() : out.minimizers.front();
  return out;
}

std::size_t translation_length(const CubicalComplex& complex, const Automorphism& g) {
  const DistanceMatrix d(complex);
  std::optional<std::size_t> best;
  for (VertexId x = 0; x < complex.size(); ++x) {
    if (!g.defined(x)) continue;
    const std::size_t disp = d(x, g.map[x]);
    if (!best || disp < *best) best = disp;
  }
  if (!best) throw Error(ErrorCode::EscapesWindow, g.name + " is defined nowhere");
  return *best;
}

std::vector<HyperplaneId> order_separating_hyperplanes(const CubicalComplex& complex, const HyperplaneSystem& system,
                                                       VertexId x, VertexId y) {
  complex.check_vertex(x);
  complex.check_vertex(y);
  std::vector<HyperplaneId> seps = system.separating(x, y);
  auto x_side = [&](HyperplaneId h) -> const Bitset& {
    return system.planes[h].side(system.planes[h].side_of(x));
  };
  std::stable_sort(seps.begin(), seps.end(),
                   [&](HyperplaneId a, HyperplaneId b) { return x_side(a).count() < x_side(b).count(); });
  for (std::size_t i = 0; i + 1 < seps.size(); ++i) {
    if (!x_side(seps[i]).is_subset_of(x_side(seps[i + 1]))) {
      throw Error(ErrorCode::NotTotallyOrdered, "hyperplanes " + std::to_string(seps[i]) + " and " +
                                                    std::to_string(seps[i + 1]) + " are not nested");
    }
  }
  return seps;
}

AxisChecks check_axis(const CubicalComplex& complex, const HyperplaneSystem& system, const Automorphism& g,
                      const std::vector<VertexId>& path, std::size_t tau) {
  AxisChecks checks;
  checks.consecutive_adjacent = tau > 0 && path.size() > tau;
  std::vector<HyperplaneId> crossed;
  for (std::size_t i = 0; i + 1 < path.size() && checks.consecutive_adjacent; ++i) {
    const auto e = complex.edge_index(path[i], path[i + 1]);
    if (!e) {
      checks.consecutive_adjacent = false;
    } else {
      crossed.push_back(system.plane_of_edge[*e]);
    }
  }
  if (!checks.consecutive_adjacent) return checks;

  std::sort(crossed.begin(), crossed.end());
  checks.single_crossing = std::adjacent_find(crossed.begin(), crossed.end()) == crossed.end();

  checks.geodesic = true;
  for (std::size_t i = 0; i < path.size() && checks.geodesic; ++i) {
    const auto dist = bfs_distances(complex, path[i]);
    for (std::size_t j = 0; j < path.size(); ++j) {
      const std::size_t expected = i > j ? i - j : j - i;
      if (dist[path[j]] != expected) {
        checks.geodesic = false;
        break;
      }
    }
  }

  checks.g_invariant = true;
  for (std::size_t i = 0; i + tau < path.size(); ++i) {
    if (g.defined(path[i]) && g.map[path[i]] != path[i + tau]) {
      checks.g_invariant = false;
      break;
    }
  }
  return checks;
}

AxisOutcome build_axis(const ActionWindow& window, std::size_t generator) {
  if (generator >= window.generators.size()) {
    throw Error(ErrorCode::InvalidAction, "generator index " + std::to_string(generator) + " out of range");
  }
  validate_action(window);
  const CubicalComplex& c = window.complex;
  const Automorphism& g = window.generators[generator];
  for (VertexId v = 0; v < c.size(); ++v) {
    if (g.defined(v) && g.map[v] == v) return FixedZeroCube{v};
  }

  const MinDisplacement md = min_displacement_vertex(window, g);
  if (md.stable_minimizers.empty()) {
    throw Error(ErrorCode::NoStableVertexInWindow,
                "no interior vertex with displacement " + std::to_string(md.tau) + " has g^2 displacement " +
                    std::to_string(2 * md.tau) + "; enlarge the window");
  }
  const HyperplaneSystem sys = hyperplanes(c);
  const DistanceMatrix d(c);
  const Automorphism ginv = inverse(g);

  auto attempt = [&](VertexId x, PeriodRule rule) -> std::optional<AxisCertificate> {
    const VertexId gx = g.map[x];
    std::optional<std::vector<VertexId>> period;
    if (rule == PeriodRule::Nesting) {
      try {
        period = period_by_nesting(c, sys, x, gx);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotTotallyOrdered) throw;
      }
    } else {
      period = least_geodesic(c, d, x, gx);
    }
    if (!period) return std::nullopt;
    auto [path, base] = extend_period(g, ginv, *period, c.size());
    AxisCertificate cert;
    cert.base_vertex = x;
    cert.translation_length = md.tau;
    cert.rule = rule;
    for (std::size_t i = 0; i + 1 < period->size(); ++i) {
      cert.hyperplane_order.push_back(sys.plane_of_edge[*c.edge_index((*period)[i], (*period)[i + 1])]);
    }
    cert.period = std::move(*period);
    cert.checks = check_axis(c, sys, g, path, md.tau);
    cert.full_path = std::move(path);
    cert.base_index = base;
    if (!cert.checks.all()) return std::nullopt;
    return cert;
  };

  for (PeriodRule rule : {PeriodRule::Nesting, PeriodRule::LeastGeodesic}) {
    for (VertexId x : md.stable_minimizers) {
      if (auto cert = attempt(x, rule)) return *std::move(cert);
    }
  }
  throw Error(ErrorCode::NoStableVertexInWindow, "no stable minimizer yields a certified axis; enlarge the window");
}

}  // namespace cubix
