#include "cubix/io/dot.hpp"

#include <array>
#include <set>

namespace cubix::io {

std::string to_dot(const CubicalComplex& complex, const HyperplaneSystem* system, std::span<const VertexId> path) {
  static constexpr std::array<const char*, 10> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::set<std::pair<VertexId, VertexId>> bold;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    bold.emplace(std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1]));
  }
  std::string out = "graph cubix {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < complex.size(); ++v) out += "  \"" + complex.name(v) + "\";\n";
  for (std::size_t e = 0; e < complex.edge_count(); ++e) {
    const Edge& edge = complex.edges()[e];
    out += "  \"" + complex.name(edge.u) + "\" -- \"" + complex.name(edge.v) + "\"";
    std::string attrs;
    if (system) {
      const HyperplaneId h = system->plane_of_edge[e];
      attrs += "color=\"" + std::string(kPalette[h % kPalette.size()]) + "\", label=\"h" + std::to_string(h) + "\"";
    }
    if (bold.count({edge.u, edge.v})) attrs += std::string(attrs.empty() ? "" : ", ") + "penwidth=3";
    if (!attrs.empty()) out += " [" + attrs + "]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace cubix::io
