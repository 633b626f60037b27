#pragma once

#include <span>
#include <string>

#include "cubix/complex.hpp"

namespace cubix::io {

// Undirected DOT graph. With a hyperplane system, edges are coloured by
// hyperplane class; `path` edges are drawn bold.
std::string to_dot(const CubicalComplex& complex, const HyperplaneSystem* system = nullptr,
                   std::span<const VertexId> path = {});

}  // namespace cubix::io
