#pragma once

#include <string>
#include <vector>

#include "cubix/complex.hpp"
#include "cubix/error.hpp"
#include "cubix/wallspace.hpp"

namespace fx {

inline cubix::Wallspace single_wall() { return cubix::Wallspace::create({"a", "b"}, {{{"a"}, {"b"}}}); }

// points 1..4, walls ({1,2},{3,4}) and ({1,3},{2,4})
inline cubix::Wallspace quadrant() {
  return cubix::Wallspace::create({"1", "2", "3", "4"}, {{{"1", "2"}, {"3", "4"}}, {{"1", "3"}, {"2", "4"}}});
}

// p0..p3 with walls cutting after p0, p1, p2
inline cubix::Wallspace nested_line() {
  return cubix::Wallspace::create({"p0", "p1", "p2", "p3"}, {{{"p0"}, {"p1", "p2", "p3"}},
                                                              {{"p0", "p1"}, {"p2", "p3"}},
                                                              {{"p0", "p1", "p2"}, {"p3"}}});
}

inline cubix::CubicalComplex path(std::size_t n) {
  std::vector<std::string> names;
  std::vector<cubix::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    if (i > 0) edges.push_back({static_cast<cubix::VertexId>(i - 1), static_cast<cubix::VertexId>(i)});
  }
  return cubix::CubicalComplex::from_index_edges(names, edges);
}

inline cubix::CubicalComplex cycle(std::size_t n) {
  std::vector<std::string> names;
  std::vector<cubix::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i > 0) edges.push_back({static_cast<cubix::VertexId>(i - 1), static_cast<cubix::VertexId>(i)});
  }
  edges.push_back({0, static_cast<cubix::VertexId>(n - 1)});
  return cubix::CubicalComplex::from_index_edges(names, edges);
}

template <typename F>
cubix::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const cubix::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return cubix::ErrorCode::Io;
}

}  // namespace fx
