#include "cubix/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "cubix/error.hpp"

namespace cubix::fixtures {
namespace {

void guard(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::GuardExceeded, message);
}

ActionWindow window_from(const GridShape& shape, CubicalComplex complex, std::size_t margin) {
  Bitset interior(shape.size());
  for (VertexId v = 0; v < shape.size(); ++v) {
    const auto c = shape.coordinates(v);
    bool inside = true;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const auto m = static_cast<std::int64_t>(shape.widths()[a] >= 2 * margin + 1 ? margin : 0);
      inside = inside && c[a] >= shape.low(a) + m && c[a] <= shape.high(a) - m;
    }
    if (inside) interior.set(v);
  }
  return ActionWindow{std::move(complex), std::move(interior), {}};
}

}  // namespace

GridShape::GridShape(std::vector<std::size_t> widths) : widths_(std::move(widths)) {
  for (std::size_t w : widths_) {
    guard(w >= 1, "grid widths must be positive");
    lo_.push_back(-static_cast<std::int64_t>((w - 1) / 2));
    guard(size_ <= kMaxFixtureVertices / w, "grid exceeds " + std::to_string(kMaxFixtureVertices) + " vertices");
    size_ *= w;
  }
}

std::vector<std::int64_t> GridShape::coordinates(VertexId v) const {
  std::vector<std::int64_t> c(widths_.size());
  std::size_t rest = v;
  for (std::size_t a = widths_.size(); a-- > 0;) {
    c[a] = lo_[a] + static_cast<std::int64_t>(rest % widths_[a]);
    rest /= widths_[a];
  }
  return c;
}

std::optional<VertexId> GridShape::vertex(std::span<const std::int64_t> coords) const {
  if (coords.size() != widths_.size()) return std::nullopt;
  std::size_t id = 0;
  for (std::size_t a = 0; a < widths_.size(); ++a) {
    if (coords[a] < low(a) || coords[a] > high(a)) return std::nullopt;
    id = id * widths_[a] + static_cast<std::size_t>(coords[a] - lo_[a]);
  }
  return static_cast<VertexId>(id);
}

std::string GridShape::name(VertexId v) const { return coordinate_name(coordinates(v)); }

std::string coordinate_name(std::span<const std::int64_t> coords) {
  std::string out = "v";
  for (std::size_t a = 0; a < coords.size(); ++a) {
    if (a > 0) out += '_';
    if (coords[a] < 0) out += 'm';
    out += std::to_string(coords[a] < 0 ? -coords[a] : coords[a]);
  }
  return out;
}

CubicalComplex grid_complex(const std::vector<std::size_t>& widths) {
  const GridShape shape(widths);
  std::vector<std::string> names;
  names.reserve(shape.size());
  for (VertexId v = 0; v < shape.size(); ++v) names.push_back(shape.name(v));
  std::vector<Edge> edges;
  for (VertexId v = 0; v < shape.size(); ++v) {
    auto c = shape.coordinates(v);
    for (std::size_t a = 0; a < c.size(); ++a) {
      ++c[a];
      if (const auto u = shape.vertex(c)) edges.push_back(Edge{v, *u});
      --c[a];
    }
  }
  return CubicalComplex::from_index_edges(std::move(names), std::move(edges));
}

Automorphism grid_translation(const GridShape& shape, std::span<const std::int64_t> offset, std::string name) {
  Automorphism g{std::move(name), std::vector<VertexId>(shape.size(), kNoVertex)};
  for (VertexId v = 0; v < shape.size(); ++v) {
    auto c = shape.coordinates(v);
    for (std::size_t a = 0; a < c.size(); ++a) c[a] += offset[a];
    if (const auto u = shape.vertex(c)) g.map[v] = *u;
  }
  return g;
}

Automorphism grid_symmetry(const GridShape& shape, std::span<const std::size_t> perm, std::span<const int> signs,
                           std::string name) {
  const std::size_t n = shape.dimension();
  std::vector<std::size_t> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i || sorted.size() != n) throw Error(ErrorCode::InvalidAction, "not a coordinate permutation");
  }
  if (signs.size() != n) throw Error(ErrorCode::InvalidAction, "one sign per axis required");
  Automorphism g{std::move(name), std::vector<VertexId>(shape.size(), kNoVertex)};
  for (VertexId v = 0; v < shape.size(); ++v) {
    const auto c = shape.coordinates(v);
    std::vector<std::int64_t> img(n);
    for (std::size_t a = 0; a < n; ++a) img[a] = (signs[a] < 0 ? -1 : 1) * c[perm[a]];
    if (const auto u = shape.vertex(img)) g.map[v] = *u;
  }
  return g;
}

ActionWindow grid(std::size_t n, const std::vector<std::size_t>& widths, std::size_t margin) {
  guard(n >= 1 && n <= kMaxGridDimension, "grid dimension must be between 1 and 4");
  guard(widths.size() == n, "grid needs one width per axis");
  for (std::size_t w : widths) guard(w >= 3 && w >= 2 * margin + 1, "grid widths must be at least 3 and 2*margin+1");
  const GridShape shape(widths);
  ActionWindow win = window_from(shape, certify(grid_complex(widths)), margin);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::int64_t> offset(n, 0);
    offset[a] = 1;
    win.generators.push_back(grid_translation(shape, offset, "t" + std::to_string(a + 1)));
  }
  return win;
}

Automorphism path_reflection(const GridShape& shape, std::int64_t offset, std::string name) {
  if (shape.dimension() != 1) throw Error(ErrorCode::InvalidAction, "path reflection needs a one-dimensional grid");
  Automorphism g{std::move(name), std::vector<VertexId>(shape.size(), kNoVertex)};
  for (VertexId v = 0; v < shape.size(); ++v) {
    const std::int64_t img = offset - shape.coordinates(v)[0];
    if (const auto u = shape.vertex(std::span<const std::int64_t>(&img, 1))) g.map[v] = *u;
  }
  return g;
}

TorusComplex torus_complex(std::size_t k, std::size_t d) {
  guard(k >= 1 && k <= 5, "torus generators must be between 1 and 5");
  guard(d >= 1 && d <= k, "torus dimension must be between 1 and k");
  TorusComplex t{k, d, {}, std::vector<std::size_t>(d + 1, 0)};
  for (std::size_t dim = 0; dim <= d; ++dim) {
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != dim) continue;
      std::vector<std::uint32_t> cell;
      for (std::uint32_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1U) cell.push_back(i);
      }
      t.cells.push_back(std::move(cell));
      ++t.cube_counts[dim];
    }
  }
  // masks enumerate in numeric order; sort each dimension lexicographically
  std::stable_sort(t.cells.begin(), t.cells.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return t;
}

ActionWindow TorusComplex::cover(std::size_t width) const {
  if (max_dim >= 2 || generators == 1) {
    return grid(generators, std::vector<std::size_t>(generators, width));
  }
  // Reduced words of length <= width over a, A, b, B, ...; letter 2i is
  // generator i, 2i+1 its inverse.
  guard(width >= 1, "tree cover radius must be positive");
  const std::size_t k = generators;
  std::vector<std::vector<std::uint32_t>> words{{}};
  for (std::size_t begin = 0, len = 0; len < width; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::uint32_t l = 0; l < 2 * k; ++l) {
        if (!words[i].empty() && (words[i].back() ^ 1U) == l) continue;
        auto w = words[i];
        w.push_back(l);
        words.push_back(std::move(w));
        guard(words.size() <= kMaxFixtureVertices, "tree cover too large");
      }
    }
    begin = end;
  }
  std::map<std::vector<std::uint32_t>, VertexId> index;
  std::vector<std::string> names;
  for (const auto& w : words) {
    index.emplace(w, static_cast<VertexId>(names.size()));
    std::string name = w.empty() ? "e" : "";
    for (std::uint32_t l : w) name += static_cast<char>((l % 2 == 0 ? 'a' : 'A') + l / 2);
    names.push_back(std::move(name));
  }
  std::vector<Edge> edges;
  for (const auto& [w, id] : index) {
    if (w.empty()) continue;
    const auto parent = index.at(std::vector<std::uint32_t>(w.begin(), w.end() - 1));
    edges.push_back(Edge{std::min(parent, id), std::max(parent, id)});
  }
  Bitset interior(words.size());
  for (VertexId v = 0; v < words.size(); ++v) {
    if (words[v].size() + 1 <= width) interior.set(v);
  }
  ActionWindow win{certify(CubicalComplex::from_index_edges(std::move(names), std::move(edges))), std::move(interior), {}};
  for (std::uint32_t g = 0; g < k; ++g) {
    Automorphism a{std::string(1, static_cast<char>('a' + g)), std::vector<VertexId>(words.size(), kNoVertex)};
    for (VertexId v = 0; v < words.size(); ++v) {
      std::vector<std::uint32_t> w;
      if (!words[v].empty() && words[v].front() == 2 * g + 1) {
        w.assign(words[v].begin() + 1, words[v].end());
      } else {
        w.push_back(2 * g);
        w.insert(w.end(), words[v].begin(), words[v].end());
      }
      if (const auto it = index.find(w); it != index.end()) a.map[v] = it->second;
    }
    win.generators.push_back(std::move(a));
  }
  return win;
}

ActionWindow star(std::size_t legs, std::size_t leg_length) {
  guard(legs >= 2 && leg_length >= 1, "star needs at least 2 legs of length at least 1");
  guard(legs * leg_length < kMaxFixtureVertices, "star too large");
  std::vector<std::string> names{"c"};
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < legs; ++j) {
    for (std::size_t k = 1; k <= leg_length; ++k) {
      const auto id = static_cast<VertexId>(names.size());
      names.push_back("l" + std::to_string(j) + "_" + std::to_string(k));
      edges.push_back(Edge{k == 1 ? VertexId{0} : id - 1, id});
    }
  }
  const std::size_t n = names.size();
  std::vector<std::size_t> rotation(legs);
  for (std::size_t j = 0; j < legs; ++j) rotation[j] = (j + 1) % legs;
  ActionWindow win{certify(CubicalComplex::from_index_edges(std::move(names), std::move(edges))), Bitset::full(n), {}};
  win.generators.push_back(star_permutation(legs, leg_length, rotation, "r"));
  return win;
}

Automorphism star_permutation(std::size_t legs, std::size_t leg_length, std::span<const std::size_t> perm,
                              std::string name) {
  std::vector<std::size_t> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i || sorted.size() != legs) throw Error(ErrorCode::InvalidAction, "not a leg permutation");
  }
  Automorphism g{std::move(name), std::vector<VertexId>(1 + legs * leg_length)};
  g.map[0] = 0;
  for (std::size_t j = 0; j < legs; ++j) {
    for (std::size_t k = 0; k < leg_length; ++k) {
      g.map[1 + j * leg_length + k] = static_cast<VertexId>(1 + perm[j] * leg_length + k);
    }
  }
  return g;
}

ActionWindow staircase(std::size_t steps) {
  guard(steps >= 3, "staircase needs at least 3 steps");
  guard(steps < kMaxFixtureVertices / 3, "staircase too large");
  using Point = std::pair<std::int64_t, std::int64_t>;
  std::set<Point> points;
  for (std::int64_t i = 0; i <= static_cast<std::int64_t>(steps); ++i) {
    points.insert({i, i});
    if (i < static_cast<std::int64_t>(steps)) {
      points.insert({i + 1, i});
      points.insert({i, i + 1});
    }
  }
  std::map<Point, VertexId> index;
  std::vector<std::string> names;
  for (const auto& p : points) {
    index.emplace(p, static_cast<VertexId>(names.size()));
    const std::int64_t c[2] = {p.first, p.second};
    names.push_back(coordinate_name(c));
  }
  std::vector<Edge> edges;
  for (const auto& [p, id] : index) {
    for (const Point& q : {Point{p.first + 1, p.second}, Point{p.first, p.second + 1}}) {
      if (const auto it = index.find(q); it != index.end()) edges.push_back(Edge{id, it->second});
    }
  }
  const std::size_t n = names.size();
  Bitset interior(n);
  Automorphism glide{"g", std::vector<VertexId>(n, kNoVertex)};
  for (const auto& [p, id] : index) {
    const auto lo = std::min(p.first, p.second);
    const auto hi = std::max(p.first, p.second);
    if (lo >= 1 && hi <= static_cast<std::int64_t>(steps) - 1) interior.set(id);
    if (const auto it = index.find({p.first + 1, p.second + 1}); it != index.end()) glide.map[id] = it->second;
  }
  ActionWindow win{certify(CubicalComplex::from_index_edges(std::move(names), std::move(edges))), std::move(interior), {}};
  win.generators.push_back(std::move(glide));
  return win;
}

ActionWindow ladder(std::size_t length) {
  guard(length >= 3, "ladder needs at least 3 rungs");
  const GridShape shape({length, 2});
  ActionWindow win = window_from(shape, certify(grid_complex({length, 2})), 1);
  const std::int64_t offset[2] = {1, 0};
  win.generators.push_back(grid_translation(shape, offset, "t"));
  return win;
}

CubicalComplex tree(std::size_t vertices, std::uint64_t seed) {
  guard(vertices >= 1 && vertices <= kMaxFixtureVertices, "tree size out of range");
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (VertexId v = 0; v < vertices; ++v) {
    names.push_back("t" + std::to_string(v));
    if (v > 0) edges.push_back(Edge{static_cast<VertexId>(rng() % v), v});
  }
  return certify(CubicalComplex::from_index_edges(std::move(names), std::move(edges)));
}

Wallspace random_wallspace(std::size_t points, std::size_t walls, std::uint64_t seed) {
  guard(points >= 2 && points <= kMaxRandomPoints, "random wallspaces need 2 to 24 points");
  const std::uint64_t available = (std::uint64_t{1} << (points - 1)) - 1;
  guard(walls >= 1 && walls <= available, std::to_string(walls) + " walls exceed the " + std::to_string(available) +
                                              " bipartitions of " + std::to_string(points) + " points");
  std::mt19937_64 rng(seed);
  const std::uint64_t full = (std::uint64_t{1} << points) - 1;
  std::set<std::uint64_t> chosen;
  std::vector<std::uint64_t> order;
  while (order.size() < walls) {
    std::uint64_t mask = 1 + rng() % (full - 1);  // proper nonempty subset
    if (mask & 1U) mask = full & ~mask;            // right side never holds p0
    if (chosen.insert(mask).second) order.push_back(mask);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < points; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<Bitset, Bitset>> halves;
  for (std::uint64_t mask : order) {
    Bitset left(points), right(points);
    for (std::size_t i = 0; i < points; ++i) ((mask >> i) & 1U ? right : left).set(i);
    halves.emplace_back(std::move(left), std::move(right));
  }
  return Wallspace::from_halfspaces(std::move(names), std::move(halves));
}

FixtureKind parse_fixture_kind(const std::string& kind) {
  static const std::map<std::string, FixtureKind> kinds{
      {"grid", FixtureKind::Grid},         {"torus", FixtureKind::TorusComplex},
      {"star", FixtureKind::Star},         {"staircase", FixtureKind::Staircase},
      {"ladder", FixtureKind::Ladder},     {"random-wallspace", FixtureKind::RandomWallspace},
      {"tree", FixtureKind::Tree}};
  const auto it = kinds.find(kind);
  if (it == kinds.end()) throw Error(ErrorCode::GuardExceeded, "unknown fixture kind '" + kind + "'");
  return it->second;
}

std::string to_string(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::Grid: return "grid";
    case FixtureKind::TorusComplex: return "torus";
    case FixtureKind::Star: return "star";
    case FixtureKind::Staircase: return "staircase";
    case FixtureKind::Ladder: return "ladder";
    case FixtureKind::RandomWallspace: return "random-wallspace";
    case FixtureKind::Tree: return "tree";
  }
  return "unknown";
}

Fixture make_fixture(const FixtureSpec& spec) {
  const auto& p = spec.params;
  auto need = [&](bool ok) {
    guard(ok, "wrong parameter count for fixture " + to_string(spec.kind));
  };
  Fixture f;
  switch (spec.kind) {
    case FixtureKind::Grid:
      need(!p.empty() && p.size() == p[0] + 1);
      f.window = grid(p[0], std::vector<std::size_t>(p.begin() + 1, p.end()));
      break;
    case FixtureKind::TorusComplex:
      need(p.size() == 3);
      f.torus = torus_complex(p[0], p[1]);
      f.window = f.torus->cover(p[2]);
      break;
    case FixtureKind::Star:
      need(p.size() == 2);
      f.window = star(p[0], p[1]);
      break;
    case FixtureKind::Staircase:
      need(p.size() == 1);
      f.window = staircase(p[0]);
      break;
    case FixtureKind::Ladder:
      need(p.size() == 1);
      f.window = ladder(p[0]);
      break;
    case FixtureKind::RandomWallspace:
      need(p.size() == 2);
      f.wallspace = random_wallspace(p[0], p[1], spec.seed);
      break;
    case FixtureKind::Tree:
      need(p.size() == 1);
      f.complex = tree(p[0], spec.seed);
      break;
  }
  return f;
}

}  // namespace cubix::fixtures
