#include "cubix/actions.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "cubix/error.hpp"

namespace cubix {
namespace {

struct MapHash {
  std::size_t operator()(const std::vector<VertexId>& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (VertexId v : m) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string vertex_label(const CubicalComplex& c, VertexId v) { return c.name(v); }

std::vector<Automorphism> letters(const ActionWindow& window) {
  std::vector<Automorphism> out;
  for (const auto& g : window.generators) {
    out.push_back(g);
    out.push_back(inverse(g));
  }
  return out;
}

int letter_code(std::size_t letter_index) {
  const int gen = static_cast<int>(letter_index / 2) + 1;
  return letter_index % 2 == 0 ? gen : -gen;
}

}  // namespace

Automorphism Automorphism::identity(std::size_t n, std::string name) {
  Automorphism a{std::move(name), std::vector<VertexId>(n)};
  std::iota(a.map.begin(), a.map.end(), VertexId{0});
  return a;
}

std::optional<VertexId> Automorphism::apply(VertexId v) const noexcept {
  if (!defined(v)) return std::nullopt;
  return map[v];
}

bool Automorphism::total() const noexcept {
  return std::none_of(map.begin(), map.end(), [](VertexId v) { return v == kNoVertex; });
}

std::size_t Automorphism::domain_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(map.begin(), map.end(), [](VertexId v) { return v != kNoVertex; }));
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism out{a.name + "." + b.name, std::vector<VertexId>(b.map.size(), kNoVertex)};
  for (VertexId v = 0; v < b.map.size(); ++v) {
    if (b.map[v] != kNoVertex && a.defined(b.map[v])) out.map[v] = a.map[b.map[v]];
  }
  return out;
}

Automorphism inverse(const Automorphism& a) {
  Automorphism out{a.name + "^-1", std::vector<VertexId>(a.map.size(), kNoVertex)};
  for (VertexId v = 0; v < a.map.size(); ++v) {
    const VertexId img = a.map[v];
    if (img == kNoVertex) continue;
    if (img >= out.map.size()) {
      throw Error(ErrorCode::InvalidAction, a.name + " sends " + std::to_string(v) + " outside the complex");
    }
    if (out.map[img] != kNoVertex) {
      throw Error(ErrorCode::NotInjective, a.name + " is not injective at image " + std::to_string(img));
    }
    out.map[img] = v;
  }
  return out;
}

Automorphism conjugate(const Automorphism& h, const Automorphism& g) {
  Automorphism out = compose(h, compose(g, inverse(h)));
  out.name = h.name + "." + g.name + "." + h.name + "^-1";
  return out;
}

std::size_t ActionWindow::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name == name) return i;
  }
  throw Error(ErrorCode::InvalidAction, "no generator named '" + name + "'");
}

ActionReport validate_action(const ActionWindow& window) {
  const CubicalComplex& c = window.complex;
  const std::size_t n = c.size();
  if (window.interior.size() != n) {
    throw Error(ErrorCode::InvalidAction, "interior marks " + std::to_string(window.interior.size()) +
                                              " vertices for a complex of " + std::to_string(n));
  }
  induced_subcomplex(c, window.interior);  // NotConnected

  ActionReport report;
  report.all_total = true;
  for (const auto& g : window.generators) {
    if (g.map.size() != n) {
      throw Error(ErrorCode::InvalidAction, "generator " + g.name + " maps " + std::to_string(g.map.size()) +
                                                " vertices for a complex of " + std::to_string(n));
    }
    std::vector<char> hit(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      const VertexId img = g.map[v];
      if (img == kNoVertex) {
        if (window.interior.test(v)) {
          throw Error(ErrorCode::InvalidAction,
                      "generator " + g.name + " is undefined at interior vertex " + vertex_label(c, v));
        }
        continue;
      }
      if (img >= n) throw Error(ErrorCode::InvalidAction, "generator " + g.name + " leaves the vertex set");
      if (hit[img]) {
        throw Error(ErrorCode::NotInjective, "generator " + g.name + " sends two vertices to " + vertex_label(c, img));
      }
      hit[img] = 1;
    }
    report.all_total = report.all_total && g.total();
    GeneratorCoverage cov{g.name, 0, c.edge_count()};
    for (const Edge& e : c.edges()) {
      if (!g.defined(e.u) || !g.defined(e.v)) continue;
      if (!c.adjacent(g.map[e.u], g.map[e.v])) {
        throw Error(ErrorCode::AdjacencyViolation, "generator " + g.name + " breaks edge " + vertex_label(c, e.u) +
                                                       "-" + vertex_label(c, e.v));
      }
      ++cov.edges_checked;
    }
    report.coverage.push_back(std::move(cov));
  }
  return report;
}

WallAction induced_wall_action(const ActionWindow& window, const HyperplaneSystem& system) {
  const CubicalComplex& c = window.complex;
  WallAction action;
  for (const auto& g : window.generators) {
    std::vector<std::optional<WallImage>> row(system.planes.size());
    for (const auto& h : system.planes) {
      std::optional<WallImage> image;
      bool consistent = true;
      for (std::size_t e : h.dual_edges) {
        const Edge& edge = c.edges()[e];
        if (!g.defined(edge.u) || !g.defined(edge.v)) continue;
        const auto mapped = c.edge_index(g.map[edge.u], g.map[edge.v]);
        if (!mapped) {
          consistent = false;
          break;
        }
        const HyperplaneId target = system.plane_of_edge[*mapped];
        const bool preserved = h.side_of(edge.u) == system.planes[target].side_of(g.map[edge.u]);
        if (!image) {
          image = WallImage{target, preserved};
        } else if (image->target != target || image->side_preserved != preserved) {
          consistent = false;
          break;
        }
      }
      if (consistent) row[h.id] = image;
    }
    action.images.push_back(std::move(row));
  }
  return action;
}

Orientation act_on_zero_cube(const WallAction& action, std::size_t generator, const Orientation& c) {
  const auto& row = action.images.at(generator);
  Orientation out(c.size());
  for (WallId h = 0; h < c.size(); ++h) {
    const auto& img = row.at(h);
    if (!img) throw Error(ErrorCode::NotTotalAction, "hyperplane " + std::to_string(h) + " has no image");
    out.set(img->target, img->side_preserved ? c.side(h) : opposite(c.side(h)));
  }
  return out;
}

std::string format_word(const ActionWindow& window, const Word& word) {
  if (word.empty()) return "1";
  std::string out;
  for (int letter : word) {
    if (!out.empty()) out += '.';
    out += window.generators.at(static_cast<std::size_t>(std::abs(letter)) - 1).name;
    if (letter < 0) out += "^-1";
  }
  return out;
}

std::vector<WordMap> word_maps(const ActionWindow& window, std::size_t max_length, std::size_t guard) {
  const std::size_t n = window.complex.size();
  const bool total = std::all_of(window.generators.begin(), window.generators.end(),
                                 [](const Automorphism& g) { return g.total(); });
  const std::vector<Automorphism> alphabet = letters(window);

  std::vector<WordMap> out;
  std::unordered_map<std::vector<VertexId>, std::size_t, MapHash> seen;
  out.push_back(WordMap{{}, Automorphism::identity(n)});
  seen.emplace(out.back().map.map, 0);
  std::size_t level_begin = 0;
  for (std::size_t length = 1; total || length <= max_length; ++length) {
    const std::size_t level_end = out.size();
    if (level_begin == level_end) break;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t l = 0; l < alphabet.size(); ++l) {
        Automorphism next = compose(out[i].map, alphabet[l]);
        if (next.domain_size() == 0 || seen.count(next.map)) continue;
        if (total && out.size() >= guard) {
          throw Error(ErrorCode::GuardExceeded, "generated group exceeds " + std::to_string(guard) + " elements");
        }
        Word w = out[i].word;
        w.push_back(letter_code(l));
        next.name = format_word(window, w);
        seen.emplace(next.map, out.size());
        out.push_back(WordMap{std::move(w), std::move(next)});
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<Inversion> detect_inversions(const ActionWindow& window, std::size_t max_length) {
  const CubicalComplex& c = window.complex;
  const HyperplaneSystem sys = hyperplanes(c);
  std::vector<Inversion> out;
  for (const auto& wm : word_maps(window, max_length)) {
    if (wm.word.empty()) continue;
    const Automorphism& m = wm.map;
    for (const auto& h : sys.planes) {
      bool mapped_any = false;
      bool stabilizes = true;
      bool swaps = true;
      for (std::size_t e : h.dual_edges) {
        const Edge& edge = c.edges()[e];
        if (!m.defined(edge.u) || !m.defined(edge.v)) continue;
        const auto img = c.edge_index(m.map[edge.u], m.map[edge.v]);
        if (!img || sys.plane_of_edge[*img] != h.id) {
          stabilizes = false;
          break;
        }
        mapped_any = true;
        if (h.side_of(edge.u) == h.side_of(m.map[edge.u])) swaps = false;
      }
      if (mapped_any && stabilizes && swaps) out.push_back(Inversion{wm.word, h.id});
    }
  }
  return out;
}

ActionWindow subdivide_action(const ActionWindow& window, std::size_t dim_guard) {
  Subdivision sub = cubical_subdivision(window.complex, dim_guard);
  const std::size_t n = sub.complex.size();
  Bitset interior(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto& verts = sub.origin[v].vertices;
    if (std::all_of(verts.begin(), verts.end(), [&](VertexId u) { return window.interior.test(u); })) interior.set(v);
  }
  std::vector<Automorphism> gens;
  for (const auto& g : window.generators) {
    Automorphism moved{g.name, std::vector<VertexId>(n, kNoVertex)};
    for (VertexId v = 0; v < n; ++v) {
      std::vector<VertexId> image;
      bool ok = true;
      for (VertexId u : sub.origin[v].vertices) {
        if (!g.defined(u)) {
          ok = false;
          break;
        }
        image.push_back(g.map[u]);
      }
      if (!ok) continue;
      std::sort(image.begin(), image.end());
      if (const auto target = sub.vertex_of(image)) moved.map[v] = *target;
    }
    gens.push_back(std::move(moved));
  }
  return ActionWindow{certify(std::move(sub.complex)), std::move(interior), std::move(gens)};
}

std::vector<VertexId> fixed_zero_cubes(const ActionWindow& window) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < window.complex.size(); ++v) {
    if (std::all_of(window.generators.begin(), window.generators.end(),
                    [&](const Automorphism& g) { return g.defined(v) && g.map[v] == v; })) {
      out.push_back(v);
    }
  }
  return out;
}

OrbitResult orbit(const ActionWindow& window, VertexId seed, std::size_t bound) {
  window.complex.check_vertex(seed);
  const std::vector<Automorphism> alphabet = letters(window);
  OrbitResult result;
  std::vector<char> seen(window.complex.size(), 0);
  std::vector<VertexId> frontier{seed};
  seen[seed] = 1;
  for (std::size_t depth = 0; depth < bound && !frontier.empty(); ++depth) {
    std::vector<VertexId> next;
    for (VertexId v : frontier) {
      for (const auto& a : alphabet) {
        if (!a.defined(v)) {
          result.escaped = true;
          continue;
        }
        if (!seen[a.map[v]]) {
          seen[a.map[v]] = 1;
          next.push_back(a.map[v]);
        }
      }
    }
    frontier = std::move(next);
  }
  for (VertexId v = 0; v < seen.size(); ++v) {
    if (seen[v]) result.vertices.push_back(v);
  }
  return result;
}

Minimization minimize_invariant_subcomplex(const ActionWindow& window) {
  const ActionReport report = validate_action(window);
  if (!report.all_total) throw Error(ErrorCode::NotTotalAction, "every generator must be a full automorphism");
  if (const auto inv = detect_inversions(window); !inv.empty()) {
    throw Error(ErrorCode::HasInversions, format_word(window, inv.front().word) + " inverts hyperplane " +
                                              std::to_string(inv.front().hyperplane));
  }
  const CubicalComplex& c = window.complex;
  const HyperplaneSystem sys = hyperplanes(c);
  const WallAction action = induced_wall_action(window, sys);
  const std::size_t planes = sys.planes.size();

  UnionFind uf(planes);
  for (const auto& row : action.images) {
    for (HyperplaneId h = 0; h < planes; ++h) uf.unite(h, row[h]->target);
  }
  Minimization result;
  {
    std::vector<std::vector<HyperplaneId>> by_root(planes);
    for (HyperplaneId h = 0; h < planes; ++h) by_root[uf.find(h)].push_back(h);
    for (auto& o : by_root) {
      if (!o.empty()) result.orbits.push_back(std::move(o));
    }
  }

  Bitset current = Bitset::full(c.size());
  std::vector<char> live(result.orbits.size(), 1);
  auto crosses_current = [&](HyperplaneId h) {
    return sys.planes[h].left.intersects(current) && sys.planes[h].right.intersects(current);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t oi = 0; oi < result.orbits.size(); ++oi) {
      if (!live[oi]) continue;
      const auto& o = result.orbits[oi];
      const std::vector<std::uint32_t> members = current.indices();
      std::vector<std::string> names;
      for (VertexId v : members) names.push_back(c.name(v));
      std::vector<std::pair<Bitset, Bitset>> halves;
      for (HyperplaneId h : o) {
        Bitset l(members.size()), r(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
          (sys.planes[h].left.test(members[i]) ? l : r).set(i);
        }
        halves.emplace_back(std::move(l), std::move(r));
      }
      const DualComplex quotient = dual_complex(Wallspace::from_halfspaces(std::move(names), std::move(halves)));

      std::unordered_map<HyperplaneId, std::size_t> position;
      for (std::size_t i = 0; i < o.size(); ++i) position.emplace(o[i], i);
      const Orientation* fixed = nullptr;
      for (const auto& z : quotient.zero_cubes) {
        bool is_fixed = true;
        for (const auto& row : action.images) {
          for (std::size_t i = 0; i < o.size() && is_fixed; ++i) {
            const WallImage& img = *row[o[i]];
            const Side moved = img.side_preserved ? z.side(static_cast<WallId>(i)) : opposite(z.side(static_cast<WallId>(i)));
            is_fixed = z.side(static_cast<WallId>(position.at(img.target))) == moved;
          }
          if (!is_fixed) break;
        }
        if (is_fixed) {
          fixed = &z;
          break;
        }
      }
      if (!fixed) continue;

      for (std::size_t i = 0; i < o.size(); ++i) current &= sys.planes[o[i]].side(fixed->side(static_cast<WallId>(i)));
      live[oi] = 0;
      changed = true;
      result.log.push_back(RemovalStep{RemovalKind::Explicit, o, fixed->to_string(), current.count()});
      for (std::size_t other = 0; other < result.orbits.size(); ++other) {
        if (!live[other] || crosses_current(result.orbits[other].front())) continue;
        live[other] = 0;
        result.log.push_back(RemovalStep{RemovalKind::Collateral, result.orbits[other], {}, current.count()});
      }
    }
  }
  result.vertices = std::move(current);
  return result;
}

ProductDecomposition product_decomposition(const Wallspace& ws,
                                           const std::optional<std::vector<std::vector<WallId>>>& partition) {
  std::vector<std::vector<WallId>> classes = partition ? *partition : crossing_classes(ws);
  validate_partition(ws, classes);

  ProductDecomposition out{dual_complex(ws), {}, {}, {}};
  for (const auto& cls : classes) {
    std::vector<WallId> walls = normalize_wall_subset(ws, cls);
    Wallspace sub = sub_wallspace(ws, walls);
    DualComplex d = dual_complex(sub);
    out.factors.push_back(ProductFactor{std::move(walls), std::move(sub), std::move(d)});
  }

  const CubicalComplex& dc = out.dual.complex;
  for (const auto& z : out.dual.zero_cubes) {
    std::vector<VertexId> coords;
    for (const auto& f : out.factors) coords.push_back(*f.dual.vertex_of(restriction_quotient(ws, f.walls, z)));
    out.coordinates.push_back(std::move(coords));
  }

  ProductCertificate& cert = out.certificate;
  std::size_t product_size = 1;
  bool overflow = false;
  for (const auto& f : out.factors) {
    if (product_size > dc.size()) overflow = true;
    product_size *= f.dual.complex.size();
  }
  {
    std::vector<std::vector<VertexId>> sorted = out.coordinates;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    cert.bijective = !overflow && distinct && product_size == dc.size();
    if (!cert.bijective) {
      cert.witness = "dual has " + std::to_string(dc.size()) + " vertices, product has " +
                     (overflow ? std::string("more") : std::to_string(product_size));
    }
  }

  std::size_t product_edges = 0;
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    std::size_t e = out.factors[i].dual.complex.edge_count();
    for (std::size_t j = 0; j < out.factors.size(); ++j) {
      if (j != i) e *= out.factors[j].dual.complex.size();
    }
    product_edges += e;
  }
  cert.adjacency_preserved = cert.bijective && product_edges == dc.edge_count();
  if (cert.bijective && !cert.adjacency_preserved && cert.witness.empty()) {
    cert.witness = "dual has " + std::to_string(dc.edge_count()) + " edges, product has " + std::to_string(product_edges);
  }
  for (const Edge& e : dc.edges()) {
    if (!cert.adjacency_preserved) break;
    const auto& a = out.coordinates[e.u];
    const auto& b = out.coordinates[e.v];
    std::size_t differing = 0;
    bool adjacent = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      ++differing;
      adjacent = adjacent && out.factors[i].dual.complex.adjacent(a[i], b[i]);
    }
    if (differing != 1 || !adjacent) {
      cert.adjacency_preserved = false;
      cert.witness = "edge " + dc.name(e.u) + "-" + dc.name(e.v) + " is not a product edge";
    }
  }

  if (cert.bijective) {
    const DistanceMatrix d(dc);
    std::vector<DistanceMatrix> fd;
    for (const auto& f : out.factors) fd.emplace_back(f.dual.complex);
    cert.l1_additive = true;
    for (VertexId x = 0; x < dc.size() && cert.l1_additive; ++x) {
      for (VertexId y = x + 1; y < dc.size(); ++y) {
        std::uint32_t sum = 0;
        for (std::size_t i = 0; i < fd.size(); ++i) sum += fd[i](out.coordinates[x][i], out.coordinates[y][i]);
        if (sum != d(x, y)) {
          cert.l1_additive = false;
          if (cert.witness.empty()) cert.witness = "distance " + dc.name(x) + " to " + dc.name(y) + " is not additive";
          break;
        }
      }
    }
  }
  return out;
}

CrossingBound bounded_crossing_certificate(const Wallspace& ws, const std::vector<WallId>& walls) {
  const std::vector<WallId> v = normalize_wall_subset(ws, walls);
  if (v.size() > kCliqueGuard) {
    throw Error(ErrorCode::LimitExceeded,
                "class of " + std::to_string(v.size()) + " walls exceeds the clique guard " + std::to_string(kCliqueGuard));
  }
  const std::size_t n = v.size();
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (crosses(ws, v[i], v[j])) {
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
      }
    }
  }
  std::uint32_t best = 0;
  std::size_t best_size = 0;
  auto search = [&](auto&& self, std::uint32_t chosen, std::size_t size, std::uint32_t candidates) -> void {
    if (size > best_size) {
      best_size = size;
      best = chosen;
    }
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best_size) return;
    while (candidates) {
      if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best_size) return;
      const int i = std::countr_zero(candidates);
      candidates &= candidates - 1;
      self(self, chosen | (1U << i), size + 1, candidates & adj[i]);
    }
  };
  const std::uint32_t all = n == 32 ? ~0U : ((1U << n) - 1U);
  search(search, 0U, 0, all);
  CrossingBound out{best_size, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if ((best >> i) & 1U) out.clique.push_back(v[i]);
  }
  return out;
}

QuasilineReport quasiline_certificate(const CubicalComplex& factor, const Automorphism& shift, std::size_t radius,
                                      std::size_t dim_guard) {
  const std::size_t n = factor.size();
  if (shift.map.size() != n) {
    throw Error(ErrorCode::InvalidAction, "shift maps " + std::to_string(shift.map.size()) + " vertices for a complex of " +
                                              std::to_string(n));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (shift.defined(v) && shift.map[v] >= n) throw Error(ErrorCode::InvalidAction, "shift leaves the vertex set");
    if (shift.defined(v) && shift.map[v] == v) {
      throw Error(ErrorCode::FixedVertexFound, "shift fixes " + factor.name(v));
    }
  }
  for (const Edge& e : factor.edges()) {
    if (shift.defined(e.u) && shift.defined(e.v) && !factor.adjacent(shift.map[e.u], shift.map[e.v])) {
      throw Error(ErrorCode::AdjacencyViolation, "shift breaks edge " + factor.name(e.u) + "-" + factor.name(e.v));
    }
  }

  const DistanceMatrix d(factor);
  QuasilineReport rep;
  std::uint32_t best_ecc = ~0U;
  for (VertexId v = 0; v < n; ++v) {
    const auto row = d.row(v);
    const std::uint32_t ecc = *std::max_element(row.begin(), row.end());
    if (ecc < best_ecc) {
      best_ecc = ecc;
      rep.center = v;
    }
  }
  rep.radius = radius == 0 ? best_ecc : std::min<std::size_t>(radius, best_ecc);
  rep.ball_sizes.assign(rep.radius + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    const std::uint32_t r = d(rep.center, v);
    if (r <= rep.radius) ++rep.ball_sizes[r];
  }
  for (std::size_t r = 1; r <= rep.radius; ++r) rep.ball_sizes[r] += rep.ball_sizes[r - 1];

  const std::vector<Cube> maximal = maximal_cubes(factor, dim_guard);
  auto orbit_count = [&](std::size_t r) {
    std::map<std::vector<VertexId>, std::size_t> inside;
    for (const auto& cube : maximal) {
      if (std::all_of(cube.vertices.begin(), cube.vertices.end(), [&](VertexId v) { return d(rep.center, v) <= r; })) {
        inside.emplace(cube.vertices, inside.size());
      }
    }
    UnionFind uf(inside.size());
    for (const auto& [verts, idx] : inside) {
      std::vector<VertexId> image;
      for (VertexId v : verts) {
        if (!shift.defined(v)) break;
        image.push_back(shift.map[v]);
      }
      if (image.size() != verts.size()) continue;
      std::sort(image.begin(), image.end());
      if (const auto it = inside.find(image); it != inside.end()) uf.unite(idx, it->second);
    }
    std::size_t roots = 0;
    for (std::size_t i = 0; i < inside.size(); ++i) roots += uf.find(i) == i;
    return roots;
  };
  rep.orbits_half = orbit_count(rep.radius / 2);
  rep.orbits_full = orbit_count(rep.radius);
  rep.bounded_orbits = rep.orbits_half == rep.orbits_full;

  std::size_t c = rep.ball_sizes[0];
  for (std::size_t r = 1; r <= rep.radius / 2; ++r) c = std::max(c, rep.ball_sizes[r] - rep.ball_sizes[r - 1]);
  rep.growth_constant = c;
  rep.linear_growth = true;
  for (std::size_t r = 0; r <= rep.radius; ++r) {
    if (rep.ball_sizes[r] > c * r + c) rep.linear_growth = false;
  }
  return rep;
}

}  // namespace cubix
