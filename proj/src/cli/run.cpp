#include "cubix/cli/run.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cubix/actions.hpp"
#include "cubix/axis.hpp"
#include "cubix/dual.hpp"
#include "cubix/error.hpp"
#include "cubix/fixtures.hpp"
#include "cubix/io/dot.hpp"
#include "cubix/io/formats.hpp"

#ifndef CUBIX_VERSION
#define CUBIX_VERSION "0.0.0"
#endif

namespace cubix::cli {
namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::uint64_t parse_number(const std::string& option, const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("--" + option + " expects a non-negative integer, got '" + text + "'");
  }
  return v;
}

Json names_of(const CubicalComplex& c, const std::vector<VertexId>& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(c.name(v));
  return out;
}

class Context {
 public:
  explicit Context(const Manifest& m) : m_(m) {
    report_.version = CUBIX_VERSION;
    report_.verb = m.command;
  }

  Report& report() { return report_; }

  bool has_input(const std::string& role) const { return m_.inputs.count(role) > 0; }
  bool has_option(const std::string& name) const { return m_.options.count(name) > 0; }

  std::string input(const std::string& role) {
    const auto it = m_.inputs.find(role);
    if (it == m_.inputs.end()) throw UsageError(m_.command + " needs --" + role);
    std::string text = read_file(it->second);
    report_.inputs.emplace_back(role, sha256_hex(text));
    return text;
  }

  std::string option(const std::string& name) const {
    const auto it = m_.options.find(name);
    if (it == m_.options.end()) throw UsageError(m_.command + " needs --" + name);
    return it->second;
  }

  std::uint64_t number(const std::string& name, std::uint64_t fallback) const {
    return has_option(name) ? parse_number(name, option(name)) : fallback;
  }

  Wallspace wallspace() {
    if (!ws_) ws_ = io::parse_wallspace(input("wallspace"));
    return *ws_;
  }

  const io::ComplexFile& complex_file() {
    if (!cf_) {
      io::ComplexFile f = io::parse_complex(input("complex"));
      f.complex = certify(std::move(f.complex));
      cf_ = std::move(f);
    }
    return *cf_;
  }

  const CubicalComplex& complex() { return complex_file().complex; }

  ActionWindow window() {
    const auto& f = complex_file();
    std::vector<Automorphism> gens = io::parse_action(input("action"), f.complex);
    return ActionWindow{f.complex, f.interior ? *f.interior : Bitset::full(f.complex.size()), std::move(gens)};
  }

  Bitset vertex_subset(const CubicalComplex& c, const std::string& option_name) const {
    Bitset out(c.size());
    for (const auto& name : split_list(option(option_name))) {
      const auto v = c.find(name);
      if (!v) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
      out.set(*v);
    }
    return out;
  }

  void payload(std::string name, std::string content) { report_.payloads.push_back({std::move(name), std::move(content)}); }

  void dot(const std::string& stem, const CubicalComplex& c, const HyperplaneSystem* sys,
           std::span<const VertexId> path = {}) {
    if (m_.dot) payload(stem + ".dot", io::to_dot(c, sys, path));
  }

 private:
  const Manifest& m_;
  Report report_;
  std::optional<Wallspace> ws_;
  std::optional<io::ComplexFile> cf_;
};

bool distance_identity(const CubicalComplex& c, const HyperplaneSystem& sys) {
  const DistanceMatrix d(c);
  for (VertexId x = 0; x < c.size(); ++x) {
    for (VertexId y = x + 1; y < c.size(); ++y) {
      if (d(x, y) != sys.separating(x, y).size()) return false;
    }
  }
  return true;
}

void verb_validate(Context& ctx) {
  Report& r = ctx.report();
  bool any = false;
  if (ctx.has_input("wallspace")) {
    any = true;
    const Wallspace ws = ctx.wallspace();
    r.data["points"] = ws.point_count();
    r.data["walls"] = ws.wall_count();
    r.data["crossing_classes"] = crossing_classes(ws).size();
    r.verdict("wallspace", true);
  }
  if (ctx.has_input("complex")) {
    any = true;
    const CubicalComplex& c = ctx.complex();
    r.data["vertices"] = c.size();
    r.data["edges"] = c.edge_count();
    const bool median = c.median_state() == MedianState::Verified;
    if (const auto& w = c.median_witness()) {
      r.data["median_witness"] = {c.name(w->x), c.name(w->y), c.name(w->z), w->median_count};
    }
    r.verdict("median", median);
  }
  if (ctx.has_input("action")) {
    const ActionWindow win = ctx.window();
    const ActionReport rep = validate_action(win);
    Json cov = Json::array();
    for (const auto& g : rep.coverage) {
      cov.push_back({{"generator", g.generator}, {"edges_checked", g.edges_checked}, {"edges_total", g.edges_total}});
    }
    r.data["coverage"] = cov;
    r.data["all_total"] = rep.all_total;
    r.verdict("action", true);
  }
  if (!any) throw UsageError("validate needs --wallspace or --complex");
}

void verb_dual(Context& ctx) {
  const Wallspace ws = ctx.wallspace();
  const DualComplex d = dual_complex(ws);
  Report& r = ctx.report();
  r.data["zero_cubes"] = d.zero_cubes.size();
  r.data["edges"] = d.complex.edge_count();
  r.data["hyperplanes"] = d.wall_to_hyperplane.size();
  r.verdict("median", d.complex.median_state() == MedianState::Verified);
  if (ws.wall_count() <= 16) {
    r.verdict("oracle_match", enumerate_zero_cubes_bruteforce(ws, 1U << 16) == d.zero_cubes);
  }
  ctx.payload("dual.complex.txt", io::write_complex(d.complex));
  ctx.payload("dual.table.txt", io::write_dual_table(d));
  if (ctx.report().verb == "dual") {
    const HyperplaneSystem sys = hyperplanes(d.complex);
    ctx.dot("dual", d.complex, &sys);
  }
}

void verb_hyperplanes(Context& ctx) {
  const CubicalComplex& c = ctx.complex();
  require_median(c);
  const HyperplaneSystem sys = hyperplanes(c);
  Report& r = ctx.report();
  Json planes = Json::array();
  for (const auto& h : sys.planes) {
    planes.push_back({{"id", h.id},
                      {"dual_edges", h.dual_edges.size()},
                      {"left", h.left.count()},
                      {"right", h.right.count()},
                      {"carrier", h.carrier.count()}});
  }
  r.data["count"] = sys.planes.size();
  r.data["hyperplanes"] = planes;
  const Wallspace ws = hyperplane_wallspace(c);
  r.data["crossing_classes"] = crossing_classes(ws);
  r.verdict("distance_identity", distance_identity(c, sys));
  ctx.payload("hyperplanes.wallspace.txt", io::write_wallspace(ws));
  ctx.dot("hyperplanes", c, &sys);
}

void verb_distance(Context& ctx) {
  const CubicalComplex& c = ctx.complex();
  require_median(c);
  const VertexId x = c.index_of(ctx.option("from"));
  const VertexId y = c.index_of(ctx.option("to"));
  const HyperplaneSystem sys = hyperplanes(c);
  const auto seps = sys.separating(x, y);
  Report& r = ctx.report();
  const std::size_t d = dist_c(c, x, y);
  r.data["distance"] = d;
  r.data["separating"] = seps;
  r.verdict("distance_identity", d == seps.size());
}

void verb_restrict(Context& ctx) {
  const Wallspace ws = ctx.wallspace();
  Bitset subset(ws.point_count());
  for (const auto& name : split_list(ctx.option("subset"))) subset.set(ws.point_index(name));
  const Restriction res = restrict(ws, subset);
  Report& r = ctx.report();
  r.data["points"] = res.wallspace.point_count();
  r.data["walls"] = res.wallspace.wall_count();
  Json map = Json::array();
  for (const auto& entry : res.wall_map) {
    map.push_back(entry ? Json{{"id", entry->id}, {"flipped", entry->flipped}} : Json());
  }
  r.data["wall_map"] = map;
  Json merges = Json::array();
  for (const auto& m : res.merges) merges.push_back({m.kept, m.merged});
  r.data["merges"] = merges;
  ctx.payload("restricted.wallspace.txt", io::write_wallspace(res.wallspace));
}

std::vector<WallId> wall_ids(const Context& ctx) {
  std::vector<WallId> out;
  for (const auto& tok : split_list(ctx.option("walls"))) {
    out.push_back(static_cast<WallId>(parse_number("walls", tok)));
  }
  return out;
}

void verb_quotient(Context& ctx) {
  const Wallspace ws = ctx.wallspace();
  const std::vector<WallId> v = normalize_wall_subset(ws, wall_ids(ctx));
  const Wallspace sub = sub_wallspace(ws, v);
  const DualComplex q = dual_complex(sub);
  const DualComplex full = dual_complex(ws);
  Report& r = ctx.report();
  r.data["walls"] = v;
  r.data["zero_cubes"] = q.zero_cubes.size();
  std::vector<std::size_t> fibers(q.zero_cubes.size(), 0);
  for (const auto& c : full.zero_cubes) ++fibers[*q.vertex_of(restriction_quotient(ws, v, c))];
  r.data["fiber_sizes"] = fibers;
  bool section = true;
  for (const auto& z : q.zero_cubes) {
    for (PointId s = 0; s < ws.point_count(); ++s) {
      section = section && restriction_quotient(ws, v, lift_zero_cube(ws, v, z, s)) == z;
    }
  }
  r.verdict("lift_section", section);
  r.verdict("surjective", std::all_of(fibers.begin(), fibers.end(), [](std::size_t f) { return f > 0; }));
  ctx.payload("quotient.complex.txt", io::write_complex(q.complex));
  ctx.payload("quotient.table.txt", io::write_dual_table(q));
}

void verb_embed(Context& ctx) {
  const CubicalComplex& c = ctx.complex();
  const Bitset subset = ctx.vertex_subset(c, "subset");
  const RestrictedEmbedding e = embed_restricted_dual(c, subset);
  Report& r = ctx.report();
  r.data["sub_dual_vertices"] = e.sub_dual.complex.size();
  r.data["merges"] = e.restriction.merges.size();
  r.data["images"] = names_of(c, e.into_complex);
  if (e.verdict.witness) {
    r.data["witness"] = {e.sub_dual.complex.name(e.verdict.witness->first),
                         e.sub_dual.complex.name(e.verdict.witness->second)};
  }
  r.verdict("isometric", e.verdict.isometric);
  ctx.payload("subdual.complex.txt", io::write_complex(e.sub_dual.complex));
}

ActionWindow restrict_window(const ActionWindow& win, const Bitset& keep) {
  Subcomplex sub = induced_subcomplex(win.complex, keep);
  std::vector<VertexId> local(win.complex.size(), kNoVertex);
  for (VertexId i = 0; i < sub.to_parent.size(); ++i) local[sub.to_parent[i]] = i;
  std::vector<Automorphism> gens;
  for (const auto& g : win.generators) {
    Automorphism h{g.name, std::vector<VertexId>(sub.to_parent.size(), kNoVertex)};
    for (VertexId i = 0; i < sub.to_parent.size(); ++i) {
      if (g.defined(sub.to_parent[i])) h.map[i] = local[g.map[sub.to_parent[i]]];
    }
    gens.push_back(std::move(h));
  }
  const std::size_t n = sub.to_parent.size();
  return ActionWindow{certify(std::move(sub.complex)), Bitset::full(n), std::move(gens)};
}

void verb_minimize(Context& ctx) {
  const ActionWindow win = ctx.window();
  const Minimization m = minimize_invariant_subcomplex(win);
  const CubicalComplex& c = win.complex;
  Report& r = ctx.report();
  r.data["orbits"] = m.orbits;
  Json log = Json::array();
  for (const auto& step : m.log) {
    Json entry{{"kind", step.kind == RemovalKind::Explicit ? "explicit" : "collateral"}, {"orbit", step.orbit}};
    if (step.kind == RemovalKind::Explicit) entry["sides"] = step.fixed_sides;
    entry["remaining"] = step.remaining;
    log.push_back(entry);
  }
  r.data["log"] = log;
  r.data["vertices"] = names_of(c, m.vertices.indices());

  bool invariant = true;
  for (const auto& g : win.generators) {
    m.vertices.for_each([&](std::uint32_t v) { invariant = invariant && m.vertices.test(g.map[v]); });
  }
  r.verdict("invariant", invariant);
  r.verdict("convex", is_convex(c, m.vertices).convex);
  r.verdict("fixed_point", minimize_invariant_subcomplex(restrict_window(win, m.vertices)).log.empty());
  Bitset interior = m.vertices;
  ctx.payload("minimal.complex.txt", io::write_complex(c, &interior));
}

void verb_decompose(Context& ctx) {
  const Wallspace ws = ctx.wallspace();
  std::optional<std::vector<std::vector<WallId>>> partition;
  if (ctx.has_input("partition")) partition = io::parse_partition(ctx.input("partition"));
  const ProductDecomposition p = product_decomposition(ws, partition);
  Report& r = ctx.report();
  r.data["factors"] = p.factors.size();
  Json classes = Json::array();
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    const auto& f = p.factors[i];
    Json entry{{"walls", f.walls}, {"vertices", f.dual.complex.size()}, {"edges", f.dual.complex.edge_count()}};
    if (f.walls.size() <= kCliqueGuard) entry["max_crossing"] = bounded_crossing_certificate(ws, f.walls).size;
    classes.push_back(entry);
    ctx.payload("factor" + std::to_string(i) + ".complex.txt", io::write_complex(f.dual.complex));
  }
  r.data["classes"] = classes;
  if (!p.certificate.witness.empty()) r.data["witness"] = p.certificate.witness;
  r.verdict("bijective", p.certificate.bijective);
  r.verdict("adjacency_preserved", p.certificate.adjacency_preserved);
  r.verdict("l1_additive", p.certificate.l1_additive);
}

void verb_subdivide(Context& ctx) {
  Report& r = ctx.report();
  if (ctx.has_input("action")) {
    const ActionWindow win = ctx.window();
    validate_action(win);
    const std::size_t max_length = ctx.number("max-length", kDefaultWordLength);
    r.data["inversions_before"] = detect_inversions(win, max_length).size();
    const ActionWindow sub = subdivide_action(win);
    r.data["vertices"] = sub.complex.size();
    r.data["inversions_after"] = detect_inversions(sub, max_length).size();
    r.verdict("median", sub.complex.median_state() == MedianState::Verified);
    r.verdict("no_inversions", r.data["inversions_after"] == 0);
    ctx.payload("subdivision.complex.txt", io::write_complex(sub.complex, &sub.interior));
    ctx.payload("subdivision.action.txt", io::write_action(sub.complex, sub.generators));
    return;
  }
  const CubicalComplex& c = ctx.complex();
  const CubicalComplex s = certify(cubical_subdivision(c).complex);
  r.data["vertices"] = s.size();
  r.verdict("median", s.median_state() == MedianState::Verified);
  ctx.payload("subdivision.complex.txt", io::write_complex(s));
}

void verb_axis(Context& ctx) {
  const ActionWindow win = ctx.window();
  const std::size_t gi = ctx.has_option("generator") ? win.generator_index(ctx.option("generator")) : 0;
  if (win.generators.empty()) throw UsageError("axis needs an action with at least one generator");
  const Automorphism& g = win.generators[gi];
  const CubicalComplex& c = win.complex;
  Report& r = ctx.report();
  r.data["generator"] = g.name;
  const AxisOutcome outcome = build_axis(win, gi);
  if (const auto* fixed = std::get_if<FixedZeroCube>(&outcome)) {
    r.data["outcome"] = "fixed";
    r.data["vertex"] = c.name(fixed->vertex);
    r.verdict("fixed", g.map[fixed->vertex] == fixed->vertex);
    return;
  }
  const auto& cert = std::get<AxisCertificate>(outcome);
  r.data["outcome"] = "axis";
  r.data["base"] = c.name(cert.base_vertex);
  r.data["tau"] = cert.translation_length;
  r.data["rule"] = cert.rule == PeriodRule::Nesting ? "nesting" : "least-geodesic";
  r.data["period"] = names_of(c, cert.period);
  r.data["hyperplane_order"] = cert.hyperplane_order;
  r.data["path"] = names_of(c, cert.full_path);
  std::optional<std::size_t> brute;
  for (VertexId x = 0; x < c.size(); ++x) {
    if (win.interior.test(x) && g.defined(x)) {
      const std::size_t d = displacement(win, g, x);
      brute = brute ? std::min(*brute, d) : d;
    }
  }
  r.verdict("consecutive_adjacent", cert.checks.consecutive_adjacent);
  r.verdict("geodesic", cert.checks.geodesic);
  r.verdict("single_crossing", cert.checks.single_crossing);
  r.verdict("g_invariant", cert.checks.g_invariant);
  r.verdict("optimal", brute && *brute == cert.translation_length);
  const HyperplaneSystem sys = hyperplanes(c);
  ctx.dot("axis", c, &sys, cert.full_path);
}

void verb_fixture(Context& ctx) {
  fixtures::FixtureSpec spec;
  spec.kind = fixtures::parse_fixture_kind(ctx.option("kind"));
  if (ctx.has_option("params")) {
    for (const auto& tok : split_list(ctx.option("params"))) spec.params.push_back(parse_number("params", tok));
  }
  spec.seed = ctx.number("seed", 0);
  const fixtures::Fixture f = fixtures::make_fixture(spec);
  Report& r = ctx.report();
  r.data["kind"] = fixtures::to_string(spec.kind);
  r.data["params"] = spec.params;
  r.data["seed"] = spec.seed;
  if (f.torus) r.data["cube_counts"] = f.torus->cube_counts;
  const CubicalComplex* complex = f.window ? &f.window->complex : (f.complex ? &*f.complex : nullptr);
  if (complex) {
    r.data["vertices"] = complex->size();
    r.data["edges"] = complex->edge_count();
    r.verdict("median", complex->median_state() == MedianState::Verified);
    ctx.payload("complex.txt", io::write_complex(*complex, f.window ? &f.window->interior : nullptr));
    if (f.window) {
      validate_action(*f.window);
      ctx.payload("action.txt", io::write_action(*complex, f.window->generators));
    }
    ctx.payload("wallspace.txt", io::write_wallspace(hyperplane_wallspace(*complex)));
    ctx.dot("complex", *complex, nullptr);
  }
  if (f.wallspace) {
    r.data["points"] = f.wallspace->point_count();
    r.data["walls"] = f.wallspace->wall_count();
    ctx.payload("wallspace.txt", io::write_wallspace(*f.wallspace));
  }
}

using VerbFn = void (*)(Context&);

const std::map<std::string, VerbFn>& verb_table() {
  static const std::map<std::string, VerbFn> table{
      {"validate", verb_validate}, {"dual", verb_dual},         {"hyperplanes", verb_hyperplanes},
      {"distance", verb_distance}, {"restrict", verb_restrict}, {"quotient", verb_quotient},
      {"embed", verb_embed},       {"minimize", verb_minimize}, {"decompose", verb_decompose},
      {"subdivide", verb_subdivide}, {"axis", verb_axis},       {"fixture", verb_fixture}};
  return table;
}

ExitCode exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return ExitCode::Parse;
    case ErrorCode::VerbUnknown: return ExitCode::Usage;
    case ErrorCode::GuardExceeded:
    case ErrorCode::LimitExceeded:
    case ErrorCode::DimLimitExceeded: return ExitCode::Guard;
    case ErrorCode::Io: return ExitCode::Io;
    default: return ExitCode::Domain;
  }
}

void write_atomically(const fs::path& dir, const std::string& name, const std::string& content) {
  const fs::path target = dir / name;
  const fs::path tmp = dir / ("." + name + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot rename into " + target.string() + ": " + ec.message());
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : verb_table()) v.push_back(name);
    return v;
  }();
  return names;
}

Report execute(const Manifest& manifest) {
  const auto it = verb_table().find(manifest.command);
  if (it == verb_table().end()) throw Error(ErrorCode::VerbUnknown, "unknown verb '" + manifest.command + "'");
  Context ctx(manifest);
  it->second(ctx);
  return std::move(ctx.report());
}

int run(const Manifest& manifest, std::ostream& out, std::ostream& err) {
  try {
    const Report report = execute(manifest);
    if (manifest.output) {
      const fs::path dir(*manifest.output);
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
      for (const auto& p : report.payloads) write_atomically(dir, p.name, p.content);
      write_atomically(dir, "report.json", report.to_json());
      write_atomically(dir, "report.txt", report.to_text());
      out << report.to_text();
    } else {
      out << report.to_text();
      for (const auto& p : report.payloads) out << "== " << p.name << " ==\n" << p.content;
    }
    return static_cast<int>(report.passed() ? ExitCode::Ok : ExitCode::VerdictFailed);
  } catch (const UsageError& e) {
    err << "cubix: usage: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Usage);
  } catch (const Error& e) {
    err << "cubix: error: " << e.what() << "\n";
    return static_cast<int>(exit_for(e.code()));
  } catch (const std::exception& e) {
    err << "cubix: internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Internal);
  }
}

}  // namespace cubix::cli
