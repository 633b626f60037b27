#include "cubix/io/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "cubix/error.hpp"

namespace cubix::io {
namespace {

struct Line {
  std::size_t number = 0;
  std::size_t offset = 0;  // column of text[0], 1-based
  std::string_view text;   // trimmed, comment removed
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t b = 0;
    while (b < raw.size() && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    std::size_t e = raw.size();
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    if (e > b) out.push_back(Line{number, b + 1, raw.substr(b, e - b)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, std::size_t at, const std::string& message) {
  throw ParseError(line.number, line.offset + at, message);
}

void expect_header(const std::vector<Line>& lines, std::string_view kind) {
  const std::string header = "cubix " + std::string(kind) + " v1";
  if (lines.empty()) throw ParseError(1, 1, "missing header '" + header + "'");
  if (lines.front().text != header) fail(lines.front(), 0, "expected header '" + header + "'");
}

std::string name_at(const Line& line, std::size_t at, std::string_view token) {
  if (!valid_name(token)) fail(line, at, "invalid name '" + std::string(token) + "'");
  return std::string(token);
}

// Comma-separated names starting at column `at` of the line.
std::vector<std::pair<std::string, std::size_t>> names_at(const Line& line, std::size_t at, std::string_view list) {
  std::vector<std::pair<std::string, std::size_t>> out;
  if (list.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    std::string_view tok = list.substr(pos, comma - pos);
    std::size_t lead = 0;
    while (lead < tok.size() && tok[lead] == ' ') ++lead;
    tok.remove_prefix(lead);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    out.emplace_back(name_at(line, at + pos + lead, tok), at + pos + lead);
    if (comma == list.size()) break;
    pos = comma + 1;
  }
  return out;
}

std::optional<std::string_view> keyword(const Line& line, std::string_view key) {
  if (line.text.size() > key.size() && line.text.substr(0, key.size()) == key && line.text[key.size()] == ':') {
    std::string_view rest = line.text.substr(key.size() + 1);
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    return rest;
  }
  if (line.text == std::string(key) + ":") return std::string_view{};
  return std::nullopt;
}

std::size_t column_of(const Line& line, std::string_view part) {
  return static_cast<std::size_t>(part.data() - line.text.data());
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

bool valid_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '+' || ch == '.';
  });
}

Wallspace parse_wallspace(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "wallspace");
  if (lines.size() < 2) throw ParseError(lines.front().number + 1, 1, "missing 'points:' line");
  const Line& pl = lines[1];
  const auto plist = keyword(pl, "points");
  if (!plist) fail(pl, 0, "expected 'points:'");
  std::vector<std::string> points;
  for (auto& [name, col] : names_at(pl, column_of(pl, *plist), *plist)) points.push_back(name);

  std::vector<RawWall> walls;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto bar = l.text.find('|');
    if (bar == std::string_view::npos || l.text.find('|', bar + 1) != std::string_view::npos) {
      fail(l, 0, "a wall is written 'left|right'");
    }
    RawWall w;
    for (auto& [name, col] : names_at(l, 0, l.text.substr(0, bar))) w.left.push_back(name);
    for (auto& [name, col] : names_at(l, bar + 1, l.text.substr(bar + 1))) w.right.push_back(name);
    walls.push_back(std::move(w));
  }
  return Wallspace::create(std::move(points), walls);
}

std::string write_wallspace(const Wallspace& ws) {
  std::string out = "cubix wallspace v1\npoints: " + join(ws.points(), ',') + "\n";
  for (const auto& w : ws.walls()) {
    std::vector<std::string> l, r;
    w.left.for_each([&](std::uint32_t p) { l.push_back(ws.point_name(p)); });
    w.right.for_each([&](std::uint32_t p) { r.push_back(ws.point_name(p)); });
    out += join(l, ',') + "|" + join(r, ',') + "\n";
  }
  return out;
}

ComplexFile parse_complex(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "complex");
  if (lines.size() < 2) throw ParseError(lines.front().number + 1, 1, "missing 'vertices:' line");
  const Line& vl = lines[1];
  const auto vlist = keyword(vl, "vertices");
  if (!vlist) fail(vl, 0, "expected 'vertices:'");
  std::vector<std::string> vertices;
  for (auto& [name, col] : names_at(vl, column_of(vl, *vlist), *vlist)) vertices.push_back(name);

  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<std::vector<std::pair<std::string, std::size_t>>> interior;
  const Line* interior_line = nullptr;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (const auto ilist = keyword(l, "interior")) {
      if (interior) fail(l, 0, "second 'interior:' line");
      interior = names_at(l, column_of(l, *ilist), *ilist);
      interior_line = &l;
      continue;
    }
    if (interior) fail(l, 0, "'interior:' must be the last line");
    const auto dash = l.text.find('-');
    if (dash == std::string_view::npos) fail(l, 0, "an edge is written 'u-v'");
    edges.emplace_back(name_at(l, 0, l.text.substr(0, dash)), name_at(l, dash + 1, l.text.substr(dash + 1)));
  }
  ComplexFile out{CubicalComplex::from_edges(std::move(vertices), edges), std::nullopt};
  if (interior) {
    Bitset marks(out.complex.size());
    for (const auto& [name, col] : *interior) {
      const auto v = out.complex.find(name);
      if (!v) fail(*interior_line, col, "unknown vertex '" + name + "'");
      marks.set(*v);
    }
    out.interior = std::move(marks);
  }
  return out;
}

std::string write_complex(const CubicalComplex& complex, const Bitset* interior) {
  std::string out = "cubix complex v1\nvertices: " + join(complex.names(), ',') + "\n";
  for (const Edge& e : complex.edges()) out += complex.name(e.u) + "-" + complex.name(e.v) + "\n";
  if (interior) {
    std::vector<std::string> names;
    interior->for_each([&](std::uint32_t v) { names.push_back(complex.name(v)); });
    out += "interior: " + join(names, ',') + "\n";
  }
  return out;
}

std::vector<Automorphism> parse_action(std::string_view text, const CubicalComplex& complex) {
  const auto lines = split_lines(text);
  expect_header(lines, "action");
  std::vector<Automorphism> out;
  std::set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.text.substr(0, 10) == "generator ") {
      std::string_view name = l.text.substr(10);
      while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
      std::string n = name_at(l, column_of(l, name), name);
      if (!seen.insert(n).second) fail(l, column_of(l, name), "generator '" + n + "' defined twice");
      out.push_back(Automorphism{std::move(n), std::vector<VertexId>(complex.size(), kNoVertex)});
      continue;
    }
    if (out.empty()) fail(l, 0, "expected 'generator NAME'");
    const auto arrow = l.text.find("->");
    if (arrow == std::string_view::npos) fail(l, 0, "a mapping is written 'u->v'");
    const std::string from = name_at(l, 0, l.text.substr(0, arrow));
    const std::string to = name_at(l, arrow + 2, l.text.substr(arrow + 2));
    const auto u = complex.find(from);
    if (!u) fail(l, 0, "unknown vertex '" + from + "'");
    const auto v = complex.find(to);
    if (!v) fail(l, arrow + 2, "unknown vertex '" + to + "'");
    if (out.back().map[*u] != kNoVertex) fail(l, 0, "vertex '" + from + "' mapped twice");
    out.back().map[*u] = *v;
  }
  return out;
}

std::string write_action(const CubicalComplex& complex, const std::vector<Automorphism>& generators) {
  std::string out = "cubix action v1\n";
  for (const auto& g : generators) {
    out += "generator " + g.name + "\n";
    for (VertexId v = 0; v < g.map.size(); ++v) {
      if (g.defined(v)) out += complex.name(v) + "->" + complex.name(g.map[v]) + "\n";
    }
  }
  return out;
}

std::vector<std::vector<WallId>> parse_partition(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "partition");
  std::vector<std::vector<WallId>> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    std::vector<WallId> cls;
    std::size_t pos = 0;
    while (pos <= l.text.size()) {
      const std::size_t comma = std::min(l.text.find(',', pos), l.text.size());
      std::string_view tok = l.text.substr(pos, comma - pos);
      std::size_t lead = 0;
      while (lead < tok.size() && tok[lead] == ' ') ++lead;
      tok.remove_prefix(lead);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      WallId id = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        fail(l, pos + lead, "expected a wall id");
      }
      cls.push_back(id);
      if (comma == l.text.size()) break;
      pos = comma + 1;
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::string write_partition(const std::vector<std::vector<WallId>>& partition) {
  std::string out = "cubix partition v1\n";
  for (const auto& cls : partition) {
    std::vector<std::string> ids;
    for (WallId w : cls) ids.push_back(std::to_string(w));
    out += join(ids, ',') + "\n";
  }
  return out;
}

std::string write_dual_table(const DualComplex& dual) {
  std::string out = "cubix dual-table v1\n";
  for (VertexId v = 0; v < dual.zero_cubes.size(); ++v) {
    out += "vertex " + dual.complex.name(v) + " " + dual.zero_cubes[v].to_string() + "\n";
  }
  for (WallId w = 0; w < dual.wall_to_hyperplane.size(); ++w) {
    out += "wall " + std::to_string(w) + " hyperplane " + std::to_string(dual.wall_to_hyperplane[w]) + "\n";
  }
  return out;
}

}  // namespace cubix::io
