#pragma once

// Text formats.
//
// CAG (colored graph), line oriented, '#' starts a comment:
//
//   cag <vertices|edges> <n> <k> [vulnerable|resilient]
//   v <id> <color>*          vertex mode: exactly one line per vertex
//   e <u> <v> <color>*       colors required in edge mode, forbidden in vertex mode
//
// Plain edge list: one "u v" pair per line, '#' comments, n = max id + 1
// unless given explicitly.

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cap/graph.hpp"

namespace cap {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::uint64_t parse_uint(const Token& t, std::size_t line, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || value >= kNoVertex)
    throw ParseError(line, t.column, "expected " + std::string(what) + ", got '" + std::string(t.text) + "'");
  return value;
}

}  // namespace detail

inline ColoredGraph parse_graph(std::istream& in) {
  using detail::parse_uint;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  ColoringTarget target = ColoringTarget::edges;
  MultiColorMode mode = MultiColorMode::vulnerable;
  Vertex n = 0;
  ColorId k = 0;
  std::vector<ColorSet> vertex_colors;
  std::vector<bool> seen;
  std::vector<Edge> edges;

  auto read_colors = [&](const std::vector<detail::Token>& toks, std::size_t from) {
    std::vector<ColorId> colors;
    for (auto i = from; i < toks.size(); ++i) {
      auto c = parse_uint(toks[i], line_no, "color id");
      if (c >= k)
        throw ParseError(line_no, toks[i].column,
                         "color " + std::to_string(c) + " out of range (palette size " + std::to_string(k) + ")");
      colors.push_back(static_cast<ColorId>(c));
    }
    return ColorSet(std::move(colors));
  };
  auto read_vertex = [&](const detail::Token& t) {
    auto v = parse_uint(t, line_no, "vertex id");
    if (v >= n) throw ParseError(line_no, t.column, "vertex " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")");
    return static_cast<Vertex>(v);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = detail::tokenize(raw);
    if (toks.empty()) continue;

    if (!have_header) {
      if (toks[0].text != "cag") throw ParseError(line_no, toks[0].column, "expected 'cag' header");
      if (toks.size() < 4 || toks.size() > 5)
        throw ParseError(line_no, toks[0].column, "header must be: cag <vertices|edges> <n> <k> [vulnerable|resilient]");
      if (toks[1].text == "vertices") target = ColoringTarget::vertices;
      else if (toks[1].text == "edges") target = ColoringTarget::edges;
      else throw ParseError(line_no, toks[1].column, "coloring target must be 'vertices' or 'edges'");
      n = static_cast<Vertex>(parse_uint(toks[2], line_no, "vertex count"));
      k = static_cast<ColorId>(parse_uint(toks[3], line_no, "palette size"));
      if (toks.size() == 5) {
        if (target == ColoringTarget::edges)
          throw ParseError(line_no, toks[4].column, "multi-color mode only applies to vertex-colored graphs");
        if (toks[4].text == "vulnerable") mode = MultiColorMode::vulnerable;
        else if (toks[4].text == "resilient") mode = MultiColorMode::resilient;
        else throw ParseError(line_no, toks[4].column, "mode must be 'vulnerable' or 'resilient'");
      }
      vertex_colors.assign(n, ColorSet{});
      seen.assign(n, false);
      have_header = true;
      continue;
    }

    if (toks[0].text == "v") {
      if (target != ColoringTarget::vertices)
        throw ParseError(line_no, toks[0].column, "vertex lines are only allowed in vertex-colored graphs");
      if (toks.size() < 2) throw ParseError(line_no, toks[0].column, "vertex line needs an id");
      auto v = read_vertex(toks[1]);
      if (seen[v]) throw ParseError(line_no, toks[1].column, "vertex " + std::to_string(v) + " declared twice");
      seen[v] = true;
      vertex_colors[v] = read_colors(toks, 2);
    } else if (toks[0].text == "e") {
      if (toks.size() < 3) throw ParseError(line_no, toks[0].column, "edge line needs two endpoints");
      auto u = read_vertex(toks[1]);
      auto v = read_vertex(toks[2]);
      if (u == v) throw ParseError(line_no, toks[2].column, "self-loop on vertex " + std::to_string(u));
      if (target == ColoringTarget::vertices && toks.size() > 3)
        throw ParseError(line_no, toks[3].column, "edge colors are not allowed in a vertex-colored graph");
      if (target == ColoringTarget::edges && toks.size() == 3)
        throw ParseError(line_no, toks[0].column, "edge needs at least one color in an edge-colored graph");
      edges.push_back({u, v, read_colors(toks, 3)});
    } else {
      throw ParseError(line_no, toks[0].column, "unknown record '" + std::string(toks[0].text) + "'");
    }
  }

  if (!have_header) throw ParseError(line_no + 1, 1, "missing 'cag' header");
  if (target == ColoringTarget::vertices)
    for (Vertex v = 0; v < n; ++v)
      if (!seen[v]) throw ParseError(line_no + 1, 1, "vertex " + std::to_string(v) + " has no 'v' line");

  return ColoredGraph(target, n, k, std::move(vertex_colors), std::move(edges), mode);
}

inline ColoredGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline void serialize_graph(const ColoredGraph& g, std::ostream& out) {
  out << "cag " << to_string(g.target()) << ' ' << g.vertex_count() << ' ' << g.palette_size();
  if (g.target() == ColoringTarget::vertices) out << ' ' << to_string(g.mode());
  out << '\n';
  if (g.target() == ColoringTarget::vertices) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      out << "v " << v;
      for (auto c : g.colors(v)) out << ' ' << c;
      out << '\n';
    }
  }
  for (const auto& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v;
    for (auto c : e.colors) out << ' ' << c;
    out << '\n';
  }
}

inline std::string serialize_graph(const ColoredGraph& g) {
  std::ostringstream out;
  serialize_graph(g, out);
  return out.str();
}

inline std::string to_dot(const ColoredGraph& g) {
  auto join = [](const ColorSet& cs) {
    std::string s;
    for (auto c : cs) {
      if (!s.empty()) s += ',';
      s += std::to_string(c);
    }
    return s;
  };
  std::ostringstream out;
  out << "graph cag {\n";
  out << "  // " << to_string(g.target()) << "-colored, palette size " << g.palette_size() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (g.target() == ColoringTarget::vertices) out << "\\n{" << join(g.colors(v)) << "}\", colors=\"" << join(g.colors(v));
    out << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (g.target() == ColoringTarget::edges) out << " [label=\"" << join(e.colors) << "\", colors=\"" << join(e.colors) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

// Reads "u v" pairs. Vertex count is max id + 1, or `n` when given (which
// must cover every id).
inline PairwiseGraph parse_edge_list(std::istream& in, std::optional<Vertex> n = std::nullopt) {
  std::string raw;
  std::size_t line_no = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex count = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = detail::tokenize(raw);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected 'u v'");
    auto u = static_cast<Vertex>(detail::parse_uint(toks[0], line_no, "vertex id"));
    auto v = static_cast<Vertex>(detail::parse_uint(toks[1], line_no, "vertex id"));
    if (u == v) throw ParseError(line_no, toks[1].column, "self-loop on vertex " + std::to_string(u));
    count = std::max({count, u + 1, v + 1});
    edges.emplace_back(u, v);
  }
  if (n) {
    if (*n < count) throw ValidationError("edge list mentions vertex " + std::to_string(count - 1) + " but n = " + std::to_string(*n));
    count = *n;
  }
  return PairwiseGraph::from_edges(count, edges);
}

inline PairwiseGraph parse_edge_list(std::string_view text, std::optional<Vertex> n = std::nullopt) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, n);
}

}  // namespace cap
