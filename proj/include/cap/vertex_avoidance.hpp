#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cap/detail/parallel.hpp"
#include "cap/detail/union_find.hpp"
#include "cap/graph.hpp"

namespace cap {

// Whether an attack on color c removes vertex v. In resilient mode a vertex
// with two or more colors is never removed; a vertex with no color never is.
inline bool removed_by(const ColoredGraph& g, Vertex v, ColorId c) {
  const auto& cs = g.colors(v);
  if (g.mode() == MultiColorMode::resilient && cs.size() >= 2) return false;
  return cs.contains(c);
}

// Components of the subgraph induced by the vertices that survive an attack
// on color c. Removed vertices are outside the partition's domain.
inline Partition vertex_surviving_partition(const ColoredGraph& g, ColorId c) {
  g.require_target(ColoringTarget::vertices);
  if (c >= g.palette_size()) throw ValidationError("color " + std::to_string(c) + " outside palette");
  const Vertex n = g.vertex_count();
  std::vector<bool> alive(n);
  for (Vertex v = 0; v < n; ++v) alive[v] = !removed_by(g, v, c);
  detail::UnionFind uf(n);
  for (const auto& e : g.edges())
    if (alive[e.u] && alive[e.v]) uf.unite(e.u, e.v);
  auto labels = uf.roots();
  for (Vertex v = 0; v < n; ++v)
    if (!alive[v]) labels[v] = kNoVertex;
  return Partition(std::move(labels));
}

namespace detail {

inline void check_pair(const ColoredGraph& g, Vertex u, Vertex v, ColorId c) {
  g.require_target(ColoringTarget::vertices);
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw ValidationError("pairwise queries need two distinct vertices");
  if (c >= g.palette_size()) throw ValidationError("color " + std::to_string(c) + " outside palette");
}

// Blocks of `p` that x can step into: its own block when it survives,
// otherwise the blocks of its surviving neighbors.
inline std::vector<Vertex> reachable_blocks(const ColoredGraph& g, const Partition& p, Vertex x) {
  if (p.contains(x)) return {p.block_of(x)};
  std::vector<Vertex> out;
  for (auto y : g.neighbors(x))
    if (p.contains(y)) out.push_back(p.block_of(y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// u and v are joined by a path none of whose internal vertices is removed by
// an attack on c. A direct edge has no internal vertices.
inline bool strongly_avoiding(const ColoredGraph& g, Vertex u, Vertex v, ColorId c) {
  detail::check_pair(g, u, v, c);
  if (g.adjacent(u, v)) return true;
  const auto p = vertex_surviving_partition(g, c);
  auto a = detail::reachable_blocks(g, p, u);
  auto b = detail::reachable_blocks(g, p, v);
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return !common.empty();
}

// After removing the vertices hit by c, u or v is gone or both sit in one
// component. Vertices in different components of G are never related.
inline bool weakly_avoiding(const ColoredGraph& g, Vertex u, Vertex v, ColorId c) {
  detail::check_pair(g, u, v, c);
  if (g.component(u) != g.component(v)) return false;
  if (removed_by(g, u, c) || removed_by(g, v, c)) return true;
  return vertex_surviving_partition(g, c).same_block(u, v);
}

namespace detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

inline std::vector<Bits> component_rows(const ColoredGraph& g) {
  const Vertex n = g.vertex_count();
  std::vector<Bits> by_label(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& b = by_label[g.component(v)];
    if (b.empty()) b.resize(n);
    b.set(v);
  }
  std::vector<Bits> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = by_label[g.component(v)];
  return rows;
}

inline PairwiseGraph rows_to_graph(std::vector<Bits>& rows) {
  const auto n = rows.size();
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    rows[u].reset(u);
    for (auto v = rows[u].find_first(); v != Bits::npos; v = rows[u].find_next(v))
      adj[u].push_back(static_cast<Vertex>(v));
  }
  return PairwiseGraph::from_adjacency(std::move(adj));
}

inline std::vector<Partition> all_vertex_partitions(const ColoredGraph& g, ExecutionOptions exec) {
  std::vector<Partition> parts(g.palette_size());
  parallel_for(parts.size(), exec.threads,
               [&](std::size_t c) { parts[c] = vertex_surviving_partition(g, static_cast<ColorId>(c)); });
  return parts;
}

}  // namespace detail

// Pairwise graph of strong color-avoiding connectivity: uv is an edge iff
// strongly_avoiding(g, u, v, c) holds for every color.
inline PairwiseGraph strong_pairwise_graph(const ColoredGraph& g, ExecutionOptions exec = {}) {
  using detail::Bits;
  g.require_target(ColoringTarget::vertices);
  const Vertex n = g.vertex_count();
  const ColorId k = g.palette_size();
  const auto parts = detail::all_vertex_partitions(g, exec);

  // per color: reachable blocks of every vertex, and for each block the set
  // of vertices that reach it
  std::vector<std::vector<std::vector<Vertex>>> reach(k, std::vector<std::vector<Vertex>>(n));
  std::vector<std::vector<Bits>> reached_by(k, std::vector<Bits>(n));
  detail::parallel_for(k, exec.threads, [&](std::size_t c) {
    for (Vertex x = 0; x < n; ++x) {
      reach[c][x] = detail::reachable_blocks(g, parts[c], x);
      for (auto b : reach[c][x]) {
        auto& bits = reached_by[c][b];
        if (bits.empty()) bits.resize(n);
        bits.set(x);
      }
    }
  });

  auto rows = detail::component_rows(g);
  detail::parallel_for(n, exec.threads, [&](std::size_t x) {
    Bits adjacent(n);
    for (auto y : g.neighbors(static_cast<Vertex>(x))) adjacent.set(y);
    for (ColorId c = 0; c < k; ++c) {
      Bits ok = adjacent;
      for (auto b : reach[c][x]) ok |= reached_by[c][b];
      rows[x] &= ok;
    }
  });
  return detail::rows_to_graph(rows);
}

// Pairwise graph of weak color-avoiding connectivity: uv is an edge iff
// weakly_avoiding(g, u, v, c) holds for every color.
inline PairwiseGraph weak_pairwise_graph(const ColoredGraph& g, ExecutionOptions exec = {}) {
  using detail::Bits;
  g.require_target(ColoringTarget::vertices);
  const Vertex n = g.vertex_count();
  const ColorId k = g.palette_size();
  const auto parts = detail::all_vertex_partitions(g, exec);

  std::vector<Bits> removed(k, Bits(n));
  std::vector<std::vector<Bits>> block_bits(k, std::vector<Bits>(n));
  detail::parallel_for(k, exec.threads, [&](std::size_t c) {
    for (Vertex x = 0; x < n; ++x) {
      if (!parts[c].contains(x)) {
        removed[c].set(x);
        continue;
      }
      auto& bits = block_bits[c][parts[c].block_of(x)];
      if (bits.empty()) bits.resize(n);
      bits.set(x);
    }
  });

  auto rows = detail::component_rows(g);
  detail::parallel_for(n, exec.threads, [&](std::size_t x) {
    for (ColorId c = 0; c < k; ++c) {
      if (removed[c].test(x)) continue;
      rows[x] &= block_bits[c][parts[c].block_of(static_cast<Vertex>(x))] | removed[c];
    }
  });
  return detail::rows_to_graph(rows);
}

}  // namespace cap
