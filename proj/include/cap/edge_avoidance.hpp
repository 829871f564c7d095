#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cap/detail/parallel.hpp"
#include "cap/detail/union_find.hpp"
#include "cap/graph.hpp"

namespace cap {

// Components of the graph that keeps exactly the edges whose color set does
// not contain `c`. Covers single colors, parallel edges and color lists.
inline Partition edge_surviving_partition(const ColoredGraph& g, ColorId c) {
  g.require_target(ColoringTarget::edges);
  if (c >= g.palette_size()) throw ValidationError("color " + std::to_string(c) + " outside palette");
  detail::UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges())
    if (!e.colors.contains(c)) uf.unite(e.u, e.v);
  return Partition(uf.roots());
}

inline bool is_edge_cac(const ColoredGraph& g, Vertex u, Vertex v) {
  g.require_target(ColoringTarget::edges);
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return true;
  if (g.component(u) != g.component(v)) return false;
  for (ColorId c = 0; c < g.palette_size(); ++c)
    if (!edge_surviving_partition(g, c).same_block(u, v)) return false;
  return true;
}

// Color-avoiding edge-connected components: two vertices share a block iff
// they share a block of every per-color surviving partition. The relation
// is an equivalence, so the common refinement is the answer; no pairwise
// graph is materialized.
//
// Blocks are additionally refined by the plain components of G, which only
// matters for an empty palette.
inline Partition edge_cac_components(const ColoredGraph& g, ExecutionOptions exec = {}) {
  g.require_target(ColoringTarget::edges);
  const Vertex n = g.vertex_count();
  const ColorId k = g.palette_size();

  std::vector<std::vector<Vertex>> per_color(k);
  detail::parallel_for(k, exec.threads, [&](std::size_t c) {
    per_color[c] = edge_surviving_partition(g, static_cast<ColorId>(c)).labels();
  });

  // class ids stay in [0, n): pairs (class, label) are renumbered after
  // every color
  std::vector<Vertex> cls(n);
  for (Vertex v = 0; v < n; ++v) cls[v] = g.component(v);
  std::unordered_map<std::uint64_t, Vertex> ids;
  ids.reserve(n);
  for (ColorId c = 0; c < k; ++c) {
    ids.clear();
    for (Vertex v = 0; v < n; ++v) {
      const auto key = (static_cast<std::uint64_t>(cls[v]) << 32) | per_color[c][v];
      cls[v] = ids.try_emplace(key, static_cast<Vertex>(ids.size())).first->second;
    }
  }
  return Partition(std::move(cls));
}

inline bool largest_edge_cac_at_least(const ColoredGraph& g, std::size_t l) {
  if (l < 1) throw ValidationError("size threshold must be at least 1");
  return edge_cac_components(g).largest_block() >= l;
}

}  // namespace cap
