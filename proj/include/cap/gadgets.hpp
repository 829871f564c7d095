#pragma once

#include <vector>

#include "cap/graph.hpp"

namespace cap {

namespace detail {

inline ColoredGraph pair_color_gadget(const PairwiseGraph& h, bool skip_adjacent_pairs) {
  const Vertex n = h.vertex_count();
  if (n < 2) throw ValidationError("gadget source needs at least two vertices");
  std::vector<std::vector<ColorId>> lists(n);
  ColorId next = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (skip_adjacent_pairs && h.has_edge(a, b)) continue;
      const ColorId c = next++;
      for (Vertex w = 0; w < n; ++w)
        if (w != a && w != b) lists[w].push_back(c);
    }
  std::vector<ColorSet> colors;
  colors.reserve(n);
  for (auto& l : lists) colors.emplace_back(std::move(l));
  return ColoredGraph::vertex_colored(next, std::move(colors), h.edges(), MultiColorMode::vulnerable);
}

}  // namespace detail

// Clique reduction instance: same vertices and edges as h; one color per
// vertex pair {a, b} (numbered in lexicographic pair order), listed on every
// vertex except a and b. Under vulnerable list semantics two vertices are
// then weakly color-avoiding connected iff they are adjacent in h, so the
// weak list components are exactly the maximal cliques of h.
inline ColoredGraph clique_gadget(const PairwiseGraph& h) { return detail::pair_color_gadget(h, false); }

// Same construction restricted to nonadjacent pairs; adjacent pairs stay
// connected through their edge under every attack.
inline ColoredGraph clique_gadget_reduced(const PairwiseGraph& h) { return detail::pair_color_gadget(h, true); }

}  // namespace cap
