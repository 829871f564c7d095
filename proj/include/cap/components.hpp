#pragma once

#include "cap/chordal.hpp"
#include "cap/clique_enum.hpp"
#include "cap/vertex_avoidance.hpp"

namespace cap {

// Weakly color-avoiding connected components in polynomial time. The weak
// pairwise graph is locally chordal whenever every vertex has at most one
// color or multi-colored vertices are resilient; the enumeration verifies
// this and throws LocalChordalityViolation otherwise.
//
// List colors in vulnerable mode make the problem NP-hard and are rejected
// here; use weak_list_components.
inline CliqueList weak_components(const ColoredGraph& g, ExecutionOptions exec = {}) {
  g.require_target(ColoringTarget::vertices);
  if (g.mode() == MultiColorMode::vulnerable)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.colors(v).size() >= 2)
        throw ValidationError("vertex " + std::to_string(v) +
                              " carries a color list in vulnerable mode; use the weak-lists variant");
  return maximal_cliques_locally_chordal(weak_pairwise_graph(g, exec), exec);
}

// Strongly color-avoiding connected components (NP-hard in general).
inline CliqueList strong_components(const ColoredGraph& g, SearchBudget& budget, ExecutionOptions exec = {}) {
  return maximal_cliques_general(strong_pairwise_graph(g, exec), budget);
}

inline CliqueList strong_components(const ColoredGraph& g) {
  SearchBudget budget;
  return strong_components(g, budget);
}

// Weak components for arbitrary color lists (NP-hard in vulnerable mode).
inline CliqueList weak_list_components(const ColoredGraph& g, SearchBudget& budget, ExecutionOptions exec = {}) {
  return maximal_cliques_general(weak_pairwise_graph(g, exec), budget);
}

inline CliqueList weak_list_components(const ColoredGraph& g) {
  SearchBudget budget;
  return weak_list_components(g, budget);
}

// Decision form: is there a component with at least l vertices?
inline bool has_component_at_least(const CliqueList& components, std::size_t l) {
  if (l < 1) throw ValidationError("size threshold must be at least 1");
  return components.largest() >= l;
}

}  // namespace cap
