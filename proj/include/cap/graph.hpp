#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cap/detail/union_find.hpp"
#include "cap/types.hpp"

namespace cap {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  ColorSet colors;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A graph whose vertices or edges carry color sets. Parallel edges are kept
// as separate records: two parallel single-color edges survive any one-color
// attack, while one edge listing both colors survives neither.
//
// Immutable once constructed; every constructor validates the invariants and
// throws ValidationError on violation.
class ColoredGraph {
 public:
  ColoredGraph() : ColoredGraph(ColoringTarget::edges, 0, 0, {}, {}) {}

  ColoredGraph(ColoringTarget target, Vertex n, ColorId palette_size, std::vector<ColorSet> vertex_colors,
               std::vector<Edge> edges, MultiColorMode mode = MultiColorMode::vulnerable)
      : target_(target),
        mode_(mode),
        n_(n),
        palette_size_(palette_size),
        vertex_colors_(std::move(vertex_colors)),
        edges_(std::move(edges)) {
    if (vertex_colors_.empty()) vertex_colors_.resize(n_);
    validate();
    build_adjacency();
  }

  static ColoredGraph edge_colored(Vertex n, ColorId palette_size, std::vector<Edge> edges) {
    return ColoredGraph(ColoringTarget::edges, n, palette_size, {}, std::move(edges));
  }

  static ColoredGraph vertex_colored(ColorId palette_size, std::vector<ColorSet> colors,
                                     const std::vector<std::pair<Vertex, Vertex>>& edges,
                                     MultiColorMode mode = MultiColorMode::vulnerable) {
    std::vector<Edge> records;
    records.reserve(edges.size());
    for (auto [u, v] : edges) records.push_back({u, v, {}});
    const auto n = static_cast<Vertex>(colors.size());
    return ColoredGraph(ColoringTarget::vertices, n, palette_size, std::move(colors), std::move(records), mode);
  }

  ColoredGraph with_mode(MultiColorMode mode) const {
    return ColoredGraph(target_, n_, palette_size_, vertex_colors_, edges_, mode);
  }

  ColoringTarget target() const { return target_; }
  MultiColorMode mode() const { return mode_; }
  Vertex vertex_count() const { return n_; }
  ColorId palette_size() const { return palette_size_; }
  std::size_t edge_count() const { return edges_.size(); }

  const ColorSet& colors(Vertex v) const { return vertex_colors_[v]; }
  const std::vector<ColorSet>& vertex_colors() const { return vertex_colors_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Distinct neighbors of v, ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  bool adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Label of the connected component of v in the uncolored graph (the
  // minimum vertex id of that component).
  Vertex component(Vertex v) const { return component_[v]; }

  void check_vertex(Vertex v) const {
    if (v >= n_) throw ValidationError("vertex " + std::to_string(v) + " out of range (n = " + std::to_string(n_) + ")");
  }

  void require_target(ColoringTarget t) const {
    if (t != target_)
      throw ValidationError("operation needs a " + std::string(to_string(t)) + "-colored graph, got " +
                            std::string(to_string(target_)) + "-colored");
  }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.target_ == b.target_ && a.mode_ == b.mode_ && a.n_ == b.n_ && a.palette_size_ == b.palette_size_ &&
           a.vertex_colors_ == b.vertex_colors_ && a.edges_ == b.edges_;
  }

 private:
  void validate() const {
    if (vertex_colors_.size() != n_) throw ValidationError("vertex color table size does not match vertex count");
    for (Vertex v = 0; v < n_; ++v) {
      const auto& cs = vertex_colors_[v];
      if (target_ == ColoringTarget::edges && !cs.empty())
        throw ValidationError("vertex " + std::to_string(v) + " carries colors in an edge-colored graph");
      if (!cs.empty() && cs.max() >= palette_size_)
        throw ValidationError("vertex " + std::to_string(v) + " uses color " + std::to_string(cs.max()) +
                              " outside palette of size " + std::to_string(palette_size_));
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      const auto where = "edge #" + std::to_string(i) + " (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
      if (e.u >= n_ || e.v >= n_) throw ValidationError(where + ": vertex out of range");
      if (e.u == e.v) throw ValidationError(where + ": self-loop");
      if (target_ == ColoringTarget::edges && e.colors.empty()) throw ValidationError(where + ": no color");
      if (target_ == ColoringTarget::vertices && !e.colors.empty())
        throw ValidationError(where + ": edge colors in a vertex-colored graph");
      if (!e.colors.empty() && e.colors.max() >= palette_size_)
        throw ValidationError(where + ": color " + std::to_string(e.colors.max()) + " outside palette");
    }
  }

  void build_adjacency() {
    std::vector<std::vector<Vertex>> lists(n_);
    detail::UnionFind uf(n_);
    for (const auto& e : edges_) {
      lists[e.u].push_back(e.v);
      lists[e.v].push_back(e.u);
      uf.unite(e.u, e.v);
    }
    offsets_.assign(n_ + 1, 0);
    for (Vertex v = 0; v < n_; ++v) {
      auto& l = lists[v];
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
      offsets_[v + 1] = offsets_[v] + l.size();
    }
    adjacency_.reserve(offsets_[n_]);
    for (auto& l : lists) adjacency_.insert(adjacency_.end(), l.begin(), l.end());

    auto roots = uf.roots();
    std::vector<Vertex> first(n_, kNoVertex);
    component_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (first[roots[v]] == kNoVertex) first[roots[v]] = v;
      component_[v] = first[roots[v]];
    }
  }

  ColoringTarget target_;
  MultiColorMode mode_;
  Vertex n_;
  ColorId palette_size_;
  std::vector<ColorSet> vertex_colors_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<Vertex> component_;
};

// Disjoint blocks over a subset of 0..n-1. A block is labelled by its
// smallest vertex, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;

  // labels[v] == kNoVertex leaves v outside the domain; any other value is
  // an arbitrary block key in [0, n).
  explicit Partition(std::vector<Vertex> labels) : label_(std::move(labels)) {
    const auto n = static_cast<Vertex>(label_.size());
    std::vector<Vertex> canon(n, kNoVertex);
    for (Vertex v = 0; v < n; ++v) {
      auto key = label_[v];
      if (key == kNoVertex) continue;
      if (key >= n) throw ValidationError("partition key out of range");
      if (canon[key] == kNoVertex) canon[key] = v;
      label_[v] = canon[key];
    }
  }

  Vertex universe_size() const { return static_cast<Vertex>(label_.size()); }
  bool contains(Vertex v) const { return label_[v] != kNoVertex; }
  Vertex block_of(Vertex v) const { return label_[v]; }
  bool same_block(Vertex u, Vertex v) const { return contains(u) && label_[u] == label_[v]; }
  const std::vector<Vertex>& labels() const { return label_; }

  std::vector<Vertex> domain() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < label_.size(); ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  // Blocks ordered by their smallest member, members ascending.
  std::vector<std::vector<Vertex>> blocks() const {
    std::vector<Vertex> slot(label_.size(), kNoVertex);
    std::vector<std::vector<Vertex>> out;
    for (Vertex v = 0; v < label_.size(); ++v) {
      if (!contains(v)) continue;
      auto l = label_[v];
      if (slot[l] == kNoVertex) {
        slot[l] = static_cast<Vertex>(out.size());
        out.emplace_back();
      }
      out[slot[l]].push_back(v);
    }
    return out;
  }

  std::size_t block_count() const {
    std::size_t count = 0;
    for (Vertex v = 0; v < label_.size(); ++v) count += label_[v] == v;
    return count;
  }

  std::size_t largest_block() const {
    std::vector<std::size_t> size(label_.size(), 0);
    std::size_t best = 0;
    for (auto l : label_)
      if (l != kNoVertex) best = std::max(best, ++size[l]);
    return best;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Vertex> label_;
};

// Simple undirected graph without colors. Used for the pairwise relation
// graphs and for plain inputs such as gadget sources.
class PairwiseGraph {
 public:
  explicit PairwiseGraph(Vertex n = 0) : adj_(n) {}

  // Duplicate pairs are merged; self-loops and out-of-range ids throw.
  static PairwiseGraph from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
    PairwiseGraph g(n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw ValidationError("pairwise edge endpoint out of range");
      if (u == v) throw ValidationError("pairwise graph cannot contain self-loops");
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    g.normalize();
    return g;
  }

  static PairwiseGraph from_edges(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
  }

  // Adjacency must already be symmetric and loop-free; lists may be unsorted.
  static PairwiseGraph from_adjacency(std::vector<std::vector<Vertex>> adj) {
    PairwiseGraph g;
    g.adj_ = std::move(adj);
    g.normalize();
    const auto n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
      for (auto v : g.adj_[u]) {
        if (v >= n || v == u) throw ValidationError("pairwise adjacency has a loop or an out-of-range vertex");
        if (!g.has_edge(v, u)) throw ValidationError("pairwise adjacency is not symmetric");
      }
    return g;
  }

  Vertex vertex_count() const { return static_cast<Vertex>(adj_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& l : adj_) twice += l.size();
    return twice / 2;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (auto v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Induced subgraph on `vertices` (ascending); vertex i of the result is
  // vertices[i].
  PairwiseGraph induced(std::span<const Vertex> vertices) const {
    PairwiseGraph sub(static_cast<Vertex>(vertices.size()));
    for (Vertex i = 0; i < vertices.size(); ++i) {
      const auto& nb = adj_[vertices[i]];
      // both lists are sorted: merge
      auto a = nb.begin();
      auto b = vertices.begin();
      while (a != nb.end() && b != vertices.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          sub.adj_[i].push_back(static_cast<Vertex>(b - vertices.begin()));
          ++a;
          ++b;
        }
      }
    }
    return sub;
  }

  bool is_subgraph_of(const PairwiseGraph& other) const {
    if (other.vertex_count() != vertex_count()) return false;
    for (Vertex u = 0; u < adj_.size(); ++u)
      if (!std::includes(other.adj_[u].begin(), other.adj_[u].end(), adj_[u].begin(), adj_[u].end())) return false;
    return true;
  }

  friend bool operator==(const PairwiseGraph&, const PairwiseGraph&) = default;

 private:
  void normalize() {
    for (auto& l : adj_) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
  }

  std::vector<std::vector<Vertex>> adj_;
};

// Canonical list of vertex sets: each set ascending, the list sorted
// lexicographically and free of duplicates. Maximality (no set contained in
// another) is a property of how the list was produced; is_antichain()
// checks it.
class CliqueList {
 public:
  CliqueList() = default;

  explicit CliqueList(std::vector<std::vector<Vertex>> sets) : sets_(std::move(sets)) {
    for (auto& s : sets_) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  static CliqueList from_partition(const Partition& p) { return CliqueList(p.blocks()); }

  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const std::vector<Vertex>& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<std::vector<Vertex>>& sets() const { return sets_; }

  std::size_t largest() const {
    std::size_t best = 0;
    for (const auto& s : sets_) best = std::max(best, s.size());
    return best;
  }

  bool is_antichain() const {
    for (std::size_t i = 0; i < sets_.size(); ++i)
      for (std::size_t j = 0; j < sets_.size(); ++j)
        if (i != j && std::includes(sets_[j].begin(), sets_[j].end(), sets_[i].begin(), sets_[i].end())) return false;
    return true;
  }

  // Every set here is contained in some set of `other`.
  bool refines_into(const CliqueList& other) const {
    return std::all_of(sets_.begin(), sets_.end(), [&](const auto& s) {
      return std::any_of(other.begin(), other.end(),
                         [&](const auto& t) { return std::includes(t.begin(), t.end(), s.begin(), s.end()); });
    });
  }

  friend bool operator==(const CliqueList&, const CliqueList&) = default;

 private:
  std::vector<std::vector<Vertex>> sets_;
};

}  // namespace cap
