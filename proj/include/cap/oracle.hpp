#pragma once

// Brute-force reference implementations taken literally from the
// definitions. Nothing here calls into the fast modules: adjacency, vertex
// removal and reachability are rebuilt from the raw vertex and edge records,
// so a bug in the fast path cannot hide behind the same bug here.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "cap/graph.hpp"

namespace cap {

inline constexpr Vertex kOracleMaxSubsetVertices = 15;

// Symmetric pair relation on 0..n-1. The diagonal is never set.
class PairRelation {
 public:
  explicit PairRelation(Vertex n = 0) : n_(n), bits_(static_cast<std::size_t>(n) * n, false) {}

  static PairRelation from_graph(const PairwiseGraph& h) {
    PairRelation r(h.vertex_count());
    for (auto [u, v] : h.edges()) r.set(u, v);
    return r;
  }

  Vertex size() const { return n_; }
  bool related(Vertex u, Vertex v) const { return bits_[static_cast<std::size_t>(u) * n_ + v]; }

  void set(Vertex u, Vertex v, bool value = true) {
    if (u == v) return;
    bits_[static_cast<std::size_t>(u) * n_ + v] = value;
    bits_[static_cast<std::size_t>(v) * n_ + u] = value;
  }

  PairwiseGraph to_graph() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (related(u, v)) edges.emplace_back(u, v);
    return PairwiseGraph::from_edges(n_, edges);
  }

  bool is_transitive() const {
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = 0; b < n_; ++b)
        for (Vertex c = 0; c < n_; ++c)
          if (a != c && related(a, b) && related(b, c) && !related(a, c)) return false;
    return true;
  }

  friend bool operator==(const PairRelation&, const PairRelation&) = default;

 private:
  Vertex n_;
  std::vector<bool> bits_;
};

// One per-color certificate for a vertex pair.
struct AvoidanceWitness {
  enum class Kind {
    path,              // `path` avoids the attacked color as the variant requires
    endpoint_removed,  // weak only: an endpoint itself is removed by the attack
  };
  ColorId color = 0;
  Kind kind = Kind::path;
  std::vector<Vertex> path;
};

struct WitnessReport {
  std::vector<AvoidanceWitness> witnesses;  // colors 0.. up to the first failure
  std::optional<ColorId> failing_color;
  bool disconnected = false;  // the endpoints lie in different components of G

  bool related() const { return !failing_color && !disconnected; }
};

namespace oracle_detail {

struct Link {
  Vertex to;
  const ColorSet* colors;
};

inline std::vector<std::vector<Link>> links(const ColoredGraph& g) {
  std::vector<std::vector<Link>> out(g.vertex_count());
  for (const auto& e : g.edges()) {
    out[e.u].push_back({e.v, &e.colors});
    out[e.v].push_back({e.u, &e.colors});
  }
  return out;
}

inline bool listed(const ColorSet& cs, ColorId c) { return std::find(cs.begin(), cs.end(), c) != cs.end(); }

// "the vertices of color c are removed", with the immortality reading for
// multi-colored vertices in resilient mode
inline bool deleted(const ColoredGraph& g, Vertex v, ColorId c) {
  const auto& cs = g.colors(v);
  if (g.mode() == MultiColorMode::resilient && cs.size() > 1) return false;
  return listed(cs, c);
}

// Breadth-first search from `from` to `to`; `may_enter(x)` decides whether x
// may appear on the path, `may_use(colors)` whether an edge may be used.
// Returns the path or an empty vector.
template <typename Enter, typename Use>
std::vector<Vertex> bfs_path(const std::vector<std::vector<Link>>& adj, Vertex from, Vertex to, Enter may_enter,
                             Use may_use) {
  std::vector<Vertex> prev(adj.size(), kNoVertex);
  std::deque<Vertex> queue{from};
  prev[from] = from;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (const auto& l : adj[x])
      if (prev[l.to] == kNoVertex && may_use(*l.colors) && may_enter(l.to)) {
        prev[l.to] = x;
        queue.push_back(l.to);
      }
  }
  if (prev[to] == kNoVertex) return {};
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

inline void require_variant(const ColoredGraph& g, Variant variant) {
  const bool wants_edges = variant == Variant::edge;
  if (wants_edges != (g.target() == ColoringTarget::edges))
    throw ValidationError("variant " + std::string(to_string(variant)) + " does not apply to a " +
                          std::string(to_string(g.target())) + "-colored graph");
}

}  // namespace oracle_detail

// Per-color witnesses for (u, v) under `variant`, stopping at the first
// color that has none. Pairs in different components of G are reported as
// disconnected without per-color witnesses.
inline WitnessReport extract_witnesses(const ColoredGraph& g, Vertex u, Vertex v, Variant variant) {
  using namespace oracle_detail;
  require_variant(g, variant);
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw ValidationError("pairwise queries need two distinct vertices");
  const auto adj = links(g);
  auto anything = [](auto) { return true; };

  WitnessReport report;
  if (bfs_path(adj, u, v, anything, anything).empty()) {
    report.disconnected = true;
    return report;
  }
  for (ColorId c = 0; c < g.palette_size(); ++c) {
    AvoidanceWitness w{c, AvoidanceWitness::Kind::path, {}};
    switch (variant) {
      case Variant::edge:
        w.path = bfs_path(adj, u, v, anything, [&](const ColorSet& cs) { return !listed(cs, c); });
        break;
      case Variant::strong:
        w.path = bfs_path(adj, u, v, [&](Vertex x) { return x == v || !deleted(g, x, c); }, anything);
        break;
      case Variant::weak:
      case Variant::weak_lists:
        if (deleted(g, u, c) || deleted(g, v, c))
          w.kind = AvoidanceWitness::Kind::endpoint_removed;
        else
          w.path = bfs_path(adj, u, v, [&](Vertex x) { return !deleted(g, x, c); }, anything);
        break;
    }
    if (w.kind == AvoidanceWitness::Kind::path && w.path.empty()) {
      report.failing_color = c;
      return report;
    }
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

// Checks a witness against the definition it claims to certify.
inline bool validate_witness(const ColoredGraph& g, Vertex u, Vertex v, Variant variant, const AvoidanceWitness& w) {
  using namespace oracle_detail;
  const auto c = w.color;
  if (c >= g.palette_size() || u >= g.vertex_count() || v >= g.vertex_count()) return false;
  if (w.kind == AvoidanceWitness::Kind::endpoint_removed)
    return (variant == Variant::weak || variant == Variant::weak_lists) && (deleted(g, u, c) || deleted(g, v, c));

  const auto& p = w.path;
  if (p.size() < 2 || p.front() != u || p.back() != v) return false;
  std::vector<Vertex> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const bool linked = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      const bool ends = (e.u == p[i] && e.v == p[i + 1]) || (e.v == p[i] && e.u == p[i + 1]);
      return ends && (variant != Variant::edge || !listed(e.colors, c));
    });
    if (!linked) return false;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool internal = i > 0 && i + 1 < p.size();
    if (variant == Variant::strong && internal && deleted(g, p[i], c)) return false;
    if ((variant == Variant::weak || variant == Variant::weak_lists) && deleted(g, p[i], c)) return false;
  }
  return true;
}

// The pair relation of `variant`, one breadth-first search per pair and
// color. Vertices in different components of G are never related.
inline PairRelation oracle_pairwise(const ColoredGraph& g, Variant variant) {
  const Vertex n = g.vertex_count();
  PairRelation rel(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) rel.set(u, v, extract_witnesses(g, u, v, variant).related());
  return rel;
}

// All maximal sets of pairwise related vertices by scanning every subset.
// Limited to kOracleMaxSubsetVertices vertices.
inline CliqueList oracle_maximal_sets(const PairRelation& rel) {
  const Vertex n = rel.size();
  if (n > kOracleMaxSubsetVertices)
    throw ValidationError("subset oracle is limited to " + std::to_string(kOracleMaxSubsetVertices) + " vertices");
  if (n == 0) return {};
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (rel.related(u, v)) nbr[u] |= 1u << v;

  const std::uint32_t full = 1u << n;
  std::vector<bool> clique(full, false);
  clique[0] = true;
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t s = 1; s < full; ++s) {
    const auto low = static_cast<Vertex>(__builtin_ctz(s));
    const auto rest = s & (s - 1);
    clique[s] = clique[rest] && (nbr[low] & rest) == rest;
    if (!clique[s]) continue;
    bool maximal = true;
    for (Vertex x = 0; x < n && maximal; ++x)
      if (!(s >> x & 1u) && (nbr[x] & s) == s) maximal = false;
    if (!maximal) continue;
    std::vector<Vertex> members;
    for (Vertex x = 0; x < n; ++x)
      if (s >> x & 1u) members.push_back(x);
    out.push_back(std::move(members));
  }
  return CliqueList(std::move(out));
}

inline CliqueList oracle_maximal_cliques(const PairwiseGraph& h) { return oracle_maximal_sets(PairRelation::from_graph(h)); }

// Components for `variant`: connected components of the relation for the
// edge variant (an equivalence), maximal related subsets otherwise.
inline CliqueList oracle_components(const PairRelation& rel, Variant variant) {
  if (variant != Variant::edge) return oracle_maximal_sets(rel);
  const Vertex n = rel.size();
  std::vector<bool> done(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (done[s]) continue;
    std::vector<Vertex> block{s};
    done[s] = true;
    for (std::size_t i = 0; i < block.size(); ++i)
      for (Vertex y = 0; y < n; ++y)
        if (!done[y] && rel.related(block[i], y)) {
          done[y] = true;
          block.push_back(y);
        }
    out.push_back(std::move(block));
  }
  return CliqueList(std::move(out));
}

}  // namespace cap
