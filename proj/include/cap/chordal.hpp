#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <variant>
#include <vector>

#include "cap/detail/parallel.hpp"
#include "cap/graph.hpp"

namespace cap {

// Vertex order in which every vertex's later neighbors form a clique
// (perfect elimination order). Exists iff the graph is chordal.
struct EliminationOrder {
  std::vector<Vertex> order;
};

// `a` and `b` are both later neighbors of `v` in some order but are not
// adjacent.
struct ViolatingTriple {
  Vertex v;
  Vertex a;
  Vertex b;

  friend bool operator==(const ViolatingTriple&, const ViolatingTriple&) = default;
};

// An induced wheel: `center` is adjacent to every vertex of `cycle`, and
// `cycle` (length >= 4) is an induced cycle.
struct Wheel {
  Vertex center;
  std::vector<Vertex> cycle;
};

// Raised when a graph expected to be locally chordal is not.
class LocalChordalityViolation : public Error {
 public:
  explicit LocalChordalityViolation(Vertex v)
      : Error("neighborhood of vertex " + std::to_string(v) + " is not chordal"), vertex_(v) {}
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

// Checks the elimination property in O(n + m log n): with p the earliest
// later neighbor of v, every other later neighbor of v must be adjacent to p.
inline std::optional<ViolatingTriple> find_elimination_violation(const PairwiseGraph& h, const EliminationOrder& ord) {
  const Vertex n = h.vertex_count();
  if (ord.order.size() != n) throw ValidationError("elimination order has the wrong length");
  std::vector<Vertex> pos(n, kNoVertex);
  for (Vertex i = 0; i < n; ++i) {
    auto v = ord.order[i];
    if (v >= n || pos[v] != kNoVertex) throw ValidationError("elimination order is not a permutation");
    pos[v] = i;
  }
  for (auto v : ord.order) {
    Vertex parent = kNoVertex;
    for (auto w : h.neighbors(v))
      if (pos[w] > pos[v] && (parent == kNoVertex || pos[w] < pos[parent])) parent = w;
    if (parent == kNoVertex) continue;
    for (auto w : h.neighbors(v))
      if (pos[w] > pos[v] && w != parent && !h.has_edge(parent, w)) return ViolatingTriple{v, parent, w};
  }
  return std::nullopt;
}

// Maximum cardinality search. The reverse visiting order is a perfect
// elimination order exactly when h is chordal; otherwise the first failure
// of that order is returned as evidence.
inline std::variant<EliminationOrder, ViolatingTriple> maximum_cardinality_search(const PairwiseGraph& h) {
  const Vertex n = h.vertex_count();
  std::vector<Vertex> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<std::vector<Vertex>> buckets(n + 1);
  for (Vertex v = n; v-- > 0;) buckets[0].push_back(v);
  std::vector<Vertex> visit;
  visit.reserve(n);
  Vertex top = 0;
  for (Vertex i = 0; i < n; ++i) {
    Vertex v = kNoVertex;
    while (v == kNoVertex) {
      while (buckets[top].empty()) --top;
      auto cand = buckets[top].back();
      buckets[top].pop_back();
      if (!numbered[cand] && weight[cand] == top) v = cand;
    }
    numbered[v] = true;
    visit.push_back(v);
    for (auto w : h.neighbors(v)) {
      if (numbered[w]) continue;
      buckets[++weight[w]].push_back(w);
      top = std::max(top, weight[w]);
    }
  }
  EliminationOrder ord{{visit.rbegin(), visit.rend()}};
  if (auto bad = find_elimination_violation(h, ord)) return *bad;
  return ord;
}

inline bool is_chordal(const PairwiseGraph& h) {
  return std::holds_alternative<EliminationOrder>(maximum_cardinality_search(h));
}

// All maximal cliques of a chordal graph, read off a perfect elimination
// order: {v} + later(v) is maximal unless some u has v as its earliest later
// neighbor and exactly one more later neighbor than v.
inline CliqueList maximal_cliques_chordal(const PairwiseGraph& h, const EliminationOrder& ord) {
  if (auto bad = find_elimination_violation(h, ord))
    throw ValidationError("not a perfect elimination order: vertices " + std::to_string(bad->a) + " and " +
                          std::to_string(bad->b) + " follow " + std::to_string(bad->v) + " but are not adjacent");
  const Vertex n = h.vertex_count();
  std::vector<Vertex> pos(n);
  for (Vertex i = 0; i < n; ++i) pos[ord.order[i]] = i;

  std::vector<std::vector<Vertex>> later(n);
  std::vector<Vertex> parent(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v)
    for (auto w : h.neighbors(v))
      if (pos[w] > pos[v]) {
        later[v].push_back(w);
        if (parent[v] == kNoVertex || pos[w] < pos[parent[v]]) parent[v] = w;
      }

  std::vector<bool> absorbed(n, false);
  for (Vertex u = 0; u < n; ++u)
    if (parent[u] != kNoVertex && later[u].size() == later[parent[u]].size() + 1) absorbed[parent[u]] = true;

  std::vector<std::vector<Vertex>> cliques;
  for (Vertex v = 0; v < n; ++v) {
    if (absorbed[v]) continue;
    auto c = later[v];
    c.push_back(v);
    cliques.push_back(std::move(c));
  }
  return CliqueList(std::move(cliques));
}

// Vertex whose open neighborhood induces a non-chordal graph, if any.
inline std::optional<Vertex> find_non_chordal_neighborhood(const PairwiseGraph& h) {
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (!is_chordal(h.induced(h.neighbors(v)))) return v;
  return std::nullopt;
}

// Every open neighborhood induces a chordal graph; equivalently h has no
// induced wheel on five or more vertices.
inline bool is_locally_chordal(const PairwiseGraph& h) { return !find_non_chordal_neighborhood(h).has_value(); }

// Induced cycle of length >= 4 in a graph, if one exists. For each vertex v
// and nonadjacent neighbors a, b: a shortest a-b path avoiding the rest of
// N[v] closes a chordless cycle through v, and every chordless cycle is
// found this way.
inline std::optional<std::vector<Vertex>> find_induced_long_cycle(const PairwiseGraph& h) {
  const Vertex n = h.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    auto nb = h.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex a = nb[i], b = nb[j];
        if (h.has_edge(a, b)) continue;
        std::vector<bool> blocked(n, false);
        blocked[v] = true;
        for (auto w : nb) blocked[w] = (w != a && w != b);
        std::vector<Vertex> prev(n, kNoVertex);
        std::queue<Vertex> q;
        q.push(a);
        prev[a] = a;
        while (!q.empty() && prev[b] == kNoVertex) {
          auto x = q.front();
          q.pop();
          for (auto y : h.neighbors(x))
            if (!blocked[y] && prev[y] == kNoVertex) {
              prev[y] = x;
              q.push(y);
            }
        }
        if (prev[b] == kNoVertex) continue;
        std::vector<Vertex> cycle{v};
        for (Vertex x = b; x != a; x = prev[x]) cycle.push_back(x);
        cycle.push_back(a);
        return cycle;
      }
  }
  return std::nullopt;
}

inline std::optional<Wheel> find_induced_wheel(const PairwiseGraph& h) {
  auto center = find_non_chordal_neighborhood(h);
  if (!center) return std::nullopt;
  auto nb = h.neighbors(*center);
  auto local = find_induced_long_cycle(h.induced(nb));
  // a non-chordal graph always has a long induced cycle
  if (!local) throw Error("internal error: non-chordal neighborhood without an induced cycle");
  Wheel w{*center, {}};
  for (auto i : *local) w.cycle.push_back(nb[i]);
  return w;
}

namespace detail {

// Classes of true twins (equal closed neighborhoods). Returns the class of
// every vertex; classes are numbered by their smallest member.
inline std::vector<Vertex> true_twin_classes(const PairwiseGraph& h, Vertex& class_count) {
  const Vertex n = h.vertex_count();
  std::map<std::vector<Vertex>, Vertex> seen;
  std::vector<Vertex> cls(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> closed(h.neighbors(v).begin(), h.neighbors(v).end());
    closed.insert(std::upper_bound(closed.begin(), closed.end(), v), v);
    cls[v] = seen.try_emplace(std::move(closed), static_cast<Vertex>(seen.size())).first->second;
  }
  class_count = static_cast<Vertex>(seen.size());
  return cls;
}

}  // namespace detail

// Maximal cliques of a locally chordal graph in polynomial time. For every
// vertex v the neighborhood h[N(v)] is chordal, and {v} plus a maximal
// clique of h[N(v)] is a maximal clique of h (anything extending it lies in
// N(v)). Each vertex contributes at most deg(v) cliques.
//
// True twins are contracted first; the result is expanded back, so the
// output is unchanged but dense pairwise graphs stay cheap.
//
// Throws LocalChordalityViolation naming a vertex whose neighborhood is not
// chordal.
inline CliqueList maximal_cliques_locally_chordal(const PairwiseGraph& h, ExecutionOptions exec = {}) {
  const Vertex n = h.vertex_count();
  Vertex m = 0;
  const auto cls = detail::true_twin_classes(h, m);
  std::vector<std::vector<Vertex>> members(m);
  for (Vertex v = 0; v < n; ++v) members[cls[v]].push_back(v);

  std::vector<std::vector<Vertex>> qadj(m);
  for (Vertex q = 0; q < m; ++q) {
    for (auto w : h.neighbors(members[q].front()))
      if (cls[w] != q) qadj[q].push_back(cls[w]);
  }
  const auto quotient = PairwiseGraph::from_adjacency(std::move(qadj));

  std::vector<std::vector<std::vector<Vertex>>> local(m);
  std::vector<char> bad(m, 0);
  detail::parallel_for(m, exec.threads, [&](std::size_t qi) {
    const auto q = static_cast<Vertex>(qi);
    auto nb = quotient.neighbors(q);
    if (nb.empty()) {
      local[q].push_back({q});
      return;
    }
    auto sub = quotient.induced(nb);
    auto mcs = maximum_cardinality_search(sub);
    if (!std::holds_alternative<EliminationOrder>(mcs)) {
      bad[q] = 1;
      return;
    }
    for (const auto& c : maximal_cliques_chordal(sub, std::get<EliminationOrder>(mcs))) {
      std::vector<Vertex> clique{q};
      for (auto i : c) clique.push_back(nb[i]);
      local[q].push_back(std::move(clique));
    }
  });
  for (Vertex q = 0; q < m; ++q)
    if (bad[q]) throw LocalChordalityViolation(members[q].front());

  std::vector<std::vector<Vertex>> quotient_cliques;
  for (auto& l : local)
    for (auto& c : l) quotient_cliques.push_back(std::move(c));
  CliqueList canonical(std::move(quotient_cliques));

  std::vector<std::vector<Vertex>> out;
  out.reserve(canonical.size());
  for (const auto& c : canonical) {
    std::vector<Vertex> expanded;
    for (auto q : c) expanded.insert(expanded.end(), members[q].begin(), members[q].end());
    out.push_back(std::move(expanded));
  }
  return CliqueList(std::move(out));
}

}  // namespace cap
