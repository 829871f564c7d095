#pragma once

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cap/graph.hpp"

namespace cap {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Node allowance for the exponential solvers. `used` reports how many
// recursion nodes the last search visited.
struct SearchBudget {
  std::uint64_t limit = kDefaultSearchBudget;
  std::uint64_t used = 0;
};

namespace detail {

class PivotEnumerator {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  PivotEnumerator(const PairwiseGraph& h, SearchBudget& budget) : budget_(budget), adj_(h.vertex_count()) {
    const auto n = h.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
      adj_[v].resize(n);
      for (auto w : h.neighbors(v)) adj_[v].set(w);
    }
  }

  std::vector<std::vector<Vertex>> run() {
    const auto n = adj_.size();
    if (n == 0) return {};
    Bits p(n), x(n);
    p.set();
    expand(p, x);
    return std::move(found_);
  }

 private:
  void expand(Bits& p, Bits& x) {
    if (++budget_.used > budget_.limit) throw BudgetExceeded(budget_.limit);
    if (p.none()) {
      if (x.none()) found_.push_back(current_);
      return;
    }
    // pivot: most neighbors among the candidates, smallest id on ties
    std::size_t pivot = Bits::npos, best = 0;
    const Bits px = p | x;
    for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
      auto deg = (p & adj_[u]).count();
      if (pivot == Bits::npos || deg > best) {
        pivot = u;
        best = deg;
      }
    }
    const Bits branch = p - adj_[pivot];
    for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
      current_.push_back(static_cast<Vertex>(v));
      Bits np = p & adj_[v];
      Bits nx = x & adj_[v];
      expand(np, nx);
      current_.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  SearchBudget& budget_;
  std::vector<Bits> adj_;
  std::vector<Vertex> current_;
  std::vector<std::vector<Vertex>> found_;
};

}  // namespace detail

// All maximal cliques of an arbitrary graph by pivoted recursive
// enumeration. Exponential in the worst case; throws BudgetExceeded instead
// of returning a partial list.
inline CliqueList maximal_cliques_general(const PairwiseGraph& h, SearchBudget& budget) {
  budget.used = 0;
  return CliqueList(detail::PivotEnumerator(h, budget).run());
}

inline CliqueList maximal_cliques_general(const PairwiseGraph& h) {
  SearchBudget budget;
  return maximal_cliques_general(h, budget);
}

}  // namespace cap
