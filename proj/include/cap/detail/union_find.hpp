#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "cap/types.hpp"

namespace cap::detail {

class UnionFind {
 public:
  explicit UnionFind(Vertex n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }

  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  // Root of every element; roots are valid labels for Partition.
  std::vector<Vertex> roots() {
    std::vector<Vertex> out(parent_.size());
    for (Vertex v = 0; v < out.size(); ++v) out[v] = find(v);
    return out;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<Vertex> size_;
};

}  // namespace cap::detail
