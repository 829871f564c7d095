// Builds a small vertex-colored network, then prints its strong and weak
// color-avoiding components and the per-color witnesses for one pair.

#include <iostream>

#include "cap/cap.hpp"

namespace {

void print(const char* title, const cap::CliqueList& sets) {
  std::cout << title << ":";
  for (const auto& s : sets) {
    std::cout << " {";
    for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? "," : "") << s[i];
    std::cout << "}";
  }
  std::cout << '\n';
}

}  // namespace

int main() {
  // 0 = red, 1 = blue; a path red - blue - red - red - red
  const auto g = cap::parse_graph(
      "cag vertices 5 2\n"
      "v 0 0\nv 1 1\nv 2 0\nv 3 0\nv 4 0\n"
      "e 0 1\ne 1 2\ne 2 3\ne 3 4\n");

  print("strong", cap::strong_components(g));
  print("weak", cap::weak_components(g));

  const auto report = cap::extract_witnesses(g, 2, 4, cap::Variant::weak);
  for (const auto& w : report.witnesses) {
    std::cout << "color " << w.color << ": ";
    if (w.kind == cap::AvoidanceWitness::Kind::endpoint_removed) {
      std::cout << "endpoint removed";
    } else {
      for (auto v : w.path) std::cout << v << ' ';
    }
    std::cout << '\n';
  }

  // edge-colored random graph, polynomial component algorithm
  const auto er = cap::generate_er(1000, 0.005, 3, cap::ColoringTarget::edges, 42);
  const auto parts = cap::edge_cac_components(er);
  std::cout << "edge-colored G(1000, 0.005): " << parts.block_count() << " components, largest "
            << parts.largest_block() << '\n';
}
