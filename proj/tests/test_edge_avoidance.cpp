#include <gtest/gtest.h>

#include "test_support.hpp"

namespace cap {
namespace {

using testing::load_fixture;
using testing::Rng;

using Blocks = std::vector<std::vector<Vertex>>;

// every block of `fine` lies inside a block of `coarse`
bool refines(const Partition& fine, const Partition& coarse) {
  for (const auto& block : fine.blocks())
    for (auto v : block)
      if (!coarse.same_block(block.front(), v)) return false;
  return true;
}

TEST(EdgeSurvivingPartition, BlueAttackOnEdgeLists) {
  auto g = load_fixture("edges_lists.cag");
  EXPECT_EQ(edge_surviving_partition(g, 1).blocks(), (Blocks{{0}, {1, 2, 3}}));
}

TEST(EdgeSurvivingPartition, RedAttackOnParallelEdges) {
  auto g = load_fixture("multi_edges.cag");
  EXPECT_EQ(edge_surviving_partition(g, 0).blocks(), (Blocks{{0, 1}, {2}}));
}

TEST(EdgeSurvivingPartition, UnusedColorGivesPlainComponents) {
  auto g = ColoredGraph::edge_colored(5, 3, {{0, 1, {0}}, {1, 2, {1}}, {3, 4, {0, 1}}});
  EXPECT_EQ(edge_surviving_partition(g, 2).blocks(), (Blocks{{0, 1, 2}, {3, 4}}));
}

TEST(EdgeSurvivingPartition, RejectsWrongInput) {
  EXPECT_THROW(edge_surviving_partition(load_fixture("bicolor_path.cag"), 0), ValidationError);
  EXPECT_THROW(edge_surviving_partition(load_fixture("triangle.cag"), 2), ValidationError);
}

TEST(IsEdgeCac, FixturePairs) {
  auto multi = load_fixture("multi_edges.cag");
  EXPECT_TRUE(is_edge_cac(multi, 0, 1));
  EXPECT_FALSE(is_edge_cac(multi, 1, 2));

  auto lists = load_fixture("edges_lists.cag");
  EXPECT_TRUE(is_edge_cac(lists, 1, 3));
  EXPECT_FALSE(is_edge_cac(lists, 0, 1));
}

// triangle: v1v2 blue, v2v3 blue, v1v3 red. A blue attack isolates v2, so
// only v1 and v3 are connected.
TEST(IsEdgeCac, TriangleOnlyJoinsRedEdgeEnds) {
  auto g = load_fixture("triangle.cag");
  EXPECT_TRUE(is_edge_cac(g, 0, 2));
  EXPECT_FALSE(is_edge_cac(g, 0, 1));
  EXPECT_FALSE(is_edge_cac(g, 1, 2));
  EXPECT_TRUE(is_edge_cac(g, 1, 1));
  EXPECT_THROW(is_edge_cac(g, 0, 3), ValidationError);
}

TEST(EdgeCacComponents, SixVertexExample) {
  auto g = load_fixture("gprime_edge.cag");
  EXPECT_EQ(edge_cac_components(g).blocks(), (Blocks{{0, 1, 2}, {3, 4}, {5}}));
}

TEST(EdgeCacComponents, MonochromaticGraphFallsApart) {
  auto g = generate_er(12, 0.5, 1, ColoringTarget::edges, 4);
  ASSERT_GT(g.edge_count(), 0u);
  EXPECT_EQ(edge_cac_components(g).block_count(), 12u);
}

TEST(EdgeCacComponents, EmptyPaletteKeepsPlainComponents) {
  auto g = ColoredGraph::edge_colored(3, 0, {});
  EXPECT_EQ(edge_cac_components(g).block_count(), 3u);
  EXPECT_EQ(edge_cac_components(ColoredGraph::edge_colored(0, 0, {})).block_count(), 0u);
}

TEST(EdgeCacComponents, AgreesWithOracleOnRandomGraphs) {
  Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<Vertex>(1 + rng() % 10);
    const auto k = static_cast<ColorId>(1 + rng() % 4);
    const double p = std::array{0.2, 0.5, 0.8}[i % 3];
    auto g = testing::random_edge_colored(rng, n, k, p, {.lists = i % 2 == 1, .parallel_rate = 0.3});
    const auto parts = edge_cac_components(g);
    const auto rel = oracle_pairwise(g, Variant::edge);
    ASSERT_TRUE(rel.is_transitive());
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        ASSERT_EQ(parts.same_block(u, v), rel.related(u, v)) << serialize_graph(g);
        ASSERT_EQ(is_edge_cac(g, u, v), rel.related(u, v)) << serialize_graph(g);
      }
    ASSERT_EQ(CliqueList::from_partition(parts), oracle_components(rel, Variant::edge));
  }
}

TEST(EdgeCacComponents, ParallelEdgeOfAnotherColorJoinsEndpoints) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<Vertex>(2 + rng() % 10);
    const auto k = static_cast<ColorId>(2 + rng() % 3);
    auto g = testing::random_edge_colored(rng, n, k, 0.35);
    if (g.edge_count() == 0) continue;
    const auto& e = g.edges()[rng() % g.edge_count()];
    const ColorId other = (*e.colors.begin() + 1 + static_cast<ColorId>(rng() % (k - 1))) % k;
    auto edges = g.edges();
    edges.push_back({e.v, e.u, {other}});
    auto bigger = ColoredGraph::edge_colored(n, k, edges);
    const auto before = edge_cac_components(g);
    const auto after = edge_cac_components(bigger);
    EXPECT_TRUE(refines(before, after));
    EXPECT_TRUE(after.same_block(e.u, e.v));
  }
}

TEST(EdgeCacComponents, DeletingAnEdgeNeverMerges) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    auto g = testing::random_edge_colored(rng, 10, 3, 0.5, {.lists = true});
    if (g.edge_count() == 0) continue;
    auto edges = g.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng() % edges.size()));
    auto smaller = ColoredGraph::edge_colored(10, 3, edges);
    EXPECT_TRUE(refines(edge_cac_components(smaller), edge_cac_components(g)));
  }
}

TEST(EdgeCacComponents, ThreadCountDoesNotChangeResult) {
  auto g = generate_er(3000, 0.002, 6, ColoringTarget::edges, 17);
  EXPECT_EQ(edge_cac_components(g, {.threads = 1}), edge_cac_components(g, {.threads = 4}));
}

TEST(LargestEdgeCacAtLeast, Thresholds) {
  auto g = load_fixture("gprime_edge.cag");
  EXPECT_TRUE(largest_edge_cac_at_least(g, 3));
  EXPECT_FALSE(largest_edge_cac_at_least(g, 4));
  EXPECT_TRUE(largest_edge_cac_at_least(g, 1));
  EXPECT_THROW(largest_edge_cac_at_least(g, 0), ValidationError);

  auto mono = ColoredGraph::edge_colored(2, 1, {{0, 1, {0}}});
  EXPECT_FALSE(largest_edge_cac_at_least(mono, 2));
  EXPECT_FALSE(largest_edge_cac_at_least(ColoredGraph::edge_colored(0, 0, {}), 1));
}

}  // namespace
}  // namespace cap
