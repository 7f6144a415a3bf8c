#include <gtest/gtest.h>

#include "wsc/error.hpp"
#include "wsc/subgraphs.hpp"

using namespace wsc;

TEST(Graph, RejectsBadEndpointsAndLabels) {
  EXPECT_THROW(Graph(2, {{0, 2}}), Error);
  EXPECT_THROW(Graph(2, {}, {"a", "a"}), Error);
  EXPECT_THROW(Graph(2, {}, {"a"}), Error);
}

TEST(Graph, LoopsAndMultiEdges) {
  const Graph g(3, {{0, 1}, {1, 0}, {2, 2}, {2, 2}, {1, 2}});
  EXPECT_TRUE(g.has_loop());
  const Graph r = g.reduce_multi_edges();
  EXPECT_EQ(r.num_edges(), 3u);
  EXPECT_EQ(r.reduce_multi_edges().edges(), r.edges());
}

TEST(Graph, Contraction) {
  const Graph c3 = make_family(FamilyKind::Circuit, 3);
  const Graph c = c3.contract_edge(0);
  EXPECT_EQ(c.num_vertices(), 2u);
  EXPECT_EQ(c.num_edges(), 2u);
  EXPECT_FALSE(c.has_loop());
  const Graph c2 = make_family(FamilyKind::Circuit, 2).contract_edge(0);
  EXPECT_EQ(c2.num_vertices(), 1u);
  EXPECT_TRUE(c2.has_loop());
}

TEST(Graph, Families) {
  const Graph star = make_family(FamilyKind::Star, 4);
  EXPECT_EQ(star.num_vertices(), 4u);
  EXPECT_EQ(star.num_edges(), 3u);
  const Graph c2 = make_family(FamilyKind::Circuit, 2);
  EXPECT_EQ(c2.num_edges(), 2u);
  EXPECT_EQ(c2.edges()[0].u + c2.edges()[0].v, c2.edges()[1].u + c2.edges()[1].v);
  EXPECT_EQ(make_family(FamilyKind::Complete, 4).num_edges(), 6u);
  EXPECT_EQ(make_family(FamilyKind::Circuit, 5).chromatic_number(), 3u);
  EXPECT_EQ(make_family(FamilyKind::Circuit, 6).chromatic_number(), 2u);
  EXPECT_EQ(make_family(FamilyKind::Line, 3).num_edges(), make_family(FamilyKind::Star, 3).num_edges());
  EXPECT_THROW(make_family(FamilyKind::Line, 0), Error);
  EXPECT_THROW(make_family(FamilyKind::C4d, 5), Error);
}

TEST(Graph, Bipartition) {
  const auto parts = make_family(FamilyKind::Star, 5).bipartition();
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->first.size(), 1u);
  EXPECT_EQ(parts->second.size(), 4u);
  EXPECT_FALSE(make_family(FamilyKind::Circuit, 3).bipartition());
}

TEST(Graph, EdgeListAndJson) {
  const Graph g = parse_edge_list("# comment\nn 3\n0 1\n1 2 # tail\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(parse_edge_list(to_edge_list(g)).edges(), g.edges());
  const Graph j = parse_graph_json(R"({"n":3,"edges":[[0,1],[1,2]],"labels":["a","b","c"]})");
  EXPECT_EQ(j.label(1), "b");
  EXPECT_EQ(parse_graph_json(to_graph_json(j)).labels(), j.labels());
  EXPECT_EQ(g.hash(), j.hash());
  EXPECT_THROW(parse_edge_list("0 1\n"), Error);
  EXPECT_THROW(parse_graph_json("{"), Error);
}

TEST(Subgraphs, Components) {
  const Graph l2 = make_family(FamilyKind::Line, 2);
  auto sum = components(l2, 0);
  EXPECT_EQ(sum.k, 2u);
  EXPECT_EQ(sum.component_sizes, (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(sum.cycle_rank, 0u);

  sum = components(make_family(FamilyKind::Circuit, 3), 0b111);
  EXPECT_EQ(sum.k, 1u);
  EXPECT_EQ(sum.cycle_rank, 1u);

  sum = components(make_family(FamilyKind::Circuit, 4), 0b0111);
  EXPECT_EQ(sum.component_sizes, (std::vector<std::uint32_t>{4}));
  EXPECT_EQ(sum.cycle_rank, 0u);
  EXPECT_THROW(components(l2, 0b10), Error);
}

TEST(Subgraphs, EnumerationCounts) {
  auto count = [](const Graph& g) {
    std::size_t n = 0;
    for (const auto& sub : enumerate_spanning_subgraphs(g)) {
      std::uint32_t total = 0;
      for (auto x : sub.component_sizes) total += x;
      EXPECT_EQ(total, g.num_vertices());
      EXPECT_EQ(sub.cycle_rank + g.num_vertices(), sub.num_edges + sub.k);
      ++n;
    }
    return n;
  };
  EXPECT_EQ(count(make_family(FamilyKind::Line, 2)), 2u);
  EXPECT_EQ(count(make_family(FamilyKind::Circuit, 3)), 8u);
  EXPECT_EQ(count(make_family(FamilyKind::Complete, 4)), 64u);
}

TEST(Subgraphs, Cap) {
  const Graph k6 = make_family(FamilyKind::Complete, 6);
  try {
    enumerate_spanning_subgraphs(k6, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(Subgraphs, PartitionCoversEverything) {
  const Graph k4 = make_family(FamilyKind::Complete, 4);
  const auto parts = partition_spanning_subgraphs(k4, 5);
  std::uint64_t expected = 0;
  for (const auto& r : parts) {
    EXPECT_EQ(r.first_mask(), expected);
    expected = r.last_mask();
  }
  EXPECT_EQ(expected, 64u);
}

TEST(Subgraphs, CensusIndependentOfWorkers) {
  const Graph g = make_family(FamilyKind::C4d, 4);
  EXPECT_EQ(subgraph_census(g, {kDefaultEdgeCap, 1}), subgraph_census(g, {kDefaultEdgeCap, 3}));
}
