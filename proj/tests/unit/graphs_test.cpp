#include <gtest/gtest.h>

#include "printers.hpp"

#include <algorithm>

#include "gerbe/graphs.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace gerbe::graphs;

namespace {

ModularGraph make(std::vector<int> genera, std::vector<std::pair<std::size_t, std::size_t>> edges,
                  std::vector<std::size_t> tails = {}) {
  return ModularGraph::from_description(std::move(genera), edges, tails);
}

std::vector<VertexId> sorted(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Betti, Examples) {
  EXPECT_EQ(betti1(make({0}, {{0, 0}})), 1);
  EXPECT_EQ(betti1(make({0, 0}, {{0, 1}})), 0);
  EXPECT_EQ(betti1(make({0}, {{0, 0}, {0, 0}})), 2);
}

TEST(TotalGenus, Examples) {
  EXPECT_EQ(total_genus(make({3}, {})), 3);
  EXPECT_EQ(total_genus(make({0}, {{0, 0}})), 1);
  EXPECT_EQ(total_genus(make({1, 1}, {{0, 1}})), 2);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_edges(make({0, 0}, {{0, 1}})).separating, std::vector<std::size_t>{0});
  EXPECT_EQ(classify_edges(make({0}, {{0, 0}})).non_separating, std::vector<std::size_t>{0});
  const auto theta = classify_edges(make({0, 0}, {{0, 1}, {0, 1}, {1, 0}}));
  EXPECT_TRUE(theta.separating.empty());
  EXPECT_EQ(theta.non_separating.size(), 3u);
}

TEST(Split, Examples) {
  auto [a, b] = split_at_edge(make({0, 0}, {{0, 1}}), 0);
  EXPECT_EQ(a, std::vector<VertexId>{0});
  EXPECT_EQ(b, std::vector<VertexId>{1});

  auto path = make({0, 0, 0}, {{0, 1}, {1, 2}});
  auto [p, q] = split_at_edge(path, 1);
  EXPECT_EQ(sorted(p), (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(q, std::vector<VertexId>{2});

  auto dumbbell = make({0, 0}, {{0, 0}, {0, 1}, {1, 1}});
  auto [l, r] = split_at_edge(dumbbell, 1);
  EXPECT_EQ(l, std::vector<VertexId>{0});
  EXPECT_EQ(r, std::vector<VertexId>{1});
  EXPECT_THROW(split_at_edge(dumbbell, 0), std::invalid_argument);
}

TEST(ModularGraphValidation, RejectsMalformed) {
  EXPECT_THROW(ModularGraph({1, 2, 0}, {0, 0, 0}, {0}), std::invalid_argument);
  EXPECT_THROW(ModularGraph({0}, {3}, {0}), std::invalid_argument);
  EXPECT_THROW(make({-1}, {}), std::invalid_argument);
  EXPECT_THROW(make({0, 0}, {}), std::invalid_argument);
  EXPECT_THROW(make({}, {}), std::invalid_argument);
}

TEST(ModularGraph, DescriptionNumbering) {
  auto g = make({0, 1}, {{0, 1}, {1, 1}}, {1, 0});
  EXPECT_EQ(g.num_flags(), 6u);
  EXPECT_EQ(g.tails(), (std::vector<FlagId>{0, 1}));
  EXPECT_EQ(g.vertex_of(0), 1u);
  EXPECT_EQ(g.endpoints(0), (std::pair<VertexId, VertexId>{0, 1}));
  EXPECT_TRUE(g.is_self_loop(1));
  EXPECT_EQ(g.edge_of(4), 1u);
  EXPECT_EQ(g.tail_index(1), 1u);
  EXPECT_THROW(g.edge_of(0), std::invalid_argument);
}

TEST(GerbyGraph, Validation) {
  auto base = make({0}, {{0, 0}}, {0});
  auto ok = GerbyGraph::decorate(base, {3}, {2});
  EXPECT_EQ(ok.tail_order(0), 3);
  EXPECT_EQ(ok.edge_order(0), 2);
  EXPECT_THROW(GerbyGraph(base, {3, 2, 4}), std::invalid_argument);
  EXPECT_THROW(GerbyGraph(base, {0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(GerbyGraph::decorate(base, {}, {2}), std::invalid_argument);
}

// The classifier agrees with deleting each edge and testing connectivity.
TEST(GraphProperty, BridgesMatchDeletionOracle) {
  gen::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto shape = gen::connected(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 7)), 5, 3);
    auto g = shape.build();
    const auto cls = classify_edges(g);
    const auto bridges = oracle::bridges_by_deletion(g);
    EXPECT_EQ(std::set<std::size_t>(cls.separating.begin(), cls.separating.end()), bridges);
    EXPECT_EQ(cls.separating.size() + cls.non_separating.size(), g.num_edges());
    EXPECT_EQ(betti1(g) > 0, !cls.non_separating.empty());
    for (auto e : cls.separating) {
      auto [p, q] = split_at_edge(g, e);
      EXPECT_EQ(p.size() + q.size(), g.num_vertices());
      EXPECT_NE(std::find(p.begin(), p.end(), g.vertex_of(g.edges()[e].first)), p.end());
    }
  }
}
