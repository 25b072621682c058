#include <gtest/gtest.h>

#include "printers.hpp"

#include "gerbe/admissibility.hpp"
#include "gerbe/polynomial.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace gerbe;
using namespace gerbe::admissibility;
using gerbe::graphs::ModularGraph;

namespace {

std::vector<std::vector<std::string>> strings(const std::vector<AdmissibleVector>& vs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& v : vs) out.push_back(v.to_strings());
  return out;
}

}  // namespace

TEST(ContactType, ParseAndValidate) {
  EXPECT_EQ(ContactType::parse("1/2"), ContactType(1, 2));
  EXPECT_EQ(ContactType::parse("0"), ContactType());
  EXPECT_EQ(ContactType::from_residue(2, 6), ContactType(1, 3));
  EXPECT_EQ(ContactType::from_residue(-1, 4), ContactType(3, 4));
  EXPECT_EQ(ContactType(1, 3).residue(6), 2);
  EXPECT_EQ(ContactType(1, 3).complement(), ContactType(2, 3));
  EXPECT_THROW(ContactType(2, 4), std::invalid_argument);
  EXPECT_THROW(ContactType(3, 3), std::invalid_argument);
  EXPECT_THROW(ContactType::parse("1/2/3"), std::invalid_argument);
  EXPECT_THROW(ContactType(1, 4).residue(6), std::invalid_argument);
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible({}, 3, 0));
  const std::vector<ContactType> halves{{1, 2}, {1, 2}};
  EXPECT_FALSE(is_admissible(halves, 2, 1));
  const std::vector<ContactType> third{{1, 3}};
  EXPECT_TRUE(is_admissible(third, 3, 1));
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(strings(enumerate_admissible(2, 2, 0)),
            (std::vector<std::vector<std::string>>{{"0/1", "0/1"}, {"1/2", "1/2"}}));
  EXPECT_EQ(strings(enumerate_admissible(1, 2, 1)), (std::vector<std::vector<std::string>>{{"1/2"}}));
  EXPECT_TRUE(enumerate_admissible(0, 5, 2).empty());
  EXPECT_EQ(enumerate_admissible(0, 5, 0).size(), 1u);
  EXPECT_THROW(enumerate_admissible(2, 0, 0), std::invalid_argument);
}

TEST(SeparatingOrder, Examples) {
  auto pair = ModularGraph::from_description({0, 0}, {{0, 1}}, {});
  DegreeData d{{1, 1}, {}, 0};
  EXPECT_EQ(separating_node_order(pair, d, 0, 2), ContactType(1, 2));

  DegreeData untwisted{{2, 0}, {}, 0};
  EXPECT_EQ(separating_node_order(pair, untwisted, 0, 2), ContactType());

  auto path = ModularGraph::from_description({0, 0, 0}, {{0, 1}, {1, 2}}, {});
  DegreeData p{{1, 1, 4}, {}, 0};
  EXPECT_EQ(separating_node_order(path, p, 0, 6), ContactType(1, 6));
  EXPECT_EQ(separating_node_order(path, p, 1, 6), ContactType(1, 3));
}

TEST(CompatibleGerby, Examples) {
  auto smooth = ModularGraph::from_description({1}, {}, {});
  EXPECT_EQ(enumerate_compatible_gerby(smooth, DegreeData{{0}, {}, 0}, 4).size(), 1u);

  auto loop = ModularGraph::from_description({0}, {{0, 0}}, {});
  const auto loops = enumerate_compatible_gerby(loop, DegreeData{{0}, {}, 0}, 6);
  ASSERT_EQ(loops.size(), 4u);
  std::vector<std::int64_t> orders;
  for (const auto& g : loops) orders.push_back(g.edge_order(0));
  EXPECT_EQ(orders, (std::vector<std::int64_t>{1, 2, 3, 6}));

  auto mixed = ModularGraph::from_description({0, 0}, {{0, 1}, {1, 1}}, {});
  const auto found = enumerate_compatible_gerby(mixed, DegreeData{{1, 1}, {}, 0}, 2);
  ASSERT_EQ(found.size(), 2u);
  for (const auto& g : found) EXPECT_EQ(g.edge_order(0), 2);
}

TEST(CompatibleGerby, RejectsInadmissibleTails) {
  auto g = ModularGraph::from_description({0}, {}, {0, 0});
  DegreeData d{{0}, {ContactType(1, 2), ContactType()}, 0};
  EXPECT_THROW(enumerate_compatible_gerby(g, d, 2), std::invalid_argument);
}

TEST(AdmissibleProperty, CountAndBruteForce) {
  for (std::int64_t r = 1; r <= 8; ++r) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::int64_t k = 0; k < r; ++k) {
        const auto vs = enumerate_admissible(n, r, k);
        std::set<std::vector<std::int64_t>> got;
        for (const auto& v : vs) {
          EXPECT_TRUE(is_admissible(v.entries, r, k));
          std::vector<std::int64_t> res;
          for (const auto& e : v.entries) res.push_back(e.residue(r));
          got.insert(res);
        }
        EXPECT_EQ(got.size(), vs.size());
        EXPECT_EQ(got, oracle::admissible_by_filter(n, r, k));
      }
    }
  }
}

TEST(SeparatingProperty, CutFormulaMatchesLeafPeeling) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = gen::uniform(rng, 1, 12);
    auto shape = gen::tree_with_loops(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 6)), 3, 4);
    auto g = shape.build();
    const auto d = gen::degree_data(rng, g.num_vertices(), g.num_tails(), r);
    const auto peeled = oracle::peel_branch_values(g, d, r);
    for (auto e : graphs::classify_edges(g).separating) {
      const auto near = separating_node_order(g, d, e, r);
      EXPECT_EQ(near.value(), peeled.at({e, g.vertex_of(g.edges()[e].first)}));
      const auto q = graphs::split_at_edge(g, e).second;
      const auto far = cut_contact_type(g, d, q, r);
      EXPECT_EQ(near.order(), far.order());
      EXPECT_TRUE((near.value() + far.value()).is_integer());
      EXPECT_EQ(r % near.order(), 0);
    }
  }
}

TEST(CompatibleProperty, CardinalityAndValidity) {
  gen::Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = gen::uniform(rng, 1, 12);
    auto g = gen::connected(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 4)), 3, 3).build();
    const auto d = gen::degree_data(rng, g.num_vertices(), g.num_tails(), r);
    const auto found = enumerate_compatible_gerby(g, d, r);
    const auto loops = graphs::classify_edges(g).non_separating.size();
    std::size_t expect = 1;
    for (std::size_t i = 0; i < loops; ++i) expect *= divisors(r).size();
    EXPECT_EQ(found.size(), expect);
    for (const auto& gg : found) {
      for (auto o : gg.edge_orders()) EXPECT_EQ(r % o, 0);
      for (std::size_t t = 0; t < g.num_tails(); ++t) EXPECT_EQ(gg.tail_order(t), d.tail_types[t].order());
    }
  }
}
