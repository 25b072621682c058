#include <gtest/gtest.h>

#include "printers.hpp"

#include "gerbe/serialize.hpp"
#include "generators.hpp"

using namespace gerbe;
using gerbe::io::ConfigError;
using gerbe::io::json;

TEST(Serialize, RationalRoundTrip) {
  EXPECT_EQ(io::to_json(Rational(-3, 6)).get<std::string>(), "-1/2");
  EXPECT_EQ(io::rational_from_json(json("7/14")), Rational(1, 2));
  EXPECT_EQ(io::rational_from_json(json(4)), Rational(4));
  EXPECT_THROW(io::rational_from_json(json(0.5)), ConfigError);
  EXPECT_THROW(io::rational_from_json(json("1/0")), ConfigError);
}

TEST(Serialize, CyclotomicRoundTripProperty) {
  gen::Rng rng(71);
  for (int i = 0; i < 1000; ++i) {
    const auto z = gen::cyclotomic(rng, gen::uniform(rng, 1, 36));
    const auto text = io::to_json(z).dump();
    EXPECT_EQ(io::cyclotomic_from_json(json::parse(text)), z) << text;
    EXPECT_EQ(io::to_json(io::cyclotomic_from_json(json::parse(text))).dump(), text);
  }
}

TEST(Serialize, CyclotomicRejectsWrongLength) {
  try {
    io::cyclotomic_from_json(json::parse(R"({"order": 6, "coeffs": ["1"]})"), "z");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "z.coeffs");
  }
}

TEST(Serialize, GraphRoundTripProperty) {
  gen::Rng rng(72);
  for (int i = 0; i < 200; ++i) {
    const auto g = gen::connected(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 5)), 4, 3).build();
    const auto back = io::graph_from_json(json::parse(io::to_json(g).dump()));
    EXPECT_EQ(io::to_json(back), io::to_json(g));
    EXPECT_EQ(back.num_edges(), g.num_edges());
  }
}

TEST(Serialize, GraphErrorsNameTheField) {
  auto field_of = [](const char* text) {
    try {
      io::graph_from_json(json::parse(text));
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  EXPECT_EQ(field_of(R"({"vertices": []})"), "graph.vertices");
  EXPECT_EQ(field_of(R"({"vertices": [{"genus": -1}]})"), "graph.vertices[0].genus");
  EXPECT_EQ(field_of(R"({"vertices": [{"genus": 0}], "edges": [[0, 3]]})"), "graph.edges[0][1]");
  EXPECT_EQ(field_of(R"({"vertices": [{"genus": 0}, {"genus": 0}]})"), "graph");
}

TEST(Serialize, DegreeData) {
  const auto d = io::degree_from_json(json::parse(R"({"vertex_residues": [1, 2], "tail_types": ["1/3", "0"]})"));
  EXPECT_EQ(d.k, 3);
  EXPECT_EQ(d.tail_types[0], admissibility::ContactType(1, 3));
  EXPECT_THROW(io::degree_from_json(json::parse(R"({"vertex_residues": [1], "tail_types": ["2/4"]})")), ConfigError);
}

TEST(Serialize, GwConfig) {
  const auto j = json::parse(R"({
    "format": 1, "r": 3, "beta_rank": 1, "pairing": [1], "basis_size": 1, "genus": 0,
    "truncation": {"n_max": 1, "j_max": 0, "betas": [[0], [1]]},
    "base_invariants": [{"genus": 0, "beta": [1], "insertions": [{"class": 0, "psi": 0}], "value": "2/3"}]
  })");
  const auto cfg = io::gw_config_from_json(j);
  EXPECT_EQ(cfg.table.size(), 1u);
  EXPECT_EQ(cfg.table.lookup(0, {{1}}, {{0, 0}}), Rational(2, 3));
  const auto seeded = io::gw_config_from_json(j, 4);
  EXPECT_EQ(seeded.table.lookup(0, {{1}}, {{0, 0}}), Rational(2, 3));
  EXPECT_GT(seeded.table.size(), 1u);

  auto bad = j;
  bad["format"] = 2;
  EXPECT_THROW(io::gw_config_from_json(bad), ConfigError);
  bad = j;
  bad["pairing"] = json::array({3});
  EXPECT_THROW(io::gw_config_from_json(bad), ConfigError);
  bad = j;
  bad["base_invariants"][0]["beta"] = json::array({5});
  try {
    io::gw_config_from_json(bad);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "base_invariants[0]");
  }
}
