#pragma once

// JSON encodings shared by the CLI and downstream tools.
//
//   Rational          "p/q" (or "p" for integers)
//   CyclotomicNumber  {"order": N, "coeffs": ["p/q", ...]}  (phi(N) entries)
//   graph             {"vertices": [{"genus": g}, ...], "edges": [[a, b], ...], "tails": [v, ...]}
//   gerby decoration  {"tail_orders": [...], "edge_orders": [...]}
//   degree data       {"vertex_residues": [...], "tail_types": ["m/b", ...], "k": K}
//
// Parsing failures throw ConfigError carrying the offending field path.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "gerbe/admissibility.hpp"
#include "gerbe/cyclotomic.hpp"
#include "gerbe/graphs.hpp"
#include "gerbe/gw.hpp"
#include "gerbe/potential.hpp"
#include "gerbe/rational.hpp"

namespace gerbe::io {

using json = nlohmann::ordered_json;

class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

json to_json(const Rational& q);
Rational rational_from_json(const json& j, const std::string& field = "value");

json to_json(const CyclotomicNumber& z);
CyclotomicNumber cyclotomic_from_json(const json& j, const std::string& field = "value");

json to_json(const graphs::ModularGraph& graph);
graphs::ModularGraph graph_from_json(const json& j, const std::string& field = "graph");

json to_json(const graphs::GerbyGraph& graph);
graphs::GerbyGraph gerby_from_json(graphs::ModularGraph base, const json& j,
                                   const std::string& field = "gerby");

json to_json(const admissibility::DegreeData& data);
admissibility::DegreeData degree_from_json(const json& j, const std::string& field = "degree");

json to_json(const gw::MonomialKey& key);
json to_json(const gw::PotentialSeries& series);

/// Input of the gw commands.
struct GwConfig {
  gw::GerbeSpec spec;
  int basis_size = 1;
  int genus = 0;
  gw::Truncation truncation;
  gw::BaseTheoryTable table;
};

/// Rejects a "format" other than 1. With a seed, every key of `genus` in the
/// truncation is filled pseudo-randomly first and listed base invariants
/// override those values.
GwConfig gw_config_from_json(const json& j, std::optional<std::uint64_t> seed = std::nullopt);

/// Checks the optional top-level "format" field.
void check_format(const json& j);

/// Integer field helpers with range checks; exposed for the CLI.
std::int64_t require_int(const json& j, const std::string& key, const std::string& path, std::int64_t min_value);

}  // namespace gerbe::io
