#include "gerbe/serialize.hpp"

#include "gerbe/polynomial.hpp"

namespace gerbe::io {

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::int64_t as_int(const json& j, const std::string& path, std::int64_t min_value) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < min_value) throw ConfigError(path, "must be >= " + std::to_string(min_value));
  return v;
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(join(path, key), "missing required field");
  return *it;
}

const json& require_array(const json& j, const std::string& key, const std::string& path) {
  const auto& a = require(j, key, path);
  if (!a.is_array()) throw ConfigError(join(path, key), "expected an array");
  return a;
}

std::vector<std::int64_t> int_array(const json& a, const std::string& path, std::int64_t min_value) {
  if (!a.is_array()) throw ConfigError(path, "expected an array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(as_int(a[i], index(path, i), min_value));
  return out;
}

template <typename Fn>
auto rethrow_as_config(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(path, e.what());
  }
}

}  // namespace

std::int64_t require_int(const json& j, const std::string& key, const std::string& path, std::int64_t min_value) {
  return as_int(require(j, key, path), join(path, key), min_value);
}

void check_format(const json& j) {
  if (!j.is_object()) throw ConfigError("<root>", "expected a JSON object");
  if (auto it = j.find("format"); it != j.end()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() != 1) {
      throw ConfigError("format", "unsupported configuration format (expected 1)");
    }
  }
}

json to_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ConfigError(field, "expected a rational string \"p/q\"");
  return rethrow_as_config(field, [&] { return Rational::parse(j.get<std::string>()); });
}

json to_json(const CyclotomicNumber& z) {
  json coeffs = json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(to_json(c));
  return json{{"order", z.order()}, {"coeffs", std::move(coeffs)}};
}

CyclotomicNumber cyclotomic_from_json(const json& j, const std::string& field) {
  const auto order = require_int(j, "order", field, 1);
  const auto& arr = require_array(j, "coeffs", field);
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < arr.size(); ++i) coeffs.push_back(rational_from_json(arr[i], index(join(field, "coeffs"), i)));
  if (static_cast<std::int64_t>(coeffs.size()) != euler_totient(order)) {
    throw ConfigError(join(field, "coeffs"), "expected phi(" + std::to_string(order) + ") = " +
                                                 std::to_string(euler_totient(order)) + " coefficients");
  }
  return CyclotomicNumber::from_coefficients(order, std::move(coeffs));
}

json to_json(const graphs::ModularGraph& graph) {
  json vertices = json::array();
  for (auto g : graph.vertex_genera()) vertices.push_back(json{{"genus", g}});
  json edges = json::array();
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    auto [a, b] = graph.endpoints(e);
    edges.push_back(json::array({a, b}));
  }
  json tails = json::array();
  for (auto f : graph.tails()) tails.push_back(graph.vertex_of(f));
  return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}, {"tails", std::move(tails)}};
}

graphs::ModularGraph graph_from_json(const json& j, const std::string& field) {
  const auto& vs = require_array(j, "vertices", field);
  if (vs.empty()) throw ConfigError(join(field, "vertices"), "at least one vertex is required");
  std::vector<int> genera;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    genera.push_back(static_cast<int>(require_int(vs[i], "genus", index(join(field, "vertices"), i), 0)));
  }
  const auto nv = static_cast<std::int64_t>(genera.size());
  auto vertex = [&](const json& x, const std::string& path) {
    const auto v = as_int(x, path, 0);
    if (v >= nv) throw ConfigError(path, "vertex index out of range");
    return static_cast<graphs::VertexId>(v);
  };
  std::vector<std::pair<graphs::VertexId, graphs::VertexId>> edges;
  if (j.contains("edges")) {
    const auto& es = require_array(j, "edges", field);
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto path = index(join(field, "edges"), i);
      if (!es[i].is_array() || es[i].size() != 2) throw ConfigError(path, "expected a pair [v_a, v_b]");
      edges.emplace_back(vertex(es[i][0], path + "[0]"), vertex(es[i][1], path + "[1]"));
    }
  }
  std::vector<graphs::VertexId> tails;
  if (j.contains("tails")) {
    const auto& ts = require_array(j, "tails", field);
    for (std::size_t i = 0; i < ts.size(); ++i) tails.push_back(vertex(ts[i], index(join(field, "tails"), i)));
  }
  return rethrow_as_config(field, [&] { return graphs::ModularGraph::from_description(genera, edges, tails); });
}

json to_json(const graphs::GerbyGraph& graph) {
  return json{{"tail_orders", graph.tail_orders()}, {"edge_orders", graph.edge_orders()}};
}

graphs::GerbyGraph gerby_from_json(graphs::ModularGraph base, const json& j, const std::string& field) {
  std::vector<std::int64_t> tails, edges;
  if (j.contains("tail_orders")) tails = int_array(j["tail_orders"], join(field, "tail_orders"), 1);
  if (j.contains("edge_orders")) edges = int_array(j["edge_orders"], join(field, "edge_orders"), 1);
  return rethrow_as_config(field, [&] { return graphs::GerbyGraph::decorate(std::move(base), tails, edges); });
}

json to_json(const admissibility::DegreeData& data) {
  json types = json::array();
  for (const auto& t : data.tail_types) types.push_back(t.to_string());
  return json{{"vertex_residues", data.vertex_residues}, {"tail_types", std::move(types)}, {"k", data.k}};
}

admissibility::DegreeData degree_from_json(const json& j, const std::string& field) {
  admissibility::DegreeData out;
  out.vertex_residues = int_array(require(j, "vertex_residues", field), join(field, "vertex_residues"), 0);
  if (j.contains("tail_types")) {
    const auto& ts = require_array(j, "tail_types", field);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto path = index(join(field, "tail_types"), i);
      if (!ts[i].is_string()) throw ConfigError(path, "expected a contact type string \"m/b\"");
      out.tail_types.push_back(
          rethrow_as_config(path, [&] { return admissibility::ContactType::parse(ts[i].get<std::string>()); }));
    }
  }
  if (j.contains("k")) {
    out.k = as_int(j["k"], join(field, "k"), 0);
  } else {
    for (auto kv : out.vertex_residues) out.k += kv;
  }
  return out;
}

json to_json(const gw::MonomialKey& key) {
  json vars = json::array();
  for (const auto& v : key.variables) {
    vars.push_back(json{{"class", v.class_index}, {"label", v.label}, {"psi", v.psi_power}});
  }
  return json{{"beta", key.beta.exponents}, {"variables", std::move(vars)}};
}

json to_json(const gw::PotentialSeries& series) {
  json terms = json::array();
  for (const auto& [key, c] : series.terms()) {
    auto t = to_json(key);
    t["coefficient"] = to_json(c.embed(lcm64(c.order(), series.r())));
    terms.push_back(std::move(t));
  }
  return json{{"basis", std::string(gw::to_string(series.basis()))}, {"r", series.r()}, {"terms", std::move(terms)}};
}

GwConfig gw_config_from_json(const json& j, std::optional<std::uint64_t> seed) {
  check_format(j);
  GwConfig cfg{{}, 1, 0, {}, gw::BaseTheoryTable(1, 0, {})};
  cfg.spec.r = require_int(j, "r", "", 1);
  const auto m = static_cast<std::size_t>(require_int(j, "beta_rank", "", 0));
  cfg.spec.pairing = int_array(require(j, "pairing", ""), "pairing", 0);
  if (cfg.spec.pairing.size() != m) {
    throw ConfigError("pairing", "expected beta_rank = " + std::to_string(m) + " residues");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (cfg.spec.pairing[i] >= cfg.spec.r) throw ConfigError(index("pairing", i), "residue must be < r");
  }
  cfg.basis_size = static_cast<int>(require_int(j, "basis_size", "", 1));
  cfg.genus = static_cast<int>(require_int(j, "genus", "", 0));

  const auto& tr = require(j, "truncation", "");
  cfg.truncation.n_max = static_cast<std::size_t>(require_int(tr, "n_max", "truncation", 0));
  cfg.truncation.j_max = static_cast<int>(require_int(tr, "j_max", "truncation", 0));
  const auto& betas = require_array(tr, "betas", "truncation");
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const auto path = index("truncation.betas", i);
    gw::CurveClass beta{int_array(betas[i], path, 0)};
    if (beta.exponents.size() != m) throw ConfigError(path, "curve class must have beta_rank entries");
    cfg.truncation.betas.push_back(std::move(beta));
  }

  cfg.table = rethrow_as_config("truncation", [&] {
    return seed ? gw::BaseTheoryTable::seeded(cfg.basis_size, m, cfg.truncation, cfg.genus, *seed)
                : gw::BaseTheoryTable(cfg.basis_size, m, cfg.truncation);
  });

  if (j.contains("base_invariants")) {
    const auto& entries = require_array(j, "base_invariants", "");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto path = index("base_invariants", i);
      const auto& e = entries[i];
      const auto genus = static_cast<int>(require_int(e, "genus", path, 0));
      gw::CurveClass beta{int_array(require(e, "beta", path), join(path, "beta"), 0)};
      std::vector<gw::Insertion> ins;
      const auto& arr = require_array(e, "insertions", path);
      for (std::size_t t = 0; t < arr.size(); ++t) {
        const auto ipath = index(join(path, "insertions"), t);
        ins.push_back({static_cast<int>(require_int(arr[t], "class", ipath, 0)),
                       static_cast<int>(require_int(arr[t], "psi", ipath, 0))});
      }
      const auto value = rational_from_json(require(e, "value", path), join(path, "value"));
      rethrow_as_config(path, [&] {
        if (seed) {
          cfg.table.assign(genus, beta, std::move(ins), value);
        } else {
          cfg.table.set(genus, beta, std::move(ins), value);
        }
        return 0;
      });
    }
  }
  return cfg;
}

}  // namespace gerbe::io
