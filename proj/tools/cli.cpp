#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "gerbe/admissibility.hpp"
#include "gerbe/counting.hpp"
#include "gerbe/gw.hpp"
#include "gerbe/potential.hpp"
#include "gerbe/serialize.hpp"

namespace gerbe::cli {

namespace {

using io::json;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandSchema {
  std::set<std::string> required;
  std::set<std::string> allowed;
};

const std::map<std::string, CommandSchema>& schemas() {
  static const std::map<std::string, CommandSchema> table = {
      {"enumerate-admissible", {{"r", "n", "k"}, {"r", "n", "k"}}},
      {"compatible-graphs", {{"input"}, {"input", "r"}}},
      {"count-lifts", {{"input"}, {"input", "r", "mode"}}},
      {"picard-torsion", {{"input"}, {"input", "r"}}},
      {"fiber-count", {{"input"}, {"input", "r"}}},
      {"degree", {{}, {"genus", "r", "field-degree", "delta-source", "delta-target"}}},
      {"decompose", {{"input"}, {"input", "seed", "parallel"}}},
      {"verify", {{"input"}, {"input", "seed", "parallel"}}},
  };
  return table;
}

std::set<std::string> flags_present(const RunConfig& c) {
  std::set<std::string> s;
  if (c.input_path) s.insert("input");
  if (c.r) s.insert("r");
  if (c.n) s.insert("n");
  if (c.k) s.insert("k");
  if (c.genus) s.insert("genus");
  if (c.seed) s.insert("seed");
  if (c.mode) s.insert("mode");
  if (c.field_degree) s.insert("field-degree");
  if (c.delta_source) s.insert("delta-source");
  if (c.delta_target) s.insert("delta-target");
  if (c.parallel != 1) s.insert("parallel");
  return s;
}

void validate(const RunConfig& c) {
  auto it = schemas().find(c.command);
  if (it == schemas().end()) throw InputError("unknown command '" + c.command + "'");
  const auto present = flags_present(c);
  for (const auto& f : present) {
    if (!it->second.allowed.contains(f)) throw InputError("--" + f + " is not accepted by " + c.command);
  }
  for (const auto& f : it->second.required) {
    if (!present.contains(f)) throw InputError(c.command + " requires --" + f);
  }
  if (c.command == "degree") {
    const bool push = c.genus || c.r;
    const bool stack = c.field_degree || c.delta_source || c.delta_target;
    if (push == stack) {
      throw InputError("degree takes either --genus and --r, or --field-degree, --delta-source and --delta-target");
    }
    if (push && !(c.genus && c.r)) throw InputError("degree requires both --genus and --r");
    if (stack && !(c.field_degree && c.delta_source && c.delta_target)) {
      throw InputError("degree requires --field-degree, --delta-source and --delta-target together");
    }
  }
  if (c.parallel < 1) throw InputError("--parallel must be >= 1");
}

json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::int64_t band_order(const RunConfig& c, const json& doc) {
  if (c.r) {
    if (*c.r < 1) throw InputError("--r must be >= 1");
    return *c.r;
  }
  return io::require_int(doc, "r", "", 1);
}

json echo_inputs(const RunConfig& c) {
  json in = json::object();
  if (c.input_path) in["input"] = *c.input_path;
  if (c.r) in["r"] = *c.r;
  if (c.n) in["n"] = *c.n;
  if (c.k) in["k"] = *c.k;
  if (c.genus) in["genus"] = *c.genus;
  if (c.seed) in["seed"] = *c.seed;
  if (c.mode) in["mode"] = *c.mode;
  if (c.field_degree) in["field_degree"] = *c.field_degree;
  if (c.delta_source) in["delta_source"] = *c.delta_source;
  if (c.delta_target) in["delta_target"] = *c.delta_target;
  return in;
}

std::string big(const BigInt& v) { return v.get_str(); }

struct Outcome {
  json doc;
  int code = kOk;
};

Outcome enumerate_admissible(const RunConfig& c) {
  if (*c.r < 1) throw InputError("--r must be >= 1");
  if (*c.n < 0) throw InputError("--n must be >= 0");
  const auto vectors = admissibility::enumerate_admissible(static_cast<std::size_t>(*c.n), *c.r, *c.k);
  json list = json::array();
  for (const auto& v : vectors) list.push_back(v.to_strings());
  return {json{{"vectors", std::move(list)}, {"count", vectors.size()}}};
}

Outcome compatible_graphs(const RunConfig& c) {
  const auto doc = load_input(*c.input_path);
  io::check_format(doc);
  const auto r = band_order(c, doc);
  auto graph = io::graph_from_json(doc.contains("graph") ? doc["graph"] : json(), "graph");
  const auto data = io::degree_from_json(doc.contains("degree") ? doc["degree"] : json(), "degree");
  const auto found = admissibility::enumerate_compatible_gerby(graph, data, r);
  json list = json::array();
  for (const auto& g : found) list.push_back(io::to_json(g));
  return {json{{"graph", io::to_json(graph)}, {"graphs", std::move(list)}, {"count", found.size()}}};
}

graphs::GerbyGraph load_gerby(const json& doc) {
  auto graph = io::graph_from_json(doc.contains("graph") ? doc["graph"] : json(), "graph");
  if (!doc.contains("gerby")) {
    std::vector<std::int64_t> tails(graph.num_tails(), 1), edges(graph.num_edges(), 1);
    return graphs::GerbyGraph::decorate(std::move(graph), tails, edges);
  }
  return io::gerby_from_json(std::move(graph), doc["gerby"], "gerby");
}

Outcome count_lifts(const RunConfig& c) {
  const auto doc = load_input(*c.input_path);
  io::check_format(doc);
  const auto r = band_order(c, doc);
  std::string mode_text = "loop-only";
  if (c.mode) {
    mode_text = *c.mode;
  } else if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw io::ConfigError("mode", "expected a string");
    mode_text = doc["mode"].get<std::string>();
  }
  const auto mode = counting::parse_lift_mode(mode_text);
  const auto gerby = load_gerby(doc);
  const auto lifts = counting::count_lifts(gerby, r, mode);
  const std::string formula = mode == counting::LiftMode::LoopOnly
                                  ? "r^(2g-b1) * prod_{non-separating e} phi(gamma(e))"
                                  : "r^(2g-b1) * prod_{all e} phi(gamma(e))";
  return {json{{"value", big(lifts.value)}, {"formula", formula}, {"mode", std::string(counting::to_string(mode))}}};
}

Outcome picard_torsion(const RunConfig& c) {
  const auto doc = load_input(*c.input_path);
  io::check_format(doc);
  const auto r = band_order(c, doc);
  if (!doc.contains("gerby")) {
    const auto graph = io::graph_from_json(doc.contains("graph") ? doc["graph"] : json(), "graph");
    return {json{{"value", big(counting::prestable_picard_torsion(graph, r))},
                 {"formula", "r^(2g-b1)"},
                 {"curve", "prestable"}}};
  }
  const auto gerby = load_gerby(doc);
  return {json{{"value", big(counting::twisted_picard_torsion(gerby, r))},
               {"formula", "r^(2g-b1) * prod_{non-separating e} gcd(gamma(e), r)"},
               {"curve", "twisted"},
               {"quotient_order", big(counting::twisted_pic_quotient_order(gerby))}}};
}

Outcome fiber_count(const RunConfig& c) {
  const auto doc = load_input(*c.input_path);
  io::check_format(doc);
  const auto r = band_order(c, doc);
  const auto graph = io::graph_from_json(doc.contains("graph") ? doc["graph"] : json(), "graph");
  const auto data = io::degree_from_json(doc.contains("degree") ? doc["degree"] : json(), "degree");
  const auto fc = counting::fiber_point_count(graph, data, r);
  return {json{{"value", big(fc.value)},
               {"formula", "sum over compatible gerby graphs of r^(2g-b1) * prod_{non-separating e} phi(gamma(e))"},
               {"closed_form", big(fc.closed_form)},
               {"matches_closed_form", fc.matches_closed_form()},
               {"totient_identity", fc.totient_identity},
               {"gerby_graphs", fc.graphs}}};
}

Outcome degree(const RunConfig& c) {
  if (c.genus) {
    if (*c.genus < 0) throw InputError("--genus must be >= 0");
    if (*c.r < 1) throw InputError("--r must be >= 1");
    const auto v = counting::pushforward_degree(static_cast<int>(*c.genus), *c.r);
    return {json{{"value", v.to_string()}, {"formula", "r^(2g-1)"}}};
  }
  const auto field = Rational::parse(*c.field_degree);
  const auto v = counting::stack_degree(field, *c.delta_source, *c.delta_target);
  return {json{{"value", v.to_string()}, {"formula", "(delta_target/delta_source) * field_degree"}}};
}

json report_to_json(const gw::DecompositionReport& rep) {
  json out{{"status", rep.pass ? "pass" : "fail"},
           {"terms_compared", rep.terms_compared},
           {"lhs_terms", rep.lhs_terms},
           {"rhs_terms", rep.rhs_terms},
           {"missing_keys", rep.missing_keys}};
  if (rep.first_difference) {
    out["first_difference"] = json{{"key", io::to_json(rep.first_difference->key)},
                                   {"lhs", io::to_json(rep.first_difference->lhs)},
                                   {"rhs", io::to_json(rep.first_difference->rhs)}};
  } else {
    out["first_difference"] = nullptr;
  }
  return out;
}

Outcome decompose(const RunConfig& c) {
  const auto cfg = io::gw_config_from_json(load_input(*c.input_path), c.seed);
  gw::Diagnostics diag;
  const auto series = gw::decompose(cfg.spec, cfg.table, cfg.genus, cfg.truncation, {gw::RhoMethod::CharacterSum, c.parallel}, &diag);
  return {json{{"scalar", rpow(BigInt(static_cast<long>(cfg.spec.r)), 2L * cfg.genus - 2).to_string()},
               {"series", io::to_json(series)},
               {"missing_keys", std::vector<std::string>(diag.missing_keys.begin(), diag.missing_keys.end())}}};
}

Outcome verify(const RunConfig& c) {
  const auto cfg = io::gw_config_from_json(load_input(*c.input_path), c.seed);
  const auto rep = gw::verify_decomposition(cfg.spec, cfg.table, cfg.genus, cfg.truncation,
                                            {gw::RhoMethod::CharacterSum, c.parallel});
  return {report_to_json(rep), rep.pass ? kOk : kVerificationFailed};
}

Outcome dispatch(const RunConfig& c) {
  static const std::map<std::string, std::function<Outcome(const RunConfig&)>> table = {
      {"enumerate-admissible", enumerate_admissible},
      {"compatible-graphs", compatible_graphs},
      {"count-lifts", count_lifts},
      {"picard-torsion", picard_torsion},
      {"fiber-count", fiber_count},
      {"degree", degree},
      {"decompose", decompose},
      {"verify", verify},
  };
  return table.at(c.command)(c);
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  CLI::App app{"Exact combinatorics and Gromov-Witten decomposition for mu_r-banded gerbes", "gerbectl"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output_path, "Write the JSON document to this file instead of stdout");
  };
  auto add_input = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("--input,-i", cfg.input_path, what)->check(CLI::ExistingFile);
  };

  auto* adm = app.add_subcommand("enumerate-admissible", "List all admissible contact-type vectors over mu_r");
  adm->add_option("--r", cfg.r, "Band order r >= 1");
  adm->add_option("--n", cfg.n, "Number of marked points n >= 0");
  adm->add_option("--k", cfg.k, "Degree residue k (taken mod r)");

  auto* cg = app.add_subcommand("compatible-graphs", "Enumerate gerby graphs compatible with tail data");
  add_input(cg, "JSON with \"r\", \"graph\" and \"degree\"");
  cg->add_option("--r", cfg.r, "Override the band order from the input");

  auto* cl = app.add_subcommand("count-lifts", "Number of twisted stable maps over a gerby graph");
  add_input(cl, "JSON with \"r\", \"graph\", \"gerby\" and optional \"mode\"");
  cl->add_option("--r", cfg.r, "Override the band order from the input");
  cl->add_option("--mode", cfg.mode, "loop-only (default) or all-edges");

  auto* pt = app.add_subcommand("picard-torsion", "Order of the r-torsion of the Picard group");
  add_input(pt, "JSON with \"r\", \"graph\" and, for twisted curves, \"gerby\"");
  pt->add_option("--r", cfg.r, "Override the band order from the input");

  auto* fc = app.add_subcommand("fiber-count", "Points in a generic fiber, summed over compatible gerby graphs");
  add_input(fc, "JSON with \"r\", \"graph\" and \"degree\"");
  fc->add_option("--r", cfg.r, "Override the band order from the input");

  auto* dg = app.add_subcommand("degree", "Pushforward degree r^(2g-1), or a stack degree from its ingredients");
  dg->add_option("--genus", cfg.genus, "Genus g >= 0");
  dg->add_option("--r", cfg.r, "Band order r >= 1");
  dg->add_option("--field-degree", cfg.field_degree, "Degree of the function field extension (rational \"p/q\")");
  dg->add_option("--delta-source", cfg.delta_source, "Generic stabilizer order of the source");
  dg->add_option("--delta-target", cfg.delta_target, "Generic stabilizer order of the target");

  auto* dc = app.add_subcommand("decompose", "Character-basis potential of the gerbe assembled from the base");
  add_input(dc, "Gromov-Witten configuration JSON");
  dc->add_option("--seed", cfg.seed, "Fill the base table with deterministic pseudo-random rationals");
  dc->add_option("--parallel", cfg.parallel, "Worker threads (results do not depend on it)");

  auto* vf = app.add_subcommand("verify", "Check the decomposition identity term by term");
  add_input(vf, "Gromov-Witten configuration JSON");
  vf->add_option("--seed", cfg.seed, "Fill the base table with deterministic pseudo-random rationals");
  vf->add_option("--parallel", cfg.parallel, "Worker threads (results do not depend on it)");

  for (auto* sub : {adm, cg, cl, pt, fc, dg, dc, vf}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    exit_code = app.exit(e, out, err);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    exit_code = kInputError;
    return std::nullopt;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Outcome outcome;
  try {
    validate(config);
    outcome = dispatch(config);
  } catch (const io::ConfigError& e) {
    err << "gerbectl " << config.command << ": input error at " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "gerbectl " << config.command << ": " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "gerbectl " << config.command << ": " << e.what() << '\n';
    return kInputError;
  }

  json doc{{"format", 1}, {"command", config.command}, {"inputs", echo_inputs(config)}, {"result", outcome.doc}};
  // Keys sorted for byte-stable output.
  const std::string text = nlohmann::json::parse(doc.dump()).dump(2) + "\n";
  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) {
      err << "gerbectl: cannot write '" << *config.output_path << "'\n";
      return kInputError;
    }
    file << text;
  } else {
    out << text;
  }
  return outcome.code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto cfg = parse_args(argc, argv, out, err, code);
  if (!cfg) return code;
  return run(*cfg, out, err);
}

}  // namespace gerbe::cli
