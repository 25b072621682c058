#include "gerbe/admissibility.hpp"

#include <charconv>
#include <stdexcept>

#include "gerbe/polynomial.hpp"

namespace gerbe::admissibility {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("malformed contact type '" + std::string(whole) + "'");
  }
  return v;
}

void require_r(std::int64_t r) {
  if (r < 1) throw std::invalid_argument("band order r must be >= 1");
}

}  // namespace

ContactType::ContactType(std::int64_t m, std::int64_t b) : m_(m), b_(b) {
  if (b < 1) throw std::invalid_argument("contact type order must be >= 1");
  if (m < 0 || m >= b) throw std::invalid_argument("contact type numerator must lie in [0, b)");
  if (gcd64(m, b) != 1) {
    throw std::invalid_argument("contact type " + std::to_string(m) + "/" + std::to_string(b) +
                                " is not in lowest terms");
  }
}

ContactType ContactType::from_residue(std::int64_t residue, std::int64_t r) {
  require_r(r);
  const auto a = mod64(residue, r);
  const auto g = gcd64(a, r);
  return ContactType(a / g, r / g);
}

ContactType ContactType::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (parse_int(text, text) != 0) throw std::invalid_argument("contact type must be written m/b");
    return ContactType();
  }
  return ContactType(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::int64_t ContactType::residue(std::int64_t r) const {
  if (r < 1 || r % b_ != 0) {
    throw std::invalid_argument("contact type order " + std::to_string(b_) + " does not divide r = " +
                                std::to_string(r));
  }
  return m_ * (r / b_);
}

ContactType ContactType::complement() const { return ContactType(mod64(-m_, b_), b_); }

std::string ContactType::to_string() const { return std::to_string(m_) + "/" + std::to_string(b_); }

std::vector<std::string> AdmissibleVector::to_strings() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.to_string());
  return out;
}

bool is_admissible(std::span<const ContactType> entries, std::int64_t r, std::int64_t k) {
  require_r(r);
  Rational total = -Rational(k, r);
  for (const auto& e : entries) {
    if (r % e.order() != 0) return false;
    total += e.value();
  }
  return total.is_integer();
}

std::vector<AdmissibleVector> enumerate_admissible(std::size_t n, std::int64_t r, std::int64_t k) {
  require_r(r);
  const auto kr = mod64(k, r);
  std::vector<AdmissibleVector> out;
  if (n == 0) {
    if (kr == 0) out.push_back({{}, r, kr});
    return out;
  }
  // The first n-1 residues are free; the last one is forced.
  std::vector<std::int64_t> free(n - 1, 0);
  while (true) {
    std::int64_t sum = 0;
    AdmissibleVector v{{}, r, kr};
    v.entries.reserve(n);
    for (auto a : free) {
      sum += a;
      v.entries.push_back(ContactType::from_residue(a, r));
    }
    v.entries.push_back(ContactType::from_residue(kr - sum, r));
    out.push_back(std::move(v));

    std::size_t i = free.size();
    for (; i-- > 0;) {
      if (++free[i] < r) break;
      free[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

void validate_degree_data(const graphs::ModularGraph& graph, const DegreeData& data, std::int64_t r) {
  require_r(r);
  if (data.vertex_residues.size() != graph.num_vertices()) {
    throw std::invalid_argument("degree data has " + std::to_string(data.vertex_residues.size()) +
                                " vertex residues for a graph with " +
                                std::to_string(graph.num_vertices()) + " vertices");
  }
  if (data.tail_types.size() != graph.num_tails()) {
    throw std::invalid_argument("degree data has " + std::to_string(data.tail_types.size()) +
                                " tail contact types for a graph with " +
                                std::to_string(graph.num_tails()) + " tails");
  }
  for (const auto& t : data.tail_types) {
    if (r % t.order() != 0) {
      throw std::invalid_argument("tail contact type " + t.to_string() + " has order not dividing r");
    }
  }
  std::int64_t sum = 0;
  for (auto kv : data.vertex_residues) sum = mod64(sum + kv, r);
  if (sum != mod64(data.k, r)) {
    throw std::invalid_argument("vertex residues sum to " + std::to_string(sum) + " but k = " +
                                std::to_string(mod64(data.k, r)) + " (mod r)");
  }
}

ContactType cut_contact_type(const graphs::ModularGraph& graph, const DegreeData& data,
                             std::span<const graphs::VertexId> side, std::int64_t r) {
  std::vector<bool> in_side(graph.num_vertices(), false);
  for (auto v : side) in_side.at(v) = true;
  Rational acc;
  for (auto v : side) acc += Rational(data.vertex_residues.at(v), r);
  for (std::size_t i = 0; i < graph.num_tails(); ++i) {
    if (in_side[graph.vertex_of(graph.tails()[i])]) acc -= data.tail_types.at(i).value();
  }
  const auto f = acc.frac();
  return ContactType(f.numerator().get_si(), f.denominator().get_si());
}

ContactType separating_node_order(const graphs::ModularGraph& graph, const DegreeData& data,
                                  std::size_t edge, std::int64_t r) {
  validate_degree_data(graph, data, r);
  auto [near_side, far_side] = graphs::split_at_edge(graph, edge);
  return cut_contact_type(graph, data, near_side, r);
}

std::vector<graphs::GerbyGraph> enumerate_compatible_gerby(const graphs::ModularGraph& graph,
                                                           const DegreeData& data, std::int64_t r) {
  validate_degree_data(graph, data, r);
  if (!is_admissible(data.tail_types, r, data.k)) {
    throw std::invalid_argument("tail contact types are not admissible for the given (r, k)");
  }
  std::vector<std::int64_t> tail_orders;
  for (const auto& t : data.tail_types) tail_orders.push_back(t.order());

  const auto cls = graphs::classify_edges(graph);
  std::vector<std::int64_t> edge_orders(graph.num_edges(), 1);
  for (auto e : cls.separating) {
    auto [near_side, far_side] = graphs::split_at_edge(graph, e);
    edge_orders[e] = cut_contact_type(graph, data, near_side, r).order();
  }

  const auto divs = divisors(r);
  const auto& loops = cls.non_separating;
  std::vector<std::size_t> choice(loops.size(), 0);
  std::vector<graphs::GerbyGraph> out;
  while (true) {
    for (std::size_t i = 0; i < loops.size(); ++i) edge_orders[loops[i]] = divs[choice[i]];
    out.push_back(graphs::GerbyGraph::decorate(graph, tail_orders, edge_orders));
    std::size_t i = loops.size();
    for (; i-- > 0;) {
      if (++choice[i] < divs.size()) break;
      choice[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace gerbe::admissibility
