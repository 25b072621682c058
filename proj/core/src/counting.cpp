#include "gerbe/counting.hpp"

#include <stdexcept>
#include <string>

namespace gerbe::counting {

namespace {

void require_r(std::int64_t r) {
  if (r < 1) throw std::invalid_argument("band order r must be >= 1");
}

// r^{2g - b_1} with g the arithmetic genus; the exponent 2 sum g_v + b_1 is never negative.
BigInt untwisted_torsion(const graphs::ModularGraph& graph, std::int64_t r) {
  const int exponent = 2 * graphs::total_genus(graph) - graphs::betti1(graph);
  return ipow(BigInt(static_cast<long>(r)), static_cast<unsigned long>(exponent));
}

}  // namespace

std::string_view to_string(LiftMode mode) {
  return mode == LiftMode::LoopOnly ? "loop-only" : "all-edges";
}

LiftMode parse_lift_mode(std::string_view text) {
  if (text == "loop-only") return LiftMode::LoopOnly;
  if (text == "all-edges") return LiftMode::AllEdges;
  throw std::invalid_argument("unknown lift-count mode '" + std::string(text) +
                              "' (expected loop-only or all-edges)");
}

BigInt prestable_picard_torsion(const graphs::ModularGraph& graph, std::int64_t r) {
  require_r(r);
  return untwisted_torsion(graph, r);
}

BigInt twisted_picard_torsion(const graphs::GerbyGraph& graph, std::int64_t r) {
  require_r(r);
  BigInt out = untwisted_torsion(graph.base(), r);
  for (auto e : graphs::classify_edges(graph.base()).non_separating) {
    out *= static_cast<long>(gcd64(graph.edge_order(e), r));
  }
  return out;
}

BigInt twisted_pic_quotient_order(const graphs::GerbyGraph& graph) {
  BigInt out = 1;
  for (auto g : graph.edge_orders()) out *= static_cast<long>(g);
  for (auto g : graph.tail_orders()) out *= static_cast<long>(g);
  return out;
}

LiftCount count_lifts(const graphs::GerbyGraph& graph, std::int64_t r, LiftMode mode) {
  require_r(r);
  const auto& base = graph.base();
  for (std::size_t i = 0; i < base.num_tails(); ++i) {
    if (r % graph.tail_order(i) != 0) {
      throw std::invalid_argument("tail " + std::to_string(i) + " has order not dividing r");
    }
  }
  for (std::size_t e = 0; e < base.num_edges(); ++e) {
    if (r % graph.edge_order(e) != 0) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has order " +
                                  std::to_string(graph.edge_order(e)) + " not dividing r = " +
                                  std::to_string(r));
    }
  }
  LiftCount out{untwisted_torsion(base, r), mode};
  if (mode == LiftMode::LoopOnly) {
    for (auto e : graphs::classify_edges(base).non_separating) {
      out.value *= static_cast<long>(euler_totient(graph.edge_order(e)));
    }
  } else {
    for (auto g : graph.edge_orders()) out.value *= static_cast<long>(euler_totient(g));
  }
  return out;
}

FiberCount fiber_point_count(const graphs::ModularGraph& graph, const admissibility::DegreeData& data,
                             std::int64_t r) {
  require_r(r);
  const auto compatible = admissibility::enumerate_compatible_gerby(graph, data, r);
  FiberCount out;
  out.value = 0;
  for (const auto& g : compatible) out.value += count_lifts(g, r, LiftMode::LoopOnly).value;
  out.graphs = compatible.size();
  const BigInt rr(static_cast<long>(r));
  out.closed_form = ipow(rr, static_cast<unsigned long>(2 * graphs::total_genus(graph)));

  const auto k = graphs::classify_edges(graph).non_separating.size();
  BigInt divisor_sum = 0;
  for (auto d : divisors(r)) divisor_sum += static_cast<long>(euler_totient(d));
  out.totient_identity = ipow(divisor_sum, k) == ipow(rr, k);
  return out;
}

Rational pushforward_degree(int genus, std::int64_t r) {
  require_r(r);
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  return rpow(BigInt(static_cast<long>(r)), 2L * genus - 1);
}

Rational stack_degree(const Rational& field_degree, std::int64_t delta_source, std::int64_t delta_target) {
  if (delta_source <= 0 || delta_target <= 0) {
    throw std::invalid_argument("generic stabilizer degrees must be positive");
  }
  if (field_degree.sign() <= 0) throw std::invalid_argument("field degree must be positive");
  return Rational(delta_target, delta_source) * field_degree;
}

}  // namespace gerbe::counting
