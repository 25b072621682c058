#pragma once

// Closed-form cardinalities attached to (gerby) dual graphs: r-torsion of
// Picard groups, numbers of lifts of a stable map to a mu_r-gerbe, the number
// of points in a generic fiber, and the resulting pushforward degree.
//
// Throughout, g is the arithmetic genus sum_v g_v + b_1 of the underlying
// dual graph, so the untwisted torsion count r^{2g - b_1} equals
// r^{2 sum g_v + b_1}.

#include <cstdint>
#include <string_view>

#include "gerbe/admissibility.hpp"
#include "gerbe/graphs.hpp"
#include "gerbe/polynomial.hpp"
#include "gerbe/rational.hpp"

namespace gerbe::counting {

using gerbe::euler_totient;

enum class LiftMode {
  /// totient product over non-separating edges only (default)
  LoopOnly,
  /// totient product over every edge
  AllEdges,
};

std::string_view to_string(LiftMode mode);
/// "loop-only" or "all-edges".
LiftMode parse_lift_mode(std::string_view text);

struct LiftCount {
  BigInt value;
  LiftMode mode = LiftMode::LoopOnly;
};

/// |Pic(C)[r]| for a prestable curve with dual graph `graph`: r^{2g - b_1}.
BigInt prestable_picard_torsion(const graphs::ModularGraph& graph, std::int64_t r);

/// |Pic(C~)[r]| = r^{2g - b_1} * prod_{non-separating e} gcd(gamma(e), r).
BigInt twisted_picard_torsion(const graphs::GerbyGraph& graph, std::int64_t r);

/// |Pic C~ / Pic C| = prod_edges gamma(e) * prod_tails gamma(p).
BigInt twisted_pic_quotient_order(const graphs::GerbyGraph& graph);

/// r^{2g - b_1} * prod phi(gamma(e)) over the edges selected by `mode`.
/// Rejects edge orders (and tail orders) that do not divide r.
LiftCount count_lifts(const graphs::GerbyGraph& graph, std::int64_t r, LiftMode mode = LiftMode::LoopOnly);

struct FiberCount {
  /// sum of loop-only lift counts over the compatible gerby graphs
  BigInt value;
  /// r^{2g}
  BigInt closed_form;
  /// number of gerby graphs summed over
  std::size_t graphs = 0;
  /// sum_{d_1..d_k | r} prod phi(d_l) == r^k for k = #non-separating edges
  bool totient_identity = false;

  bool matches_closed_form() const { return value == closed_form; }
};

FiberCount fiber_point_count(const graphs::ModularGraph& graph, const admissibility::DegreeData& data,
                             std::int64_t r);

/// r^{2g-1} as an exact rational (1/r for g = 0).
Rational pushforward_degree(int genus, std::int64_t r);

/// (delta_target / delta_source) * field_degree. All inputs must be positive.
Rational stack_degree(const Rational& field_degree, std::int64_t delta_source, std::int64_t delta_target);

}  // namespace gerbe::counting
