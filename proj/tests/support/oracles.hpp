#pragma once
// Slow, independent re-derivations used to cross-check the library.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gerbe/admissibility.hpp"
#include "gerbe/cyclotomic.hpp"
#include "gerbe/graphs.hpp"
#include "gerbe/gw.hpp"
#include "gerbe/rational.hpp"

namespace oracle {

using gerbe::Rational;

/// Residue tuples in mu_r^n whose fractions a_i/r sum to k/r mod 1, found by
/// testing every tuple.
std::set<std::vector<std::int64_t>> admissible_by_filter(std::size_t n, std::int64_t r, std::int64_t k);

/// Edges whose deletion disconnects the graph, by deleting each edge and flood filling.
std::set<std::size_t> bridges_by_deletion(const gerbe::graphs::ModularGraph& g);

/// For a graph whose only cycles are self-loops: the branch value at each end of
/// every bridge, found by peeling leaves. Key (edge, vertex) -> value in [0, 1).
std::map<std::pair<std::size_t, std::size_t>, Rational> peel_branch_values(
    const gerbe::graphs::ModularGraph& g, const gerbe::admissibility::DegreeData& data, std::int64_t r);

std::int64_t totient_by_count(std::int64_t n);

/// #{x in Z/gamma : r x = 0}
std::int64_t torsion_points(std::int64_t gamma, std::int64_t r);

/// exp(2 pi i e / N) summed as a plain power sum then compared via from_power_sum.
gerbe::CyclotomicNumber geometric_sum(std::int64_t order);

/// r^{-n} sum_{g in mu_r^n} prod_i chi_{rho_i}(g_i^{-1}) <g_1 a_1, ..., g_n a_n>, term by term.
gerbe::CyclotomicNumber rho_double_sum(const gerbe::gw::GerbeSpec& spec, const gerbe::gw::BaseTheoryTable& base,
                                       int genus, const gerbe::gw::CurveClass& beta,
                                       const std::vector<gerbe::gw::SectorClass>& insertions);

}  // namespace oracle
