#pragma once

// Finite abelian groups presented as products of cyclic groups, their
// elements, and their characters.
//
// A group G = Z/n_1 x ... x Z/n_t is given by its list of cyclic orders; the
// empty list is the trivial group. Characters are indexed by the same residue
// tuples: chi_rho(g) = prod_i zeta_{n_i}^{rho_i g_i}. All character values of
// one group are written in the single field Q(zeta_L), L = lcm(n_i).

#include <cstdint>
#include <vector>

#include "gerbe/cyclotomic.hpp"

namespace gerbe::abelian {

/// Common shape of GroupElement and Character: one residue per cyclic factor.
struct ResidueTuple {
  std::vector<std::int64_t> residues;

  friend auto operator<=>(const ResidueTuple&, const ResidueTuple&) = default;
};

struct GroupElement : ResidueTuple {};
struct Character : ResidueTuple {};

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Rejects orders < 1.
  explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders);

  /// mu_r, presented as Z/r.
  static FiniteAbelianGroup cyclic(std::int64_t r) { return FiniteAbelianGroup({r}); }

  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  std::int64_t order() const;
  /// lcm of the cyclic orders; the ambient cyclotomic order of character values.
  std::int64_t exponent() const { return exponent_; }

  /// Reduces arbitrary integers componentwise; throws on a length mismatch.
  GroupElement element(std::vector<std::int64_t> residues) const;
  Character character(std::vector<std::int64_t> residues) const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;

  /// Lexicographic on residue tuples; length = order().
  std::vector<GroupElement> enumerate_elements() const;
  std::vector<Character> enumerate_characters() const;

  /// Throws std::invalid_argument unless the tuple is shaped and reduced for this group.
  void check(const ResidueTuple& t) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::int64_t> orders_;
  std::int64_t exponent_ = 1;
};

/// chi_rho(g), written in Q(zeta_{G.exponent()}).
CyclotomicNumber evaluate_character(const FiniteAbelianGroup& group, const Character& rho,
                                    const GroupElement& g);

/// Exponent e with chi_rho(g) = zeta_L^e, L = G.exponent(); e in [0, L).
std::int64_t character_exponent(const FiniteAbelianGroup& group, const Character& rho,
                                const GroupElement& g);

/// (1/|G|) sum_g chi_rho(g^{-1}) chi_rho2(g); 1 when rho == rho2, else 0.
CyclotomicNumber orthogonality_sum(const FiniteAbelianGroup& group, const Character& rho,
                                   const Character& rho2);

}  // namespace gerbe::abelian
