#pragma once

// Truncated genus-g descendant potentials and the decomposition check.
//
// A potential is stored as a map from (curve class, multiset of variables) to
// its coefficient. With n insertions the coefficient of Q^beta prod t is
// (1/n!) * (#orderings of the multiset) * invariant = invariant / prod mult!,
// the exponential-generating-function convention.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gerbe/cyclotomic.hpp"
#include "gerbe/gw.hpp"

namespace gerbe::gw {

enum class Basis {
  /// variables t_{i,j} of X; labels are always 0
  Base,
  /// variables t_{i g, j}, one per sector g in mu_r
  Sector,
  /// variables t_{i rho, j}, one per character rho of mu_r
  Character,
};

std::string_view to_string(Basis basis);

struct Variable {
  int class_index = 0;
  std::int64_t label = 0;
  int psi_power = 0;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

struct MonomialKey {
  CurveClass beta;
  /// sorted
  std::vector<Variable> variables;

  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

std::string describe(const MonomialKey& key, Basis basis);

class PotentialSeries {
 public:
  PotentialSeries(Basis basis, std::int64_t r, Truncation truncation);

  Basis basis() const { return basis_; }
  std::int64_t r() const { return r_; }
  const Truncation& truncation() const { return truncation_; }

  /// Zero coefficients are not stored.
  const std::map<MonomialKey, CyclotomicNumber>& terms() const { return terms_; }
  CyclotomicNumber coefficient(const MonomialKey& key) const;

  /// Adds to the coefficient of `key` (variables sorted on entry).
  void add(MonomialKey key, const CyclotomicNumber& value);
  PotentialSeries& operator*=(const Rational& scalar);

 private:
  Basis basis_;
  std::int64_t r_;
  Truncation truncation_;
  std::map<MonomialKey, CyclotomicNumber> terms_;
};

/// 1 / prod (multiplicity!) for a sorted variable list.
Rational multiplicity_factor(const std::vector<Variable>& sorted_variables);

struct BuildOptions {
  /// Route used for character-basis coefficients.
  RhoMethod rho_method = RhoMethod::CharacterSum;
  /// Worker threads; results do not depend on it.
  unsigned workers = 1;
};

/// Potential of X (Basis::Base) or of the gerbe (Basis::Sector, Basis::Character)
/// over every monomial inside `truncation`. Lookups outside the table's own
/// truncation throw TruncationError naming the key.
PotentialSeries build_potential(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                                const Truncation& truncation, Basis basis, const BuildOptions& options = {},
                                Diagnostics* diag = nullptr);

/// Multiplies each Q^beta coefficient by chi_rho(zeta_r^{-pairing(beta)}) and
/// relabels t_{i,j} -> t_{i rho, j}. Input must be in Basis::Base.
PotentialSeries substitute_novikov(const PotentialSeries& series, const GerbeSpec& spec, std::int64_t rho);

/// r^{2g-2} sum_rho F_X(t_{i rho, j}; Q_rho).
PotentialSeries decompose(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                          const Truncation& truncation, const BuildOptions& options = {},
                          Diagnostics* diag = nullptr);

struct TermDifference {
  MonomialKey key;
  CyclotomicNumber lhs;
  CyclotomicNumber rhs;
};

struct DecompositionReport {
  bool pass = false;
  /// union of nonzero keys on both sides
  std::size_t terms_compared = 0;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  /// smallest differing key in MonomialKey order
  std::optional<TermDifference> first_difference;
  std::vector<std::string> missing_keys;
};

/// Compares the character-basis potential of the gerbe (left side) with
/// decompose() (right side) coefficient by coefficient, exactly.
DecompositionReport verify_decomposition(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                                         const Truncation& truncation, const BuildOptions& options = {});

}  // namespace gerbe::gw
