#pragma once

// Gromov-Witten invariants of a mu_r-banded gerbe expressed through those of
// its base X.
//
// Base invariants are data: a BaseTheoryTable maps (genus, curve class,
// insertion multiset) to a rational. Gerbe invariants come in two bases:
//
//  * the sector basis, one copy of H*(X) per element of mu_r. A tuple of
//    sectors contributes r^{2g-1} times the base invariant when it is
//    admissible for k = pairing(beta), and zero otherwise;
//  * the character basis, obtained by the transform
//    a_rho = (1/r) sum_g chi_rho(g^{-1}) eps_g^*(a). Only tuples with a
//    single common character survive, with value
//    r^{2g-2} <...>^X chi_rho(zeta_r^{-k}).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gerbe/cyclotomic.hpp"
#include "gerbe/rational.hpp"

namespace gerbe::gw {

/// Order of the band and the linear functional beta -> alpha.beta mod r.
struct GerbeSpec {
  std::int64_t r = 1;
  std::vector<std::int64_t> pairing;

  std::size_t beta_rank() const { return pairing.size(); }
  /// Throws unless r >= 1 and every pairing residue lies in [0, r).
  void validate() const;
};

/// An effective curve class, as exponents on the generators of Z^m_{>=0}.
struct CurveClass {
  std::vector<std::int64_t> exponents;

  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

/// alpha_{class_index} psi^{psi_power}
struct Insertion {
  int class_index = 0;
  int psi_power = 0;

  friend auto operator<=>(const Insertion&, const Insertion&) = default;
};

/// An insertion on a gerbe: `label` is a sector residue in Z/r (sector basis)
/// or a character index in Z/r (character basis).
struct SectorClass {
  std::int64_t label = 0;
  int class_index = 0;
  int psi_power = 0;

  Insertion underlying() const { return {class_index, psi_power}; }
  friend auto operator<=>(const SectorClass&, const SectorClass&) = default;
};

struct Truncation {
  std::size_t n_max = 0;
  int j_max = 0;
  std::vector<CurveClass> betas;
};

/// Thrown for a lookup or insertion outside the table's declared truncation.
class TruncationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Collects keys that were inside the truncation but absent from the table
/// (and therefore read as zero).
struct Diagnostics {
  std::set<std::string> missing_keys;
};

/// Human-readable key; a negative genus is omitted.
std::string describe_key(int genus, const CurveClass& beta, std::span<const Insertion> insertions);

class BaseTheoryTable {
 public:
  BaseTheoryTable(int basis_size, std::size_t beta_rank, Truncation truncation);

  /// Deterministic pseudo-random rationals for every key of the given genus
  /// inside the truncation.
  static BaseTheoryTable seeded(int basis_size, std::size_t beta_rank, Truncation truncation, int genus,
                                std::uint64_t seed);

  int basis_size() const { return basis_size_; }
  std::size_t beta_rank() const { return beta_rank_; }
  const Truncation& truncation() const { return truncation_; }
  std::size_t size() const { return entries_.size(); }

  /// Stores a value; insertions are sorted, so any ordering names the same key.
  /// Rejects keys outside the truncation and conflicting duplicates.
  void set(int genus, const CurveClass& beta, std::vector<Insertion> insertions, const Rational& value);
  /// As set(), but replaces an existing value.
  void assign(int genus, const CurveClass& beta, std::vector<Insertion> insertions, const Rational& value);

  /// nullopt for a key inside the truncation with no stored value;
  /// throws TruncationError outside it.
  std::optional<Rational> lookup(int genus, const CurveClass& beta, std::vector<Insertion> insertions) const;

  /// lookup() with absent keys read as zero and recorded in `diag`.
  Rational value(int genus, const CurveClass& beta, std::vector<Insertion> insertions,
                 Diagnostics* diag = nullptr) const;

  /// Throws TruncationError when the key lies outside the truncation.
  void check_in_truncation(const CurveClass& beta, std::span<const Insertion> insertions) const;

 private:
  struct Key {
    int genus;
    CurveClass beta;
    std::vector<Insertion> insertions;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  int basis_size_;
  std::size_t beta_rank_;
  Truncation truncation_;
  std::map<Key, Rational> entries_;
};

/// sum_i a_i beta_i mod r.
std::int64_t pairing_value(const GerbeSpec& spec, const CurveClass& beta);

/// True when the sector residues multiply to zeta_r^{pairing(beta)}.
bool sectors_admissible(const GerbeSpec& spec, const CurveClass& beta, std::span<const SectorClass> insertions);

/// r^{2g-1} <underlying insertions>^X on admissible sector tuples, 0 otherwise.
Rational gerbe_invariant_sector(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                                const CurveClass& beta, std::span<const SectorClass> insertions,
                                Diagnostics* diag = nullptr);

enum class RhoMethod {
  /// r^{2g-2} <...>^X chi_rho(zeta_r^{-k}) when all characters agree
  ClosedForm,
  /// r^{-n} sum over all sector tuples of prod chi_{rho_i}(g_i^{-1}) times the sector invariant
  CharacterSum,
};

/// Character-basis invariant, a value in Q(zeta_r). With no insertions both
/// methods return the sector invariant of the empty tuple.
CyclotomicNumber gerbe_invariant_rho(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                                     const CurveClass& beta, std::span<const SectorClass> insertions,
                                     RhoMethod method = RhoMethod::ClosedForm, Diagnostics* diag = nullptr);

}  // namespace gerbe::gw
