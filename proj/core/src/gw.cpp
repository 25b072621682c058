#include "gerbe/gw.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gerbe/abelian.hpp"
#include "gerbe/admissibility.hpp"
#include "gerbe/detail/multiset.hpp"

namespace gerbe::gw {

void GerbeSpec::validate() const {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  for (auto a : pairing) {
    if (a < 0 || a >= r) throw std::invalid_argument("pairing residues must lie in [0, r)");
  }
}

std::string describe_key(int genus, const CurveClass& beta, std::span<const Insertion> insertions) {
  std::ostringstream os;
  if (genus >= 0) os << "genus=" << genus << ' ';
  os << "beta=[";
  for (std::size_t i = 0; i < beta.exponents.size(); ++i) os << (i ? "," : "") << beta.exponents[i];
  os << "] insertions=[";
  for (std::size_t i = 0; i < insertions.size(); ++i) {
    os << (i ? "," : "") << "(class " << insertions[i].class_index << ", psi^" << insertions[i].psi_power << ")";
  }
  os << "]";
  return os.str();
}

BaseTheoryTable::BaseTheoryTable(int basis_size, std::size_t beta_rank, Truncation truncation)
    : basis_size_(basis_size), beta_rank_(beta_rank), truncation_(std::move(truncation)) {
  if (basis_size_ < 1) throw std::invalid_argument("basis_size must be >= 1");
  if (truncation_.j_max < 0) throw std::invalid_argument("j_max must be >= 0");
  for (const auto& b : truncation_.betas) {
    if (b.exponents.size() != beta_rank_) {
      throw std::invalid_argument("truncation curve class has the wrong rank");
    }
    for (auto e : b.exponents) {
      if (e < 0) throw std::invalid_argument("curve classes must be effective (nonnegative exponents)");
    }
  }
  auto betas = truncation_.betas;
  std::sort(betas.begin(), betas.end());
  if (std::adjacent_find(betas.begin(), betas.end()) != betas.end()) {
    throw std::invalid_argument("truncation lists a curve class twice");
  }
}

void BaseTheoryTable::check_in_truncation(const CurveClass& beta, std::span<const Insertion> insertions) const {
  auto fail = [&](const std::string& why) {
    throw TruncationError(why + ": " + describe_key(-1, beta, insertions));
  };
  if (beta.exponents.size() != beta_rank_) fail("curve class has the wrong rank");
  if (std::find(truncation_.betas.begin(), truncation_.betas.end(), beta) == truncation_.betas.end()) {
    fail("curve class outside the truncation");
  }
  if (insertions.size() > truncation_.n_max) fail("more insertions than n_max");
  for (const auto& ins : insertions) {
    if (ins.class_index < 0 || ins.class_index >= basis_size_) fail("class index outside the basis");
    if (ins.psi_power < 0 || ins.psi_power > truncation_.j_max) fail("psi power outside the truncation");
  }
}

void BaseTheoryTable::set(int genus, const CurveClass& beta, std::vector<Insertion> insertions,
                          const Rational& value) {
  std::sort(insertions.begin(), insertions.end());
  check_in_truncation(beta, insertions);
  Key key{genus, beta, std::move(insertions)};
  auto [it, inserted] = entries_.emplace(key, value);
  if (!inserted && it->second != value) {
    throw std::invalid_argument("conflicting values for " + describe_key(genus, beta, key.insertions));
  }
}

void BaseTheoryTable::assign(int genus, const CurveClass& beta, std::vector<Insertion> insertions,
                             const Rational& value) {
  std::sort(insertions.begin(), insertions.end());
  check_in_truncation(beta, insertions);
  entries_.insert_or_assign(Key{genus, beta, std::move(insertions)}, value);
}

std::optional<Rational> BaseTheoryTable::lookup(int genus, const CurveClass& beta,
                                                std::vector<Insertion> insertions) const {
  std::sort(insertions.begin(), insertions.end());
  check_in_truncation(beta, insertions);
  auto it = entries_.find(Key{genus, beta, std::move(insertions)});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Rational BaseTheoryTable::value(int genus, const CurveClass& beta, std::vector<Insertion> insertions,
                                Diagnostics* diag) const {
  auto found = lookup(genus, beta, insertions);
  if (found) return *found;
  if (diag) {
    std::sort(insertions.begin(), insertions.end());
    diag->missing_keys.insert(describe_key(genus, beta, insertions));
  }
  return Rational();
}

BaseTheoryTable BaseTheoryTable::seeded(int basis_size, std::size_t beta_rank, Truncation truncation,
                                        int genus, std::uint64_t seed) {
  BaseTheoryTable table(basis_size, beta_rank, std::move(truncation));
  std::mt19937_64 rng(seed);
  std::vector<Insertion> universe;
  for (int c = 0; c < basis_size; ++c) {
    for (int j = 0; j <= table.truncation_.j_max; ++j) universe.push_back({c, j});
  }
  for (const auto& beta : table.truncation_.betas) {
    for (std::size_t n = 0; n <= table.truncation_.n_max; ++n) {
      detail::for_each_multiset(universe.size(), n, [&](const std::vector<std::size_t>& idx) {
        std::vector<Insertion> ins;
        for (auto i : idx) ins.push_back(universe[i]);
        const auto num = static_cast<std::int64_t>(rng() % 19) - 9;
        const auto den = static_cast<std::int64_t>(rng() % 6) + 1;
        table.set(genus, beta, std::move(ins), Rational(num, den));
      });
    }
  }
  return table;
}

std::int64_t pairing_value(const GerbeSpec& spec, const CurveClass& beta) {
  spec.validate();
  if (beta.exponents.size() != spec.pairing.size()) {
    throw std::invalid_argument("curve class rank " + std::to_string(beta.exponents.size()) +
                                " does not match pairing rank " + std::to_string(spec.pairing.size()));
  }
  std::int64_t k = 0;
  for (std::size_t i = 0; i < beta.exponents.size(); ++i) {
    k = mod64(k + mod64(spec.pairing[i] * mod64(beta.exponents[i], spec.r), spec.r), spec.r);
  }
  return k;
}

namespace {

std::vector<Insertion> underlying(std::span<const SectorClass> insertions) {
  std::vector<Insertion> out;
  out.reserve(insertions.size());
  for (const auto& s : insertions) out.push_back(s.underlying());
  return out;
}

void check_labels(const GerbeSpec& spec, std::span<const SectorClass> insertions) {
  for (const auto& s : insertions) {
    if (s.label < 0 || s.label >= spec.r) {
      throw std::invalid_argument("sector/character label " + std::to_string(s.label) + " outside Z/" +
                                  std::to_string(spec.r));
    }
  }
}

}  // namespace

bool sectors_admissible(const GerbeSpec& spec, const CurveClass& beta, std::span<const SectorClass> insertions) {
  check_labels(spec, insertions);
  std::vector<admissibility::ContactType> types;
  types.reserve(insertions.size());
  for (const auto& s : insertions) types.push_back(admissibility::ContactType::from_residue(s.label, spec.r));
  return admissibility::is_admissible(types, spec.r, pairing_value(spec, beta));
}

Rational gerbe_invariant_sector(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                                const CurveClass& beta, std::span<const SectorClass> insertions,
                                Diagnostics* diag) {
  auto ins = underlying(insertions);
  base.check_in_truncation(beta, ins);
  if (!sectors_admissible(spec, beta, insertions)) return Rational();
  return rpow(BigInt(static_cast<long>(spec.r)), 2L * genus - 1) * base.value(genus, beta, std::move(ins), diag);
}

namespace {

CyclotomicNumber rho_closed_form(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                                 const CurveClass& beta, std::span<const SectorClass> insertions,
                                 Diagnostics* diag) {
  const auto r = spec.r;
  if (insertions.empty()) {
    return CyclotomicNumber(gerbe_invariant_sector(spec, base, genus, beta, insertions, diag), r);
  }
  auto ins = underlying(insertions);
  base.check_in_truncation(beta, ins);
  const auto rho = insertions.front().label;
  for (const auto& s : insertions) {
    if (s.label != rho) return CyclotomicNumber(Rational(), r);
  }
  const auto group = abelian::FiniteAbelianGroup::cyclic(r);
  const auto k = pairing_value(spec, beta);
  const auto chi = abelian::evaluate_character(group, group.character({rho}), group.element({-k}));
  return chi * (rpow(BigInt(static_cast<long>(r)), 2L * genus - 2) * base.value(genus, beta, std::move(ins), diag));
}

CyclotomicNumber rho_character_sum(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                                   const CurveClass& beta, std::span<const SectorClass> insertions,
                                   Diagnostics* diag) {
  const auto r = spec.r;
  if (insertions.empty()) {
    return CyclotomicNumber(gerbe_invariant_sector(spec, base, genus, beta, insertions, diag), r);
  }
  const auto n = insertions.size();
  const auto group = abelian::FiniteAbelianGroup::cyclic(r);
  // inverse_exp[rho][g] = e with chi_rho(g^{-1}) = zeta_r^e
  std::vector<std::vector<std::int64_t>> inverse_exp(static_cast<std::size_t>(r));
  for (const auto& rho : group.enumerate_characters()) {
    auto& row = inverse_exp[static_cast<std::size_t>(rho.residues[0])];
    for (const auto& g : group.enumerate_elements()) {
      row.push_back(abelian::character_exponent(group, rho, group.inverse(g)));
    }
  }

  // Contact types in units of 1/r; a tuple is admissible iff the units sum to k mod r.
  std::vector<std::int64_t> units(static_cast<std::size_t>(r));
  for (std::int64_t a = 0; a < r; ++a) {
    const auto t = admissibility::ContactType::from_residue(a, r);
    units[static_cast<std::size_t>(a)] = t.numerator() * (r / t.order());
  }
  const auto k = mod64(pairing_value(spec, beta), r);

  // The sector invariant is the same multiple of the base value on every
  // admissible tuple, so tally how often each root of unity occurs.
  std::vector<std::int64_t> residues(n, 0);
  std::vector<Rational> tally(static_cast<std::size_t>(r));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(r), 0);
  std::optional<Rational> sector_value;
  while (true) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += units[static_cast<std::size_t>(residues[i])];
    if (mod64(total - k, r) == 0) {
      if (!sector_value) {
        std::vector<SectorClass> tuple(insertions.begin(), insertions.end());
        for (std::size_t i = 0; i < n; ++i) tuple[i].label = residues[i];
        sector_value = gerbe_invariant_sector(spec, base, genus, beta, tuple, diag);
      }
      std::int64_t e = 0;
      for (std::size_t i = 0; i < n; ++i) {
        e += inverse_exp[static_cast<std::size_t>(insertions[i].label)][static_cast<std::size_t>(residues[i])];
      }
      ++counts[static_cast<std::size_t>(e % r)];
    }
    std::size_t i = n;
    for (; i-- > 0;) {
      if (++residues[i] < r) break;
      residues[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  for (std::size_t e = 0; e < counts.size(); ++e) tally[e] = Rational(counts[e]);
  if (!sector_value) return CyclotomicNumber(Rational(), r);
  auto sum = CyclotomicNumber::from_power_sum(r, tally);
  return sum * (*sector_value / rpow(BigInt(static_cast<long>(r)), static_cast<long>(n)));
}

}  // namespace

CyclotomicNumber gerbe_invariant_rho(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                                     const CurveClass& beta, std::span<const SectorClass> insertions,
                                     RhoMethod method, Diagnostics* diag) {
  check_labels(spec, insertions);
  base.check_in_truncation(beta, underlying(insertions));
  return method == RhoMethod::ClosedForm ? rho_closed_form(spec, base, genus, beta, insertions, diag)
                                         : rho_character_sum(spec, base, genus, beta, insertions, diag);
}

}  // namespace gerbe::gw
