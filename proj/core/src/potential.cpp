#include "gerbe/potential.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <thread>

#include "gerbe/abelian.hpp"
#include "gerbe/detail/multiset.hpp"

namespace gerbe::gw {

std::string_view to_string(Basis basis) {
  switch (basis) {
    case Basis::Base: return "base";
    case Basis::Sector: return "sector";
    case Basis::Character: return "character";
  }
  return "?";
}

std::string describe(const MonomialKey& key, Basis basis) {
  std::ostringstream os;
  os << "Q^[";
  for (std::size_t i = 0; i < key.beta.exponents.size(); ++i) os << (i ? "," : "") << key.beta.exponents[i];
  os << "]";
  for (const auto& v : key.variables) {
    os << " t(" << v.class_index;
    if (basis == Basis::Sector) os << ",g" << v.label;
    if (basis == Basis::Character) os << ",rho" << v.label;
    os << ";" << v.psi_power << ")";
  }
  return os.str();
}

PotentialSeries::PotentialSeries(Basis basis, std::int64_t r, Truncation truncation)
    : basis_(basis), r_(r), truncation_(std::move(truncation)) {}

CyclotomicNumber PotentialSeries::coefficient(const MonomialKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? CyclotomicNumber(Rational(), r_) : it->second;
}

void PotentialSeries::add(MonomialKey key, const CyclotomicNumber& value) {
  if (value.is_zero()) return;
  std::sort(key.variables.begin(), key.variables.end());
  auto [it, inserted] = terms_.try_emplace(std::move(key), value.embed(lcm64(value.order(), r_)));
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PotentialSeries& PotentialSeries::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

Rational multiplicity_factor(const std::vector<Variable>& vars) {
  BigInt denom = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    run = (i > 0 && vars[i] == vars[i - 1]) ? run + 1 : 1;
    denom *= static_cast<unsigned long>(run);
  }
  return Rational(BigInt(1), denom);
}

namespace {

std::vector<Variable> variable_universe(Basis basis, std::int64_t r, int basis_size, int j_max) {
  std::vector<Variable> out;
  const std::int64_t labels = basis == Basis::Base ? 1 : r;
  for (int c = 0; c < basis_size; ++c) {
    for (std::int64_t l = 0; l < labels; ++l) {
      for (int j = 0; j <= j_max; ++j) out.push_back({c, l, j});
    }
  }
  return out;
}

CyclotomicNumber term_value(const GerbeSpec& spec, const BaseTheoryTable& base, int genus, Basis basis,
                            RhoMethod method, const MonomialKey& key, Diagnostics* diag) {
  std::vector<SectorClass> ins;
  ins.reserve(key.variables.size());
  for (const auto& v : key.variables) ins.push_back({v.label, v.class_index, v.psi_power});
  const auto weight = multiplicity_factor(key.variables);
  switch (basis) {
    case Basis::Base: {
      std::vector<Insertion> plain;
      for (const auto& s : ins) plain.push_back(s.underlying());
      return CyclotomicNumber(base.value(genus, key.beta, std::move(plain), diag) * weight);
    }
    case Basis::Sector:
      return CyclotomicNumber(gerbe_invariant_sector(spec, base, genus, key.beta, ins, diag) * weight, spec.r);
    case Basis::Character:
      return gerbe_invariant_rho(spec, base, genus, key.beta, ins, method, diag) * weight;
  }
  return {};
}

}  // namespace

PotentialSeries build_potential(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                                const Truncation& truncation, Basis basis, const BuildOptions& options,
                                Diagnostics* diag) {
  spec.validate();
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  if (base.beta_rank() != spec.beta_rank()) {
    throw std::invalid_argument("base table curve-class rank does not match the pairing rank");
  }
  const auto universe = variable_universe(basis, spec.r, base.basis_size(), truncation.j_max);
  std::vector<MonomialKey> keys;
  for (const auto& beta : truncation.betas) {
    for (std::size_t n = 0; n <= truncation.n_max; ++n) {
      detail::for_each_multiset(universe.size(), n, [&](const std::vector<std::size_t>& idx) {
        MonomialKey key{beta, {}};
        for (auto i : idx) key.variables.push_back(universe[i]);
        keys.push_back(std::move(key));
      });
    }
  }

  const auto workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(keys.size())));
  std::vector<CyclotomicNumber> values(keys.size());
  std::vector<Diagnostics> diags(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::size_t> error_at(workers, keys.size());
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < keys.size(); i += workers) {
      try {
        values[i] = term_value(spec, base, genus, basis, options.rho_method, keys[i], &diags[w]);
      } catch (...) {
        errors[w] = std::current_exception();
        error_at[w] = i;
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  // Report the error at the smallest key so failures do not depend on scheduling.
  const auto first = std::min_element(error_at.begin(), error_at.end());
  if (*first < keys.size()) std::rethrow_exception(errors[static_cast<std::size_t>(first - error_at.begin())]);

  PotentialSeries out(basis, basis == Basis::Base ? 1 : spec.r, truncation);
  for (std::size_t i = 0; i < keys.size(); ++i) out.add(std::move(keys[i]), values[i]);
  if (diag) {
    for (auto& d : diags) diag->missing_keys.merge(d.missing_keys);
  }
  return out;
}

PotentialSeries substitute_novikov(const PotentialSeries& series, const GerbeSpec& spec, std::int64_t rho) {
  if (series.basis() != Basis::Base) throw std::invalid_argument("substitute_novikov expects a base-basis series");
  spec.validate();
  if (rho < 0 || rho >= spec.r) throw std::invalid_argument("character index outside Z/r");
  const auto group = abelian::FiniteAbelianGroup::cyclic(spec.r);
  const auto chi = group.character({rho});
  PotentialSeries out(Basis::Character, spec.r, series.truncation());
  for (const auto& [key, c] : series.terms()) {
    const auto k = pairing_value(spec, key.beta);
    MonomialKey relabeled{key.beta, key.variables};
    for (auto& v : relabeled.variables) v.label = rho;
    out.add(std::move(relabeled), c * abelian::evaluate_character(group, chi, group.element({-k})));
  }
  return out;
}

PotentialSeries decompose(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                          const Truncation& truncation, const BuildOptions& options, Diagnostics* diag) {
  const auto fx = build_potential(spec, base, genus, truncation, Basis::Base, options, diag);
  PotentialSeries out(Basis::Character, spec.r, truncation);
  for (std::int64_t rho = 0; rho < spec.r; ++rho) {
    const auto twisted = substitute_novikov(fx, spec, rho);
    for (const auto& [key, c] : twisted.terms()) out.add(key, c);
  }
  out *= rpow(BigInt(static_cast<long>(spec.r)), 2L * genus - 2);
  return out;
}

DecompositionReport verify_decomposition(const GerbeSpec& spec, const BaseTheoryTable& base, int genus,
                                         const Truncation& truncation, const BuildOptions& options) {
  Diagnostics diag;
  const auto lhs = build_potential(spec, base, genus, truncation, Basis::Character, options, &diag);
  const auto rhs = decompose(spec, base, genus, truncation, options, &diag);

  DecompositionReport report;
  report.lhs_terms = lhs.terms().size();
  report.rhs_terms = rhs.terms().size();
  auto l = lhs.terms().begin();
  auto r = rhs.terms().begin();
  const CyclotomicNumber zero(Rational(), spec.r);
  auto note = [&](const MonomialKey& key, const CyclotomicNumber& a, const CyclotomicNumber& b) {
    ++report.terms_compared;
    if (!report.first_difference && !(a == b)) report.first_difference = TermDifference{key, a, b};
  };
  while (l != lhs.terms().end() || r != rhs.terms().end()) {
    if (r == rhs.terms().end() || (l != lhs.terms().end() && l->first < r->first)) {
      note(l->first, l->second, zero);
      ++l;
    } else if (l == lhs.terms().end() || r->first < l->first) {
      note(r->first, zero, r->second);
      ++r;
    } else {
      note(l->first, l->second, r->second);
      ++l;
      ++r;
    }
  }
  report.pass = !report.first_difference.has_value();
  report.missing_keys.assign(diag.missing_keys.begin(), diag.missing_keys.end());
  return report;
}

}  // namespace gerbe::gw
