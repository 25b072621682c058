#pragma once

// Contact types, beta-admissible vectors and the gerby graphs compatible
// with them.
//
// A contact type m/b (0 <= m < b, gcd(m, b) = 1) stands for the element
// exp(2 pi i m / b) of mu_r, b | r. An n-tuple of contact types is admissible
// for (r, k) when the product of its entries is exp(2 pi i k / r), i.e. when
// sum m_i/b_i - k/r is an integer.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gerbe/graphs.hpp"
#include "gerbe/rational.hpp"

namespace gerbe::admissibility {

class ContactType {
 public:
  /// The untwisted type 0/1.
  ContactType() = default;
  /// Rejects m outside [0, b), b < 1 and non-reduced fractions.
  ContactType(std::int64_t m, std::int64_t b);

  /// The element zeta_r^residue written in lowest terms.
  static ContactType from_residue(std::int64_t residue, std::int64_t r);
  /// "m/b"; a bare "0" is accepted as 0/1.
  static ContactType parse(std::string_view text);

  std::int64_t numerator() const { return m_; }
  std::int64_t order() const { return b_; }
  Rational value() const { return Rational(m_, b_); }
  /// The exponent a with exp(2 pi i m/b) = zeta_r^a; requires b | r.
  std::int64_t residue(std::int64_t r) const;
  /// The balanced partner (-m mod b)/b.
  ContactType complement() const;

  std::string to_string() const;

  friend auto operator<=>(const ContactType&, const ContactType&) = default;

 private:
  std::int64_t m_ = 0;
  std::int64_t b_ = 1;
};

struct AdmissibleVector {
  std::vector<ContactType> entries;
  std::int64_t r = 1;
  std::int64_t k = 0;

  std::vector<std::string> to_strings() const;
};

/// Per-vertex degree residues k_v, the contact type on each tail (in tail
/// order of the graph) and the global residue k.
struct DegreeData {
  std::vector<std::int64_t> vertex_residues;
  std::vector<ContactType> tail_types;
  std::int64_t k = 0;
};

bool is_admissible(std::span<const ContactType> entries, std::int64_t r, std::int64_t k);

/// All admissible n-tuples over mu_r, in lexicographic order of their residue tuples.
std::vector<AdmissibleVector> enumerate_admissible(std::size_t n, std::int64_t r, std::int64_t k);

/// Checks shapes, b_i | r, and sum k_v == k (mod r). Throws std::invalid_argument.
void validate_degree_data(const graphs::ModularGraph& graph, const DegreeData& data, std::int64_t r);

/// Contact type of separating edge `edge` seen from the side of its smaller
/// flag: the fractional part of (sum_{v in P} k_v)/r - sum_{tails in P} m_i/b_i.
ContactType separating_node_order(const graphs::ModularGraph& graph, const DegreeData& data,
                                  std::size_t edge, std::int64_t r);

/// The same quantity evaluated on an explicit vertex set (one side of the cut).
ContactType cut_contact_type(const graphs::ModularGraph& graph, const DegreeData& data,
                             std::span<const graphs::VertexId> side, std::int64_t r);

/// The set J(tau): tail orders from the admissible vector, separating edge
/// orders forced by the cut formula, non-separating edge orders free over the
/// divisors of r. Rejects inadmissible tail data.
std::vector<graphs::GerbyGraph> enumerate_compatible_gerby(const graphs::ModularGraph& graph,
                                                           const DegreeData& data, std::int64_t r);

}  // namespace gerbe::admissibility
