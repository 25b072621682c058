#include "gerbe/abelian.hpp"

#include <stdexcept>

namespace gerbe::abelian {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  for (auto n : orders_) {
    if (n < 1) throw std::invalid_argument("cyclic factor orders must be >= 1");
    exponent_ = lcm64(exponent_, n);
  }
}

std::int64_t FiniteAbelianGroup::order() const {
  std::int64_t out = 1;
  for (auto n : orders_) out *= n;
  return out;
}

void FiniteAbelianGroup::check(const ResidueTuple& t) const {
  if (t.residues.size() != orders_.size()) {
    throw std::invalid_argument("residue tuple has " + std::to_string(t.residues.size()) +
                                " entries, group has " + std::to_string(orders_.size()) +
                                " cyclic factors");
  }
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (t.residues[i] < 0 || t.residues[i] >= orders_[i]) {
      throw std::invalid_argument("residue out of range for cyclic factor");
    }
  }
}

namespace {

std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& orders,
                                 std::vector<std::int64_t> residues) {
  if (residues.size() != orders.size()) {
    throw std::invalid_argument("residue tuple length does not match the group presentation");
  }
  for (std::size_t i = 0; i < orders.size(); ++i) residues[i] = mod64(residues[i], orders[i]);
  return residues;
}

template <typename T>
std::vector<T> enumerate(const std::vector<std::int64_t>& orders, std::int64_t count) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::int64_t> cur(orders.size(), 0);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    out.push_back(T{{cur}});
    // odometer, last factor fastest, which gives lexicographic order
    for (std::size_t i = orders.size(); i-- > 0;) {
      if (++cur[i] < orders[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

}  // namespace

GroupElement FiniteAbelianGroup::element(std::vector<std::int64_t> residues) const {
  return GroupElement{{reduce(orders_, std::move(residues))}};
}

Character FiniteAbelianGroup::character(std::vector<std::int64_t> residues) const {
  return Character{{reduce(orders_, std::move(residues))}};
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement{{std::vector<std::int64_t>(orders_.size(), 0)}};
}

GroupElement FiniteAbelianGroup::multiply(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  auto out = g.residues;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (out[i] + h.residues[i]) % orders_[i];
  return GroupElement{{std::move(out)}};
}

GroupElement FiniteAbelianGroup::inverse(const GroupElement& g) const {
  check(g);
  auto out = g.residues;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod64(-out[i], orders_[i]);
  return GroupElement{{std::move(out)}};
}

std::vector<GroupElement> FiniteAbelianGroup::enumerate_elements() const {
  return enumerate<GroupElement>(orders_, order());
}

std::vector<Character> FiniteAbelianGroup::enumerate_characters() const {
  return enumerate<Character>(orders_, order());
}

std::int64_t character_exponent(const FiniteAbelianGroup& group, const Character& rho,
                                const GroupElement& g) {
  group.check(rho);
  group.check(g);
  const auto L = group.exponent();
  std::int64_t e = 0;
  const auto& orders = group.cyclic_orders();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    e = (e + (rho.residues[i] * g.residues[i] % orders[i]) * (L / orders[i])) % L;
  }
  return e;
}

CyclotomicNumber evaluate_character(const FiniteAbelianGroup& group, const Character& rho,
                                    const GroupElement& g) {
  return root_of_unity(character_exponent(group, rho, g), group.exponent());
}

CyclotomicNumber orthogonality_sum(const FiniteAbelianGroup& group, const Character& rho,
                                   const Character& rho2) {
  group.check(rho);
  group.check(rho2);
  CyclotomicNumber acc(Rational(0), group.exponent());
  for (const auto& g : group.enumerate_elements()) {
    acc += evaluate_character(group, rho, group.inverse(g)) * evaluate_character(group, rho2, g);
  }
  return acc / Rational(group.order());
}

}  // namespace gerbe::abelian
