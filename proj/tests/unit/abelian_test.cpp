#include <gtest/gtest.h>

#include "printers.hpp"

#include <set>

#include "gerbe/abelian.hpp"

using namespace gerbe;
using namespace gerbe::abelian;

TEST(Character, Evaluations) {
  const auto z4 = FiniteAbelianGroup::cyclic(4);
  EXPECT_EQ(evaluate_character(z4, z4.character({1}), z4.element({2})), CyclotomicNumber(Rational(-1)));

  const auto z3 = FiniteAbelianGroup::cyclic(3);
  for (const auto& g : z3.enumerate_elements()) {
    EXPECT_EQ(evaluate_character(z3, z3.character({0}), g), CyclotomicNumber(Rational(1)));
  }

  const FiniteAbelianGroup z2z3({2, 3});
  // zeta_2 * zeta_3^2 = zeta_6^(3+4) = zeta_6
  const auto product = root_of_unity(1, 2) * root_of_unity(2, 3);
  EXPECT_EQ(evaluate_character(z2z3, z2z3.character({1, 1}), z2z3.element({1, 2})), product);
  EXPECT_EQ(product, root_of_unity(1, 6));
  EXPECT_EQ(character_exponent(z2z3, z2z3.character({1, 1}), z2z3.element({1, 2})), 1);
}

TEST(Character, Orthogonality) {
  const auto z3 = FiniteAbelianGroup::cyclic(3);
  EXPECT_EQ(orthogonality_sum(z3, z3.character({1}), z3.character({1})), CyclotomicNumber(Rational(1)));
  EXPECT_TRUE(orthogonality_sum(z3, z3.character({1}), z3.character({2})).is_zero());
  const FiniteAbelianGroup trivial;
  EXPECT_EQ(orthogonality_sum(trivial, trivial.character({}), trivial.character({})),
            CyclotomicNumber(Rational(1)));
}

TEST(Group, Enumeration) {
  const auto z2 = FiniteAbelianGroup::cyclic(2);
  const auto e = z2.enumerate_elements();
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].residues, std::vector<std::int64_t>{0});
  EXPECT_EQ(e[1].residues, std::vector<std::int64_t>{1});

  const FiniteAbelianGroup trivial;
  ASSERT_EQ(trivial.enumerate_elements().size(), 1u);
  EXPECT_TRUE(trivial.enumerate_elements()[0].residues.empty());

  const FiniteAbelianGroup klein({2, 2});
  const auto k = klein.enumerate_elements();
  EXPECT_EQ(k.size(), 4u);
  EXPECT_EQ(std::set<GroupElement>(k.begin(), k.end()).size(), 4u);
}

TEST(Group, Validation) {
  EXPECT_THROW(FiniteAbelianGroup({0}), std::invalid_argument);
  const FiniteAbelianGroup g({2, 3});
  EXPECT_THROW(g.element({1}), std::invalid_argument);
  EXPECT_EQ(g.element({-1, 7}).residues, (std::vector<std::int64_t>{1, 1}));
  EXPECT_THROW(g.check(GroupElement{{{2, 0}}}), std::invalid_argument);
}

TEST(GroupProperty, CharactersAreHomomorphisms) {
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{6}, {2, 4}, {3, 3}, {2, 2, 3}, {5}}) {
    const FiniteAbelianGroup g(orders);
    for (const auto& rho : g.enumerate_characters()) {
      for (const auto& a : g.enumerate_elements()) {
        for (const auto& b : g.enumerate_elements()) {
          EXPECT_EQ(evaluate_character(g, rho, g.multiply(a, b)),
                    evaluate_character(g, rho, a) * evaluate_character(g, rho, b));
        }
        EXPECT_EQ(evaluate_character(g, rho, g.inverse(a)), evaluate_character(g, rho, a).conj());
      }
    }
  }
}
