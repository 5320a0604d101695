#include <gtest/gtest.h>

#include <set>

#include "odolab/builtin.hpp"
#include "odolab/dual_group.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace odolab;

namespace {

const Scale dyadic = builtin::dyadic_scale();
const Scale triadic = builtin::triadic_scale();

void expect_root(const DualElement& z, Natural k, Natural s) {
  EXPECT_EQ(z.numerator(), k);
  EXPECT_EQ(z.denominator(), s);
}

}  // namespace

TEST(Roots, Reduction) {
  expect_root(make_root(2, 8), 1, 4);
  expect_root(make_root(0, 5), 0, 1);
  expect_root(make_root(5, 8), 5, 8);
  EXPECT_EQ(make_root(5, 8).order(), 8u);
  expect_root(make_root(-1, 4), 3, 4);
  expect_root(make_root(9, 6), 1, 2);
  EXPECT_TRUE(make_root(12, 12).is_identity());
}

TEST(Roots, GroupOperations) {
  expect_root(mul(make_root(1, 2), make_root(1, 4)), 3, 4);
  expect_root(inv(make_root(3, 8)), 5, 8);
  EXPECT_EQ(order(make_root(3, 8)), 8u);
  expect_root(pow(make_root(1, 8), 4), 1, 2);
  expect_root(pow(make_root(1, 8), -1), 7, 8);
  EXPECT_TRUE(pow(make_root(3, 7), 7).is_identity());
  EXPECT_TRUE(inv(DualElement{}).is_identity());
}

TEST(Roots, MultiplicationIsFractionAddition) {
  for (std::int64_t a = 0; a < 12; ++a)
    for (std::int64_t b = 0; b < 18; ++b) {
      const auto z = mul(make_root(a, 12), make_root(b, 18));
      EXPECT_EQ(z, make_root(3 * a + 2 * b, 36));
      EXPECT_TRUE(mul(z, inv(z)).is_identity());
    }
}

TEST(ScaleForm, Examples) {
  EXPECT_EQ(scale_form(make_root(1, 4), dyadic), (ScaleForm{2, 1}));
  EXPECT_EQ(scale_form(make_root(1, 2), dyadic), (ScaleForm{1, 1}));
  EXPECT_EQ(scale_form(make_root(1, 2), triadic), (ScaleForm{2, 3}));
  EXPECT_EQ(scale_form(DualElement{}, dyadic), (ScaleForm{0, 0}));
  EXPECT_EQ(kind_of([] { scale_form(make_root(1, 3), dyadic); }), ErrorKind::NotInGroup);
  EXPECT_EQ(level_of(make_root(1, 4), dyadic), 2u);
}

TEST(ScaleForm, AgreesWithEnumerationOracle) {
  for (const Scale& s : {dyadic, triadic, validate_scale({2, 6, 30})}) {
    for (const auto& z : enumerate_subgroup(s, s.depth())) {
      const auto [m, j] = oracle::scale_form(static_cast<std::int64_t>(z.numerator()), z.denominator(), s.entries());
      EXPECT_EQ(scale_form(z, s), (ScaleForm{m, j}));
      if (m > 0) {
        EXPECT_NE(j % s.radix(m), 0u);
      }
    }
  }
}

TEST(Subgroups, Enumeration) {
  const auto g1 = enumerate_subgroup(dyadic, 1);
  ASSERT_EQ(g1.size(), 2u);
  EXPECT_TRUE(g1[0].is_identity());
  expect_root(g1[1], 1, 2);
  const auto g2 = enumerate_subgroup(dyadic, 2);
  ASSERT_EQ(g2.size(), 4u);
  expect_root(g2[2], 1, 4);
  expect_root(g2[3], 3, 4);
  EXPECT_EQ(enumerate_subgroup(triadic, 0), std::vector<DualElement>{DualElement{}});
}

TEST(Subgroups, AreNestedSubgroupsOfTheRightSize) {
  for (const Scale& s : {dyadic, triadic}) {
    for (std::size_t m = 0; m <= s.depth(); ++m) {
      const auto g = enumerate_subgroup(s, m);
      const std::set<DualElement> set(g.begin(), g.end());
      EXPECT_EQ(set.size(), s.s(m));
      for (const auto& a : g) {
        EXPECT_LE(level_of(a, s), m);
        for (const auto& b : g) EXPECT_TRUE(set.count(mul(a, b)));
      }
    }
  }
}

TEST(Characters, Evaluation) {
  EXPECT_EQ(eval_char(make_root(1, 2), 3), Complex(-1, 0));
  EXPECT_EQ(eval_char(make_root(1, 4), 2), Complex(-1, 0));
  EXPECT_EQ(eval_char(make_root(1, 4), -1), Complex(0, -1));
  EXPECT_EQ(eval_char_exact(make_root(3, 4), 1), ExactComplex(0, -1));
  EXPECT_EQ(kind_of([] { eval_char_exact(make_root(1, 3), 1); }), ErrorKind::NotExactlyRepresentable);
  for (std::int64_t x = -20; x < 20; ++x) {
    const auto z = make_root(5, 12);
    EXPECT_NEAR(std::abs(eval_char(z, x) - std::polar(1.0, 2 * std::numbers::pi * 5.0 * x / 12.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(eval_char(z, x) * eval_char(z, 1) - eval_char(z, x + 1)), 0.0, 1e-12);
  }
}
