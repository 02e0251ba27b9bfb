#include <gtest/gtest.h>

#include "koorn/composition.h"
#include "koorn/error.h"
#include "koorn/laurent_poly.h"
#include "koorn/rational.h"
#include "koorn/sampling.h"
#include "koorn/signed_perm.h"

namespace koorn {
namespace {

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(ParseRational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(ParseRational("5"), Rational(5));
  EXPECT_EQ(ToFractionString(Rational(-3, 4)), "-3/4");
  EXPECT_THROW(ParseRational("1/0"), ParseError);
  EXPECT_THROW(ParseRational("x"), ParseError);
  EXPECT_EQ(Pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(CompareAbsToOne(Rational(-1)), 0);
  EXPECT_LT(CompareAbsToOne(Rational(-3, 4)), 0);
}

TEST(LaurentPoly, RingAxiomsOnRandomPolys) {
  ParameterSampler s(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const LaurentPoly f = s.RandomPoly(n, 5, 3), g = s.RandomPoly(n, 5, 3), h = s.RandomPoly(n, 4, 2);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f * LaurentPoly::Constant(n, 1), f);
    EXPECT_EQ(f.bar().bar(), f);
    EXPECT_EQ((f * g).bar(), f.bar() * g.bar());
  }
}

TEST(LaurentPoly, EvaluationIsARingMap) {
  ParameterSampler s(5);
  const LaurentPoly f = s.RandomPoly(2, 6, 3), g = s.RandomPoly(2, 6, 3);
  const std::vector<Rational> z = {Rational(2, 3), Rational(-5, 7)};
  EXPECT_EQ((f * g).evaluate(z), f.evaluate(z) * g.evaluate(z));
  EXPECT_EQ((f + g).evaluate(z), f.evaluate(z) + g.evaluate(z));
}

TEST(LaurentPoly, ExactDivideRoundTrip) {
  ParameterSampler s(11);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + trial % 3;
    const LaurentPoly f = s.RandomPoly(n, 5, 2);
    LaurentPoly g = s.RandomPoly(n, 3, 2);
    if (g.is_zero()) continue;
    EXPECT_EQ(ExactDivide(f * g, g), f);
  }
}

TEST(LaurentPoly, ExactDivideRejectsRemainder) {
  const LaurentPoly z = LaurentPoly::Variable(1, 0);
  const LaurentPoly one = LaurentPoly::Constant(1, 1);
  EXPECT_THROW(ExactDivide(z * z + one, z + one), InexactDivision);
  EXPECT_THROW(LaurentPoly(1) + LaurentPoly(2), DimensionMismatch);
}

TEST(LaurentPoly, SubstituteAndSlice) {
  // f(z1, z2) = z1^2 z2 + 3 z1^-1, z1 -> (1/2) z2^-1.
  LaurentPoly f(2);
  f.add_term(Exponent::FromVector(std::vector<int>{2, 1}), 1);
  f.add_term(Exponent::FromVector(std::vector<int>{-1, 0}), 3);
  const LaurentPoly g = f.substitute(0, Rational(1, 2), Exponent::Unit(1, -1));
  LaurentPoly expect(2);
  expect.add_term(Exponent::Unit(1, -1), Rational(1, 4));
  expect.add_term(Exponent::Unit(1, 1), 6);
  EXPECT_EQ(g, expect);
  EXPECT_EQ(f.slice(0, -1).constant_term(), 3);
}

TEST(LaurentPoly, OrbitSumsAreInvariantAndDistinct) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : PartitionsInBox(n, 2)) {
      const LaurentPoly m = MonomialOrbitSum(lambda, n);
      for (const auto& w : EnumerateBn(n)) EXPECT_EQ(ApplySignedPerm(w, m), m);
      for (const auto& [e, c] : m.terms()) EXPECT_EQ(c, 1);
    }
  }
  EXPECT_EQ(MonomialOrbitSum(Partition{1, 1}, 2).size(), 4u);
  EXPECT_EQ(MonomialOrbitSum(Partition{2, 1}, 2).size(), 8u);
}

TEST(Composition, OrdersAndEnumeration) {
  EXPECT_TRUE(DominanceLeq(Composition{1, 1}, Composition{2, 0}));
  EXPECT_FALSE(DominanceLeq(Composition{2, 0}, Composition{1, 1}));
  EXPECT_TRUE(Precedes(Composition{0, 1}, Composition{1, 0}));
  EXPECT_FALSE(Precedes(Composition{1, 0}, Composition{0, 1}));
  EXPECT_TRUE(Precedes(Composition{1, 1}, Composition{0, 2}));
  EXPECT_EQ(Composition({0, -2, 1}).dominant(), Composition({2, 1, 0}));
  EXPECT_EQ(PartitionsInBox(2, 3).size(), 10u);
  EXPECT_EQ(CompositionsInBox(2, -1, 2).size(), 16u);
  EXPECT_EQ(ParseIndexVector("2,1,0"), (std::vector<int>{2, 1, 0}));
  EXPECT_THROW(ParseIndexVector("2,,1"), ParseError);
  EXPECT_THROW(Partition({1, 2}), InvalidParameters);
}

}  // namespace
}  // namespace koorn
