#include <gtest/gtest.h>

#include "koorn/ct_engine.h"
#include "koorn/error.h"
#include "koorn/sampling.h"
#include "koorn/symmetric.h"

namespace koorn {
namespace {

ParameterPoint Point() {
  return ParameterPoint::Symmetric(Rational(1, 3), Rational(2, 7), Rational(-1, 5),
                                   {Rational(1, 4), Rational(-2, 9), Rational(3, 8), Rational(-1, 6)});
}

// RSumAt is the unnormalized sum over B_n.
TEST(KPoly, MatchesTheRationalSumPointwise) {
  const ParameterPoint p = Point();
  const std::vector<std::vector<Rational>> zs = {{Rational(3, 2)}, {Rational(-2, 5)}, {Rational(7, 3)}};
  for (const auto& lambda : PartitionsInBox(1, 3)) {
    const LaurentPoly k = KPoly(lambda, 1, p);
    for (const auto& z : zs) EXPECT_EQ(k.evaluate(z), RSumAt(lambda, 1, p, z) / VLambda(lambda, 1, p)) << lambda.to_string();
  }
  const std::vector<std::vector<Rational>> zs2 = {{Rational(3, 2), Rational(-5, 7)}, {Rational(2, 9), Rational(4, 3)}};
  for (const auto& lambda : PartitionsInBox(2, 2)) {
    const LaurentPoly k = KPoly(lambda, 2, p);
    for (const auto& z : zs2) EXPECT_EQ(k.evaluate(z), RSumAt(lambda, 2, p, z) / VLambda(lambda, 2, p)) << lambda.to_string();
  }
}

TEST(KPoly, OneVariableDegreeOneByHand) {
  // n = 1: K_1 = z + 1/z - e, with e the ratio fixed by orthogonality to 1.
  const ParameterPoint p = Point();
  const LaurentPoly k = KPoly(Partition{1}, 1, p);
  EXPECT_EQ(k.coefficient(Exponent::Unit(0, 1)), 1);
  EXPECT_EQ(k.coefficient(Exponent::Unit(0, -1)), 1);
  EXPECT_EQ(SymmetricInnerProduct(k, LaurentPoly::Constant(1, 1), p), 0);
}

// K_lambda by Gram-Schmidt on orbit sums along a dominance chain.
void GramSchmidtAgrees(int n, const std::vector<Partition>& chain, const ParameterPoint& p) {
  std::vector<LaurentPoly> basis;
  std::vector<Rational> norms;
  for (const auto& lambda : chain) {
    LaurentPoly m = MonomialOrbitSum(lambda, n);
    LaurentPoly k = m;
    for (size_t j = 0; j < basis.size(); ++j) {
      k -= basis[j] * (SymmetricInnerProduct(m, basis[j], p) / norms[j]);
    }
    basis.push_back(k);
    norms.push_back(SymmetricInnerProduct(k, k, p));
    EXPECT_EQ(KPoly(lambda, n, p), k) << lambda.to_string();
    EXPECT_EQ(norms.back(), NormN(lambda, n, p)) << lambda.to_string();
  }
}

TEST(KPoly, AgreesWithGramSchmidtOneVariable) {
  GramSchmidtAgrees(1, {Partition{0}, Partition{1}, Partition{2}, Partition{3}}, Point());
}

TEST(KPoly, AgreesWithGramSchmidtTwoVariables) {
  GramSchmidtAgrees(2, {Partition{0, 0}, Partition{1, 0}, Partition{1, 1}, Partition{2, 0}, Partition{2, 1}}, Point());
}

TEST(KPoly, InvariantMonicAndTriangular) {
  const ParameterPoint p = Point();
  for (const auto& lambda : PartitionsUpToWeight(3, 4)) {
    const LaurentPoly k = KPoly(lambda, 3, p);
    ASSERT_TRUE(IsBnInvariant(k));
    const auto coeffs = DecomposeMonomialBasis(k);
    EXPECT_EQ(coeffs.at(lambda), 1);
    for (const auto& [mu, c] : coeffs) EXPECT_TRUE(DominanceLeq(mu, lambda));
  }
}

TEST(KPoly, NonGenericPointIsReported) {
  // v_lambda has the factor 1 - ab for a zero part.
  const ParameterPoint p = ParameterPoint::Symmetric(Rational(1, 3), Rational(2), Rational(1, 2),
                                                     {Rational(1, 4), Rational(-2, 9), Rational(3, 8), Rational(-1, 6)});
  EXPECT_THROW(KPoly(Partition{0}, 1, p), NonGenericParameters);
}

TEST(Norms, EngineAgreesWithClosedForm) {
  const ParameterPoint p = Point();
  for (const auto& lambda : PartitionsInBox(2, 2)) EXPECT_EQ(NormNByEngine(lambda, 2, p), NormN(lambda, 2, p));
}

TEST(Application, OddVanishesEvenMatches) {
  const ApplicationPoint ap{Rational(2, 5), Rational(1, 3), Rational(-1, 4)};
  for (const auto& lambda : PartitionsUpToWeight(2, 4)) {
    EXPECT_EQ(ApplicationIntegral(lambda, 2, ap), ApplicationClosedForm(lambda, 2, ap)) << lambda.to_string();
  }
  EXPECT_EQ(ApplicationIntegral(Partition{1}, 1, ap), 0);
  EXPECT_THROW(ApplicationIntegral(Partition{1}, 1, ApplicationPoint{Rational(1), Rational(1, 3), Rational(1, 4)}),
               InvalidParameters);
}

}  // namespace
}  // namespace koorn
