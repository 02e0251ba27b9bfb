#include <gtest/gtest.h>

#include "koorn/ct_engine.h"
#include "koorn/error.h"
#include "koorn/params.h"
#include "koorn/sampling.h"

namespace koorn {
namespace {

TEST(ConstantTerm, LaurentPolynomialIsItsOwnConstantCoefficient) {
  ParameterSampler s(4);
  const LaurentPoly f = s.RandomPoly(2, 8, 3);
  EXPECT_EQ(ConstantTerm(FactoredIntegrand{f, {}}), f.constant_term());
}

TEST(ConstantTerm, GeometricSeriesByHand) {
  // 1 / ((1 - a z)(1 - b/z)) = sum_{j,k} a^j b^k z^{j-k}: CT = 1/(1 - ab).
  const Rational a(1, 3), b(-2, 5);
  FactoredIntegrand f{LaurentPoly::Constant(1, 1), {{a, Exponent::Unit(0, 1)}, {b, Exponent::Unit(0, -1)}}};
  EXPECT_EQ(ConstantTerm(f), 1 / (1 - a * b));
  // 1 / (1 - a z^-2)(1 - b z^2) = 1/(1 - ab) as well.
  FactoredIntegrand g{LaurentPoly::Constant(1, 1), {{a, Exponent::Unit(0, -2)}, {b, Exponent::Unit(0, 2)}}};
  EXPECT_EQ(ConstantTerm(g), 1 / (1 - a * b));
  // z^2 / (1 - a z^-1)(1 - b z^-1): coefficient of z^-2 in the expansion.
  FactoredIntegrand h{LaurentPoly::Variable(1, 0, 2), {{a, Exponent::Unit(0, -1)}, {b, Exponent::Unit(0, -1)}}};
  EXPECT_EQ(ConstantTerm(h), a * a + a * b + b * b);
}

TEST(ConstantTerm, TwoVariableSeriesByHand) {
  // 1 / (1 - c z1/z2)(1 - d z2/z1): CT = 1/(1 - cd).
  const Rational c(1, 4), d(3, 7);
  FactoredIntegrand f{LaurentPoly::Constant(2, 1),
                      {{c, Exponent::Unit(0) - Exponent::Unit(1)}, {d, Exponent::Unit(1) - Exponent::Unit(0)}}};
  EXPECT_EQ(ConstantTerm(f), 1 / (1 - c * d));
}

TEST(ConstantTerm, UnitModulusPoleIsRejected) {
  FactoredIntegrand f{LaurentPoly::Constant(1, 1), {{Rational(1), Exponent::Unit(0, 1)}}};
  EXPECT_THROW(ConstantTerm(f), InvalidParameters);
}

TEST(ConstantTerm, AgreesWithQuadratureOnDensities) {
  ParameterSampler s(8);
  for (int k = 0; k < 3; ++k) {
    const ParameterPoint p = s.Nonsymmetric();
    const ParameterPoint ps = s.Symmetric();
    for (int n = 1; n <= 2; ++n) {
      for (const auto& d : {BuildDensity(DensityKind::kNonsymmetric, n, p), BuildDensity(DensityKind::kSymmetric, n, ps)}) {
        const Rational exact = ConstantTerm(d);
        EXPECT_NEAR(CtQuadrature(d, 128).real(), exact.get_d(), 1e-8);
        EXPECT_NEAR(CtQuadrature(d, 128).imag(), 0, 1e-8);
      }
    }
  }
}

TEST(ConstantTerm, ClosedFormsAndRecurrence) {
  ParameterSampler s(9);
  const ParameterPoint p = s.Nonsymmetric();
  const ParameterPoint ps = s.Symmetric();
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(NonsymmetricCt(n, p), NonsymmetricCtClosedForm(n, p)) << n;
    EXPECT_EQ(SymmetricCt(n, ps), SymmetricCtClosedForm(n, ps)) << n;
  }
  EXPECT_EQ(NonsymmetricCtRecurrence(3, p), NonsymmetricCt(3, p));
}

TEST(ConstantTerm, NonsymmetricOneVariableByHand) {
  // n = 1: (1 - z^2) / ((1 - a z)(1 - b z)(1 - c z)(1 - d z)(1 - c/z)(1 - d/z)) integrates to
  // (1 - abcd) / ((1 - ac)(1 - ad)(1 - bc)(1 - bd)(1 - cd)) at q = 0.
  const Rational a(1, 3), b(-1, 4), c(2, 5), d(-3, 7);
  const ParameterPoint p = ParameterPoint::Nonsymmetric(Rational(1, 2), a, b, c, d);
  const Rational expect = (1 - a * b * c * d) / ((1 - a * c) * (1 - a * d) * (1 - b * c) * (1 - b * d) * (1 - c * d));
  EXPECT_EQ(NonsymmetricCt(1, p), expect);
}

TEST(ConstantTerm, EliminationOrderDoesNotMatter) {
  ParameterSampler s(10);
  const ParameterPoint p = s.Nonsymmetric();
  const FactoredIntegrand d = BuildDensity(DensityKind::kNonsymmetric, 3, p);
  const int order[] = {2, 0, 1};
  EXPECT_EQ(ConstantTerm(d, order), ConstantTerm(d));
}

TEST(Params, ModuliAndParsing) {
  const ParameterPoint p = ParseParameterPoint("t=1/3,a=1/5,b=-1/7,c=2/9,d=-3/11", ParameterMode::kNonsymmetric);
  EXPECT_EQ(p.tk[2], Rational(2, 9));
  EXPECT_NO_THROW(p.require_integration_moduli());
  EXPECT_EQ(p.inverted().a, Rational(5));
  EXPECT_THROW(p.inverted().require_integration_moduli(), InvalidParameters);
  EXPECT_THROW(ParseParameterPoint("t=1/3,zz=2", ParameterMode::kNonsymmetric), ParseError);
}

}  // namespace
}  // namespace koorn
