#include <gtest/gtest.h>

#include "koorn/ct_engine.h"
#include "koorn/error.h"
#include "koorn/nonsymmetric.h"
#include "koorn/sampling.h"
#include "oracle.h"

namespace koorn {
namespace {

ParameterPoint Point() {
  return ParameterPoint::Nonsymmetric(Rational(1, 3), Rational(1, 5), Rational(-1, 7), Rational(2, 9),
                                      Rational(-3, 11));
}

TEST(Hecke, QuadraticAndBraidRelations) {
  ParameterSampler s(12);
  const ParameterPoint p = s.Nonsymmetric();
  for (int n = 2; n <= 3; ++n) {
    for (int k = 0; k < 4; ++k) {
      for (const auto& r : VerifyHeckeRelations(s.RandomPoly(n, 5, 2), p)) EXPECT_TRUE(r.holds) << r.name;
    }
  }
}

TEST(Hecke, TnOnOneVariableByHand) {
  // T_1 1 = -ab for n = 1 (the constant is fixed by z -> 1/z).
  const ParameterPoint p = Point();
  EXPECT_EQ(HeckeT(1, LaurentPoly::Constant(1, 1), p), LaurentPoly::Constant(1, -p.a * p.b));
  EXPECT_THROW(HeckeT(2, LaurentPoly::Constant(1, 1), p), InvalidParameters);
}

// The monic polynomial z^lambda + sum_{nu < lambda} c_nu z^nu orthogonal to
// every z^nu with nu < lambda, found by solving the linear system directly.
LaurentPoly OrthogonalOracle(const Composition& lambda, const ParameterPoint& p) {
  const int n = lambda.size();
  int r = 0;
  for (int x : lambda.parts()) r = std::max(r, std::abs(x));
  std::vector<Composition> below;
  for (const auto& nu : CompositionsInBox(n, -r, r)) {
    if (Precedes(nu, lambda)) below.push_back(nu);
  }
  auto mono = [n](const Composition& c) { return LaurentPoly::Monomial(n, Exponent::FromVector(c.parts())); };
  const size_t m = below.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
  std::vector<Rational> b(m);
  for (size_t i = 0; i < m; ++i) {
    b[i] = -InnerProduct0(mono(lambda), mono(below[i]), p);
    for (size_t j = 0; j < m; ++j) a[i][j] = InnerProduct0(mono(below[j]), mono(below[i]), p);
  }
  const auto x = testing::Solve(a, b);
  LaurentPoly e = mono(lambda);
  for (size_t j = 0; j < m; ++j) e += mono(below[j]) * x[j];
  return e;
}

TEST(EPartition, AgreesWithOrthogonalityOracle) {
  const ParameterPoint p = Point();
  for (const auto& lambda : {Partition{1}, Partition{2}, Partition{1, 0}, Partition{1, 1}, Partition{2, 0}}) {
    EXPECT_EQ(EPartition(lambda, lambda.size(), p), OrthogonalOracle(lambda, p)) << lambda.to_string();
  }
}

TEST(EComposition, RecursionIdentityHolds) {
  const ParameterPoint p = Point();
  for (const auto& mu : CompositionsInBox(2, -2, 2)) {
    const LaurentPoly e = EComposition(mu, p);
    for (int i = 1; i <= 2; ++i) {
      const auto [pc, qc] = PQCoefficients(mu, i, p);
      LaurentPoly rhs = e * pc;
      if (qc != 0) rhs += EComposition(mu.reflect(i), p) * qc;
      EXPECT_EQ(HeckeT(i, e, p), rhs) << mu.to_string() << " T" << i;
    }
  }
}

TEST(EComposition, WordsAreValidAndAgree) {
  const ParameterPoint p = Point();
  for (const auto& mu : CompositionsInBox(3, -1, 1)) {
    const auto w = CanonicalWord(mu);
    const auto v = AlternateWord(mu);
    EXPECT_TRUE(IsValidWord(mu, w));
    EXPECT_TRUE(IsValidWord(mu, v));
    EXPECT_EQ(w.size(), v.size());
    EXPECT_EQ(EComposition(mu, p, v), EComposition(mu, p)) << mu.to_string();
  }
  const std::vector<int> bad = {1};
  EXPECT_THROW(EComposition(Composition{1, 0}, p, bad), InvalidParameters);
}

TEST(EComposition, MinusOneByHand) {
  // n = 1: E_(-1) = z^-1 + const, and it is orthogonal to 1.
  const ParameterPoint p = Point();
  const LaurentPoly e = EComposition(Composition{-1}, p);
  EXPECT_EQ(e.coefficient(Exponent::Unit(0, -1)), 1);
  EXPECT_EQ(e.size(), 2u);
  EXPECT_EQ(InnerProduct0(e, LaurentPoly::Constant(1, 1), p), 0);
}

TEST(Norms, MatchClosedForm) {
  const ParameterPoint p = Point();
  for (int n = 1; n <= 2; ++n) {
    for (const auto& lambda : PartitionsInBox(n, 2)) {
      EXPECT_EQ(InnerProductE(lambda, lambda, p), NonsymmetricNormClosedForm(lambda, n, p)) << lambda.to_string();
    }
  }
}

}  // namespace
}  // namespace koorn
