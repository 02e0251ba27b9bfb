#include "koorn/symmetric.h"

#include "koorn/error.h"

namespace koorn {

namespace {

int MaxPart(const Partition& p) { return p.size() == 0 ? 0 : p[0]; }

Rational VCore(const Partition& padded, const ParameterPoint& params, bool include_zero_parts) {
  const Rational& t = params.t;
  const int m0 = padded.multiplicity(0);
  const int m1 = padded.multiplicity(1);
  Rational v = 1;
  for (int i = include_zero_parts ? 0 : 1; i <= MaxPart(padded); ++i) v *= QFactorial(padded.multiplicity(i), t);
  const Rational e4 = params.tk_product();
  for (int i = 1; i <= m1; ++i) v *= 1 - e4 * Pow(t, i - 1 + 2 * m0);
  if (include_zero_parts) {
    const Rational ab = params.a * params.b;
    for (int i = 1; i <= m0; ++i) v *= 1 - ab * Pow(t, i - 1);
  }
  return v;
}

}  // namespace

Rational VLambda(const Partition& lambda, int n, const ParameterPoint& params) {
  return VCore(lambda.padded(n), params, true);
}

Rational VLambdaPlus(const Partition& lambda, int n, const ParameterPoint& params) {
  return VCore(lambda.padded(n), params, false);
}

LaurentPoly UPrimeFactor(int part, int var, int n, const ParameterPoint& params) {
  if (part < 0) throw InvalidParameters("u factor needs a non-negative part");
  auto one_minus_over = [&](const Rational& g) {
    LaurentPoly p = LaurentPoly::Constant(n, 1);
    p.add_term(Exponent::Unit(var, -1), -g);
    return p;
  };
  if (part == 0) {
    return LaurentPoly::Variable(n, var) * one_minus_over(params.a) * one_minus_over(params.b);
  }
  LaurentPoly u = LaurentPoly::Variable(n, var, part + 1);
  for (const auto& g : params.tk) u *= one_minus_over(g);
  return u;
}

FactoredIntegrand UFactor(int part, int var, int n, const ParameterPoint& params) {
  // u'/(z - 1/z) = z^{-1} u' / (1 - z^{-2}).
  return FactoredIntegrand{UPrimeFactor(part, var, n, params) * LaurentPoly::Variable(n, var, -1),
                           {{Rational(1), Exponent::Unit(var, -2)}}};
}

LaurentPoly DeltaBC(int n) {
  LaurentPoly d = LaurentPoly::Constant(n, 1);
  for (int i = 0; i < n; ++i) {
    d *= LaurentPoly::Variable(n, i) - LaurentPoly::Variable(n, i, -1);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      d *= LaurentPoly::Variable(n, i, -1) - LaurentPoly::Variable(n, j) - LaurentPoly::Variable(n, j, -1) +
           LaurentPoly::Variable(n, i);
    }
  }
  return d;
}

LaurentPoly KPoly(const Partition& lambda, int n, const ParameterPoint& params) {
  const Partition padded = lambda.padded(n);
  const Rational v = VLambda(padded, n, params);
  if (v == 0) throw NonGenericParameters("v_lambda vanishes at " + params.to_string());

  LaurentPoly x = LaurentPoly::Constant(n, 1);
  for (int i = 0; i < n; ++i) x *= UPrimeFactor(padded[i], i, n, params);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      LaurentPoly a = LaurentPoly::Constant(n, 1);
      a.add_term(Exponent::Unit(i, -1) + Exponent::Unit(j, -1), -params.t);
      LaurentPoly b = LaurentPoly::Variable(n, i) - LaurentPoly::Variable(n, j, 1, params.t);
      x *= a * b;
    }
  }
  LaurentPoly sum(n);
  for (const auto& w : EnumerateBn(n)) {
    LaurentPoly term = ApplySignedPerm(w, x);
    if (w.sign() < 0) term *= Rational(-1);
    sum += term;
  }
  return ExactDivide(sum, DeltaBC(n)) * (Rational(1) / v);
}

FactoredIntegrand RTerm(const Partition& lambda, const SignedPermutation& w, const ParameterPoint& params) {
  const int n = w.size();
  const Partition padded = lambda.padded(n);
  FactoredIntegrand base{LaurentPoly::Constant(n, 1), {}};
  for (int i = 0; i < n; ++i) {
    FactoredIntegrand u = UFactor(padded[i], i, n, params);
    base.numerator *= u.numerator;
    base.denominators.insert(base.denominators.end(), u.denominators.begin(), u.denominators.end());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (const Exponent& m : {Exponent::Unit(j) - Exponent::Unit(i), -Exponent::Unit(i) - Exponent::Unit(j)}) {
        LaurentPoly f = LaurentPoly::Constant(n, 1);
        f.add_term(m, -params.t);
        base.numerator *= f;
        base.denominators.push_back({Rational(1), m});
      }
    }
  }
  FactoredIntegrand out{ApplySignedPerm(w, base.numerator), {}};
  for (const auto& f : base.denominators) out.denominators.push_back({f.gamma, w.apply(f.mono)});
  return out;
}

Rational RSumAt(const Partition& lambda, int n, const ParameterPoint& params, std::span<const Rational> z) {
  Rational sum = 0;
  for (const auto& w : EnumerateBn(n)) sum += RTerm(lambda, w, params).evaluate(z);
  return sum;
}

bool IsBnInvariant(const LaurentPoly& f) {
  const int n = f.num_vars();
  if (n == 0) return true;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> rho(n);
    for (int k = 0; k < n; ++k) rho[k] = k;
    std::swap(rho[i], rho[i + 1]);
    if (!(ApplySignedPerm(SignedPermutation(rho, std::vector<int>(n, 1)), f) == f)) return false;
  }
  std::vector<int> eps(n, 1);
  eps[n - 1] = -1;
  return ApplySignedPerm(SignedPermutation(SignedPermutation::Identity(n).rho(), eps), f) == f;
}

std::map<Partition, Rational> DecomposeMonomialBasis(const LaurentPoly& f) {
  if (!IsBnInvariant(f)) throw InvalidParameters("polynomial is not B_n-invariant");
  const int n = f.num_vars();
  std::map<Partition, Rational> out;
  for (const auto& [e, c] : f.terms()) {
    bool dominant = n == 0 || e[n - 1] >= 0;
    for (int i = 0; i + 1 < n && dominant; ++i) dominant = e[i] >= e[i + 1];
    if (dominant) out.emplace(Partition(std::vector<int>(e.e.begin(), e.e.begin() + n)), c);
  }
  return out;
}

FactoredIntegrand SymmetricIntegrand(const LaurentPoly& f, const LaurentPoly& g, const ParameterPoint& params) {
  if (f.num_vars() != g.num_vars()) throw DimensionMismatch("inner product operands differ in n");
  return BuildDensity(DensityKind::kSymmetric, f.num_vars(), params).times(f * g);
}

Rational SymmetricInnerProduct(const LaurentPoly& f, const LaurentPoly& g, const ParameterPoint& params) {
  return ConstantTerm(SymmetricIntegrand(f, g, params));
}

Rational NormN(const Partition& lambda, int n, const ParameterPoint& params) {
  const int m0 = lambda.padded(n).multiplicity(0);
  const Rational integral = m0 == 0 ? Rational(1) : SymmetricCtClosedForm(m0, params);
  return integral / VLambdaPlus(lambda, n, params);
}

Rational NormNByEngine(const Partition& lambda, int n, const ParameterPoint& params) {
  const int m0 = lambda.padded(n).multiplicity(0);
  const Rational integral = m0 == 0 ? Rational(1) : SymmetricCt(m0, params);
  return integral / VLambdaPlus(lambda, n, params);
}

ParameterPoint ApplicationPoint::polynomial_point() const {
  const Rational tt = t();
  return ParameterPoint::Symmetric(tt * tt, a, b, {a, b, tt * a, tt * b});
}

ParameterPoint ApplicationPoint::density_point() const {
  return ParameterPoint::Symmetric(t(), a, b, {s, -s, a, b});
}

FactoredIntegrand ApplicationIntegrand(const Partition& lambda, int n, const ApplicationPoint& point) {
  if (point.s == 0 || CompareAbsToOne(point.s) >= 0) throw InvalidParameters("s must satisfy 0 < |s| < 1");
  const LaurentPoly k = KPoly(lambda, n, point.polynomial_point());
  return BuildDensity(DensityKind::kSymmetric, n, point.density_point()).times(k);
}

Rational ApplicationIntegral(const Partition& lambda, int n, const ApplicationPoint& point) {
  return ConstantTerm(ApplicationIntegrand(lambda, n, point));
}

Rational ApplicationClosedForm(const Partition& lambda, int n, const ApplicationPoint& point) {
  if (!lambda.is_even()) return 0;
  const ParameterPoint dp = point.density_point();
  const Rational t = point.t();
  return Pow(point.s, lambda.weight()) / Pow(1 + t, lambda.length()) * NormN(lambda, n, dp) *
         VLambdaPlus(lambda, n, dp) / VLambdaPlus(lambda, n, point.polynomial_point());
}

}  // namespace koorn
