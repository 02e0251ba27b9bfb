#ifndef KOORN_SYMMETRIC_H_
#define KOORN_SYMMETRIC_H_

#include <map>

#include "koorn/composition.h"
#include "koorn/ct_engine.h"
#include "koorn/laurent_poly.h"
#include "koorn/params.h"
#include "koorn/signed_perm.h"

namespace koorn {

// v_lambda(t; a, b; t0..t3) for lambda padded to n parts.
Rational VLambda(const Partition& lambda, int n, const ParameterPoint& params);
// v_{lambda+}(t; t0..t3): v_lambda without the zero-part factors.
Rational VLambdaPlus(const Partition& lambda, int n, const ParameterPoint& params);

// u'_lambda(z_var) for the part lambda_i: z(1 - a/z)(1 - b/z) when the part is
// zero, z^{part+1} prod_k (1 - t_k/z) otherwise.
LaurentPoly UPrimeFactor(int part, int var, int n, const ParameterPoint& params);
// u_lambda(z_var) = u'_lambda(z_var) / (z_var - z_var^{-1}).
FactoredIntegrand UFactor(int part, int var, int n, const ParameterPoint& params);

// prod_i (z_i - 1/z_i) prod_{i<j} (z_i^{-1} - z_j - z_j^{-1} + z_i).
LaurentPoly DeltaBC(int n);

// K_lambda in n variables: the antisymmetrized sum divided exactly by
// Delta_BC and scaled by 1/v_lambda. Throws NonGenericParameters if v_lambda
// vanishes and InexactDivision if the sum is not divisible.
LaurentPoly KPoly(const Partition& lambda, int n, const ParameterPoint& params);

// The w-summand of v_lambda K_lambda as a structured rational term.
FactoredIntegrand RTerm(const Partition& lambda, const SignedPermutation& w, const ParameterPoint& params);
// v_lambda K_lambda evaluated at a rational point by summing the rational
// terms over B_n; independent of the Delta_BC route.
Rational RSumAt(const Partition& lambda, int n, const ParameterPoint& params, std::span<const Rational> z);

// Whether f is fixed by every element of B_n (checked on generators).
bool IsBnInvariant(const LaurentPoly& f);

// Coefficients c_mu with f = sum c_mu m_mu. Throws InvalidParameters if f is
// not B_n-invariant.
std::map<Partition, Rational> DecomposeMonomialBasis(const LaurentPoly& f);

// <f, g> = CT(f g Delta~_K) with the symmetric density at params.
FactoredIntegrand SymmetricIntegrand(const LaurentPoly& f, const LaurentPoly& g, const ParameterPoint& params);
Rational SymmetricInnerProduct(const LaurentPoly& f, const LaurentPoly& g, const ParameterPoint& params);

// N_lambda: CT of the symmetric density in m_0(lambda) variables over v_{lambda+}.
Rational NormN(const Partition& lambda, int n, const ParameterPoint& params);
// The same integral computed by the residue engine rather than the closed form.
Rational NormNByEngine(const Partition& lambda, int n, const ParameterPoint& params);

// Parameters of the vanishing integral, with t = s^2.
struct ApplicationPoint {
  Rational s, a, b;

  Rational t() const { return s * s; }
  // (t^2; a, b; a, b, ta, tb), the point for K_lambda.
  ParameterPoint polynomial_point() const;
  // (t; s, -s, a, b), the point for the density.
  ParameterPoint density_point() const;
};

FactoredIntegrand ApplicationIntegrand(const Partition& lambda, int n, const ApplicationPoint& point);
Rational ApplicationIntegral(const Partition& lambda, int n, const ApplicationPoint& point);
// 0 if lambda has an odd part, otherwise
// s^{|lambda|} / (1+t)^{l(lambda)} N_lambda v_{lambda+}(t; s,-s,a,b) / v_{lambda+}(t^2; a,b,ta,tb).
Rational ApplicationClosedForm(const Partition& lambda, int n, const ApplicationPoint& point);

}  // namespace koorn

#endif  // KOORN_SYMMETRIC_H_
