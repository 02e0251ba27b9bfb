#ifndef KOORN_CT_ENGINE_H_
#define KOORN_CT_ENGINE_H_

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "koorn/laurent_poly.h"
#include "koorn/params.h"
#include "koorn/rational.h"

namespace koorn {

// The factor (1 - gamma * z^mono).
struct DenominatorFactor {
  Rational gamma;
  Exponent mono;

  std::string to_string(int num_vars) const;

  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
  friend bool operator<(const DenominatorFactor& a, const DenominatorFactor& b) {
    if (a.mono != b.mono) return a.mono < b.mono;
    return a.gamma < b.gamma;
  }
};

// numerator / prod(denominators).
struct FactoredIntegrand {
  LaurentPoly numerator;
  std::vector<DenominatorFactor> denominators;

  int num_vars() const { return numerator.num_vars(); }
  // Multiplies the numerator by f.
  FactoredIntegrand times(const LaurentPoly& f) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> z) const;
  // Throws NonGenericParameters if a denominator vanishes at z.
  Rational evaluate(std::span<const Rational> z) const;
};

enum class DensityKind { kSymmetric, kNonsymmetric };

// Symmetric: the q = 0 Koornwinder weight in (t; t0..t3), including the
// 1/(2^n n!) prefactor. Nonsymmetric: the q = 0 weight in (t; a, b, c, d).
// Factors whose parameter is zero are omitted. Throws InvalidParameters on a
// modulus violation.
FactoredIntegrand BuildDensity(DensityKind kind, int n, const ParameterPoint& params);

// Exact constant term of the integrand on the unit torus, eliminating the
// variables in `order` (0-based; default 0, 1, ..., n-1) by summing residues
// inside the unit circle. Throws NonGenericParameters on pole collisions and
// InvalidParameters when a pole lies on the circle.
Rational ConstantTerm(const FactoredIntegrand& integrand, std::span<const int> order = {});
Rational ConstantTerm(std::span<const FactoredIntegrand> integrands, std::span<const int> order = {});

// Trapezoidal rule on the N^n torus grid.
std::complex<double> CtQuadrature(const FactoredIntegrand& integrand, int grid);

// Constant term of the symmetric density.
Rational SymmetricCt(int n, const ParameterPoint& params);
// Constant term of the nonsymmetric density.
Rational NonsymmetricCt(int n, const ParameterPoint& params);

// prod_{i<n} 1/[(1-t^i ac)(1-t^i bc)(1-t^i cd)(1-t^i ad)(1-t^i bd)]
//   * prod_{j=n-1}^{2n-2} (1 - t^j abcd).
Rational NonsymmetricCtClosedForm(int n, const ParameterPoint& params);
// The same with (a,b,c,d) := (t0..t3), an extra 1/(1 - t^i ab) per i, the
// abcd product over t^{2n-2-j}, j < n, and prod_{j=1}^n (1-t)/(1-t^j).
Rational SymmetricCtClosedForm(int n, const ParameterPoint& params);

// Right side of the two-term recurrence
//   I_n(c,d) = c I_{n-1}(tc,d) / [(1-ac)(1-bc)(1-dc)(c-d)]
//            + d I_{n-1}(c,td) / [(1-ad)(1-bd)(1-cd)(d-c)],
// with I_{n-1} computed by the residue engine.
Rational NonsymmetricCtRecurrence(int n, const ParameterPoint& params);

// <f, g>_0 = CT(f * bar(g_iota) * Delta_K), where g_iota is g rebuilt at the
// inverted parameter point.
Rational InnerProduct0(const LaurentPoly& f, const LaurentPoly& g_iota, const ParameterPoint& params);
FactoredIntegrand InnerProduct0Integrand(const LaurentPoly& f, const LaurentPoly& g_iota,
                                         const ParameterPoint& params);

}  // namespace koorn

#endif  // KOORN_CT_ENGINE_H_
