#ifndef KOORN_NONSYMMETRIC_H_
#define KOORN_NONSYMMETRIC_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "koorn/composition.h"
#include "koorn/laurent_poly.h"
#include "koorn/params.h"

namespace koorn {

// prod_{lambda_i > 0} z_i^{lambda_i} (1 - c/z_i)(1 - d/z_i), lambda padded to n.
LaurentPoly EPartition(const Partition& lambda, int n, const ParameterPoint& params);

// Noumi action of T_i, 1 <= i <= n:
//   T_i f = t f + (x_{i+1} - t x_i)/(x_{i+1} - x_i) (f^{s_i} - f),  i < n,
//   T_n f = -ab f + (1 - a x_n)(1 - b x_n)/(1 - x_n^2) (f^{s_n} - f).
LaurentPoly HeckeT(int i, const LaurentPoly& f, const ParameterPoint& params);

struct CompositionStats {
  int n_lambda = 0;
  int r_lambda = 0;
};

// n_lambda = -#{l < i : lambda_l in {-1, 0}} - 2 #{l > i+1 : lambda_l = 0} - 1,
// r_lambda = m_{-1} + m_0 - 1.
CompositionStats Stats(const Composition& lambda, int i);

// (p_i(lambda), q_i(lambda)) with T_i E_lambda = p E_lambda + q E_{s_i lambda}.
// In the lambda_n = +-1 rows the power of t is t^{r} for lambda_n = -1 and
// t^{r+1} for lambda_n = 1.
std::pair<Rational, Rational> PQCoefficients(const Composition& lambda, int i, const ParameterPoint& params);

// Words are sequences of generator indices (1-based) applied left to right,
// starting from the dominant weight mu^+.
// Canonical: walk back from mu to mu^+ choosing the smallest index that
// shortens the distance, then reverse.
std::vector<int> CanonicalWord(const Composition& mu);
// Same walk choosing the largest index.
std::vector<int> AlternateWord(const Composition& mu);
// Whether word carries mu^+ to mu through nontrivial moves.
bool IsValidWord(const Composition& mu, std::span<const int> word);

// E_mu by the recursion E_{s_i lambda} = (T_i E_lambda - p_i E_lambda) / q_i
// along word (canonical if empty). Throws NonGenericParameters when a q_i
// vanishes and InvalidParameters when word does not reach mu.
LaurentPoly EComposition(const Composition& mu, const ParameterPoint& params, std::span<const int> word = {});

// <E_lambda, E_mu>_0 with E_mu rebuilt at the inverted point.
Rational InnerProductE(const Composition& lambda, const Composition& mu, const ParameterPoint& params);
// <E_lambda, z^mu>_0.
Rational InnerProductEMonomial(const Composition& lambda, const Composition& mu, const ParameterPoint& params);

// Closed form of <E_lambda, E_lambda>_0: the nonsymmetric constant term in
// m_0(lambda) variables.
Rational NonsymmetricNormClosedForm(const Partition& lambda, int n, const ParameterPoint& params);

struct RelationCheck {
  std::string name;
  bool holds = false;
};

// Quadratic, commutation, braid and length-four relations of T_1..T_n on f.
std::vector<RelationCheck> VerifyHeckeRelations(const LaurentPoly& f, const ParameterPoint& params);

}  // namespace koorn

#endif  // KOORN_NONSYMMETRIC_H_
