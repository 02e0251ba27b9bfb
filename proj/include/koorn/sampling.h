#ifndef KOORN_SAMPLING_H_
#define KOORN_SAMPLING_H_

#include <cstdint>
#include <random>

#include "koorn/laurent_poly.h"
#include "koorn/params.h"
#include "koorn/symmetric.h"

namespace koorn {

// Deterministic draws of exact parameter values k/m with 1 <= k < m <= 50,
// random sign and |k/m| <= 3/4. Values within one point have pairwise
// distinct moduli.
class ParameterSampler {
 public:
  explicit ParameterSampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform integer in [0, bound).
  std::uint64_t Below(std::uint64_t bound);
  Rational DrawValue();

  ParameterPoint Nonsymmetric();
  ParameterPoint Symmetric();
  ApplicationPoint Application();

  // Random Laurent polynomial with `terms` monomials, exponents in
  // [-max_exp, max_exp] and small rational coefficients.
  LaurentPoly RandomPoly(int n, int terms, int max_exp);

 private:
  std::vector<Rational> DistinctValues(int count);

  std::mt19937_64 rng_;
};

}  // namespace koorn

#endif  // KOORN_SAMPLING_H_
