#include "koorn/sampling.h"

#include <algorithm>

namespace koorn {

std::uint64_t ParameterSampler::Below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased and independent of the standard
  // library's distribution implementation.
  const std::uint64_t limit = rng_.max() - rng_.max() % bound;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return x % bound;
}

Rational ParameterSampler::DrawValue() {
  while (true) {
    const auto m = static_cast<long>(2 + Below(49));
    const auto k = static_cast<long>(1 + Below(m - 1));
    if (4 * k > 3 * m) continue;
    Rational v(k, m);
    v.canonicalize();
    return Below(2) ? Rational(-v) : v;
  }
}

std::vector<Rational> ParameterSampler::DistinctValues(int count) {
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    const Rational v = DrawValue();
    const bool clash = std::any_of(out.begin(), out.end(), [&](const Rational& u) { return abs(u) == abs(v); });
    if (!clash) out.push_back(v);
  }
  return out;
}

ParameterPoint ParameterSampler::Nonsymmetric() {
  const auto v = DistinctValues(5);
  return ParameterPoint::Nonsymmetric(v[0], v[1], v[2], v[3], v[4]);
}

ParameterPoint ParameterSampler::Symmetric() {
  const auto v = DistinctValues(7);
  return ParameterPoint::Symmetric(v[0], v[1], v[2], {v[3], v[4], v[5], v[6]});
}

ApplicationPoint ParameterSampler::Application() {
  const auto v = DistinctValues(3);
  return ApplicationPoint{v[0], v[1], v[2]};
}

LaurentPoly ParameterSampler::RandomPoly(int n, int terms, int max_exp) {
  LaurentPoly f(n);
  for (int k = 0; k < terms; ++k) {
    Exponent e;
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>(Below(2 * max_exp + 1)) - max_exp;
    const long num = static_cast<long>(Below(19)) - 9;
    const long den = static_cast<long>(1 + Below(7));
    Rational c(num, den);
    c.canonicalize();
    f.add_term(e, c);
  }
  return f;
}

}  // namespace koorn
