#ifndef KOORN_LAURENT_POLY_H_
#define KOORN_LAURENT_POLY_H_

#include <array>
#include <compare>
#include <complex>
#include <map>
#include <span>
#include <string>

#include "koorn/composition.h"
#include "koorn/rational.h"

namespace koorn {

inline constexpr int kMaxVars = 8;

// Dense exponent vector. Slots at or beyond the owning polynomial's variable
// count are always zero, so structural comparison is canonical.
struct Exponent {
  std::array<int, kMaxVars> e{};

  Exponent() = default;
  static Exponent FromVector(std::span<const int> v);
  static Exponent Unit(int i, int power = 1) {
    Exponent out;
    out.e[i] = power;
    return out;
  }

  int& operator[](int i) { return e[i]; }
  int operator[](int i) const { return e[i]; }
  bool is_zero() const;

  Exponent operator+(const Exponent& o) const;
  Exponent operator-(const Exponent& o) const;
  Exponent operator-() const;
  Exponent scaled(int k) const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

// Exact multivariate Laurent polynomial over the rationals in n <= kMaxVars
// variables z_1..z_n. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit LaurentPoly(int num_vars = 0);
  static LaurentPoly Constant(int num_vars, const Rational& c);
  static LaurentPoly Monomial(int num_vars, const Exponent& exp, const Rational& c = 1);
  // c * z_{var+1}^power (var is 0-based).
  static LaurentPoly Variable(int num_vars, int var, int power = 1, const Rational& c = 1);

  int num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& exp) const;
  Rational constant_term() const { return coefficient(Exponent{}); }
  void add_term(const Exponent& exp, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  // Multiplies every monomial by z^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  // z^mu -> z^{-mu} (the bar involution).
  LaurentPoly bar() const;
  // Smallest / largest exponent of z_{var+1}; 0 for the zero polynomial.
  int min_degree(int var) const;
  int max_degree(int var) const;
  bool involves(int var) const;

  // Replaces z_{var+1} by scale * z^mono, where mono has mono[var] == 0.
  LaurentPoly substitute(int var, const Rational& scale, const Exponent& mono) const;
  // Coefficient of z_{var+1}^power, as a polynomial in the other variables.
  LaurentPoly slice(int var, int power) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> z) const;
  // Exact value at a rational point; zero coordinates with negative powers
  // throw NonGenericParameters.
  Rational evaluate(std::span<const Rational> z) const;

  // Leading term in the lexicographic order on exponent vectors.
  const TermMap::value_type& leading_term() const;

  std::string to_string() const;

 private:
  int num_vars_;
  TermMap terms_;
};

LaurentPoly Pow(const LaurentPoly& f, int k);

// q with q * g == f exactly. Throws InexactDivision if g does not divide f
// in the Laurent ring, DimensionMismatch on differing variable counts.
LaurentPoly ExactDivide(const LaurentPoly& f, const LaurentPoly& g);

// Sum of z^mu over the distinct elements of the B_n orbit of z^lambda, each
// with coefficient one.
LaurentPoly MonomialOrbitSum(const Partition& lambda, int n);

}  // namespace koorn

#endif  // KOORN_LAURENT_POLY_H_
