#ifndef KOORN_PARAMS_H_
#define KOORN_PARAMS_H_

#include <array>
#include <string>
#include <string_view>

#include "koorn/rational.h"

namespace koorn {

enum class ParameterMode {
  // t; a, b; t0..t3 independent (symmetric theory).
  kSymmetric,
  // t; a, b, c, d with (t0..t3) mirroring (a, b, c, d) (nonsymmetric theory).
  kNonsymmetric,
};

// An exact rational specialization of the parameters.
struct ParameterPoint {
  Rational t = 0;
  Rational a = 0, b = 0, c = 0, d = 0;
  std::array<Rational, 4> tk{0, 0, 0, 0};  // t0, t1, t2, t3
  ParameterMode mode = ParameterMode::kSymmetric;

  static ParameterPoint Symmetric(const Rational& t, const Rational& a, const Rational& b,
                                  const std::array<Rational, 4>& tk);
  static ParameterPoint Nonsymmetric(const Rational& t, const Rational& a, const Rational& b,
                                     const Rational& c, const Rational& d);

  // t0 t1 t2 t3.
  Rational tk_product() const { return tk[0] * tk[1] * tk[2] * tk[3]; }

  // Every parameter replaced by its inverse (the iota involution). Zero
  // parameters stay zero. The result is exempt from the modulus constraint.
  ParameterPoint inverted() const;

  // Throws InvalidParameters unless every parameter the integrand uses has
  // modulus < 1 (zeros are allowed: the matching density factor is 1).
  void require_integration_moduli() const;

  // Sets a named parameter ("t", "a".."d", "t0".."t3"). In nonsymmetric mode
  // a..d also update t0..t3. Throws ParseError on an unknown name.
  void set(std::string_view name, const Rational& value);

  std::string to_string() const;

  friend bool operator==(const ParameterPoint&, const ParameterPoint&) = default;
};

// Parses "t=1/3,a=1/5,...". Unset parameters are zero.
ParameterPoint ParseParameterPoint(std::string_view text, ParameterMode mode);

}  // namespace koorn

#endif  // KOORN_PARAMS_H_
