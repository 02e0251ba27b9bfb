#ifndef KOORN_RATIONAL_H_
#define KOORN_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace koorn {

// Exact rational scalar. gmp keeps results of arithmetic in lowest terms with
// a positive denominator, so operator== is canonical.
using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q". Throws ParseError on malformed input or a zero
// denominator.
Rational ParseRational(std::string_view text);

// Canonical "p/q" form; integers print as "p/1" so the format is uniform.
std::string ToFractionString(const Rational& value);

// value^exponent for any integer exponent. Throws NonGenericParameters when
// raising zero to a negative power.
Rational Pow(const Rational& value, int exponent);

// Compares |value| with 1: negative, zero or positive.
int CompareAbsToOne(const Rational& value);

double ToDouble(const Rational& value);

}  // namespace koorn

#endif  // KOORN_RATIONAL_H_
