#include "koorn/rational.h"

#include <cctype>

#include "koorn/error.h"

namespace koorn {

namespace {

bool IsIntegerLiteral(std::string_view s) {
  if (s.empty()) return false;
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a fraction: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational out(n, d);
  out.canonicalize();
  return out;
}

std::string ToFractionString(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational Pow(const Rational& value, int exponent) {
  if (exponent < 0) {
    if (value == 0) throw NonGenericParameters("zero raised to a negative power");
    Rational inv = 1 / value;
    return Pow(inv, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

int CompareAbsToOne(const Rational& value) {
  const int c = mpz_cmpabs(value.get_num_mpz_t(), value.get_den_mpz_t());
  return (c > 0) - (c < 0);
}

double ToDouble(const Rational& value) { return value.get_d(); }

}  // namespace koorn
