#include "koorn/laurent_poly.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "koorn/error.h"

namespace koorn {

Exponent Exponent::FromVector(std::span<const int> v) {
  if (v.size() > static_cast<size_t>(kMaxVars)) {
    throw DimensionMismatch("more than kMaxVars variables");
  }
  Exponent out;
  std::copy(v.begin(), v.end(), out.e.begin());
  return out;
}

bool Exponent::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Exponent Exponent::operator+(const Exponent& o) const {
  Exponent out;
  for (int i = 0; i < kMaxVars; ++i) out.e[i] = e[i] + o.e[i];
  return out;
}

Exponent Exponent::operator-(const Exponent& o) const {
  Exponent out;
  for (int i = 0; i < kMaxVars; ++i) out.e[i] = e[i] - o.e[i];
  return out;
}

Exponent Exponent::operator-() const { return scaled(-1); }

Exponent Exponent::scaled(int k) const {
  Exponent out;
  for (int i = 0; i < kMaxVars; ++i) out.e[i] = e[i] * k;
  return out;
}

LaurentPoly::LaurentPoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxVars) {
    throw DimensionMismatch("variable count out of range: " + std::to_string(num_vars));
  }
}

LaurentPoly LaurentPoly::Constant(int num_vars, const Rational& c) {
  return Monomial(num_vars, Exponent{}, c);
}

LaurentPoly LaurentPoly::Monomial(int num_vars, const Exponent& exp, const Rational& c) {
  LaurentPoly out(num_vars);
  out.add_term(exp, c);
  return out;
}

LaurentPoly LaurentPoly::Variable(int num_vars, int var, int power, const Rational& c) {
  if (var < 0 || var >= num_vars) throw DimensionMismatch("variable index out of range");
  return Monomial(num_vars, Exponent::Unit(var, power), c);
}

Rational LaurentPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& exp, const Rational& c) {
  if (c == 0) return;
  for (int i = num_vars_; i < kMaxVars; ++i) {
    if (exp[i] != 0) throw DimensionMismatch("exponent uses a variable beyond n");
  }
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.num_vars_ != num_vars_) throw DimensionMismatch("adding polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.num_vars_ != num_vars_) throw DimensionMismatch("subtracting polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars_ != b.num_vars_) throw DimensionMismatch("multiplying polynomials in different rings");
  LaurentPoly out(a.num_vars_);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      out.add_term(ea + eb, prod);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

int LaurentPoly::min_degree(int var) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return m;
}

int LaurentPoly::max_degree(int var) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return m;
}

bool LaurentPoly::involves(int var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

LaurentPoly LaurentPoly::substitute(int var, const Rational& scale, const Exponent& mono) const {
  if (mono[var] != 0) throw DimensionMismatch("substituted monomial involves the eliminated variable");
  LaurentPoly out(num_vars_);
  if (scale == 0) {
    // Only terms without z_var survive; negative powers of zero are undefined.
    for (const auto& [e, c] : terms_) {
      if (e[var] < 0) throw NonGenericParameters("substituting zero into a negative power");
      if (e[var] == 0) out.add_term(e, c);
    }
    return out;
  }
  const int lo = min_degree(var);
  const int hi = max_degree(var);
  std::vector<Rational> powers(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) powers[k - lo] = Pow(scale, k);
  Rational prod;
  for (const auto& [e, c] : terms_) {
    const int k = e[var];
    Exponent ne = e + mono.scaled(k);
    ne[var] = 0;
    mpq_mul(prod.get_mpq_t(), c.get_mpq_t(), powers[k - lo].get_mpq_t());
    out.add_term(ne, prod);
  }
  return out;
}

Rational LaurentPoly::evaluate(std::span<const Rational> z) const {
  if (static_cast<int>(z.size()) != num_vars_) throw DimensionMismatch("evaluation point has wrong size");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] != 0) term *= Pow(z[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

LaurentPoly LaurentPoly::slice(int var, int power) const {
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == power) {
      Exponent ne = e;
      ne[var] = 0;
      out.terms_.emplace(ne, c);
    }
  }
  return out;
}

std::complex<double> LaurentPoly::evaluate(std::span<const std::complex<double>> z) const {
  if (static_cast<int>(z.size()) != num_vars_) throw DimensionMismatch("evaluation point has wrong size");
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.get_d();
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] != 0) term *= std::pow(z[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

const LaurentPoly::TermMap::value_type& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw InvalidParameters("leading term of the zero polynomial");
  return *terms_.rbegin();
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    const bool unit_coeff = mag == 1;
    bool any_var = false;
    if (!unit_coeff) os << mag.get_str();
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (any_var || !unit_coeff) os << "*";
      os << "z" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      any_var = true;
    }
    if (unit_coeff && !any_var) os << "1";
  }
  return os.str();
}

LaurentPoly Pow(const LaurentPoly& f, int k) {
  if (k < 0) throw InvalidParameters("negative power of a Laurent polynomial");
  LaurentPoly out = LaurentPoly::Constant(f.num_vars(), 1);
  LaurentPoly base = f;
  while (k > 0) {
    if (k & 1) out *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return out;
}

LaurentPoly ExactDivide(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.num_vars() != g.num_vars()) throw DimensionMismatch("dividing polynomials in different rings");
  if (g.is_zero()) throw InexactDivision("division by the zero polynomial");
  const int n = f.num_vars();
  if (f.is_zero()) return LaurentPoly(n);
  // Shift both operands into the ordinary polynomial ring; the quotient of
  // the shifted operands is then an ordinary polynomial too.
  Exponent f_low, g_low;
  for (int i = 0; i < n; ++i) {
    f_low[i] = f.min_degree(i);
    g_low[i] = g.min_degree(i);
  }
  const LaurentPoly gs = g.shifted(-g_low);
  LaurentPoly rem = f.shifted(-f_low);
  const auto& [g_lead_exp, g_lead_coeff] = gs.leading_term();
  LaurentPoly quotient(n);
  while (!rem.is_zero()) {
    const auto [lead_exp, lead_coeff] = rem.leading_term();
    Exponent m = lead_exp - g_lead_exp;
    for (int i = 0; i < n; ++i) {
      if (m[i] < 0) throw InexactDivision("nonzero remainder in exact division");
    }
    const Rational c = lead_coeff / g_lead_coeff;
    quotient.add_term(m, c);
    for (const auto& [e, gc] : gs.terms()) rem.add_term(e + m, -c * gc);
  }
  return quotient.shifted(f_low - g_low);
}

LaurentPoly MonomialOrbitSum(const Partition& lambda, int n) {
  const Partition padded = lambda.padded(n);
  std::vector<int> parts = padded.parts();
  std::sort(parts.begin(), parts.end());
  LaurentPoly out(n);
  do {
    std::vector<int> nonzero;
    for (int i = 0; i < n; ++i) {
      if (parts[i] != 0) nonzero.push_back(i);
    }
    const unsigned masks = 1u << nonzero.size();
    for (unsigned mask = 0; mask < masks; ++mask) {
      Exponent e = Exponent::FromVector(parts);
      for (size_t k = 0; k < nonzero.size(); ++k) {
        if (mask & (1u << k)) e[nonzero[k]] = -e[nonzero[k]];
      }
      out.add_term(e, 1);
    }
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

}  // namespace koorn
