#include "koorn/ct_engine.h"

#include <map>
#include <numeric>

#include "koorn/error.h"

namespace koorn {

std::string DenominatorFactor::to_string(int num_vars) const {
  return "(1 - " + LaurentPoly::Monomial(num_vars, mono, gamma).to_string() + ")";
}

FactoredIntegrand FactoredIntegrand::times(const LaurentPoly& f) const {
  return FactoredIntegrand{numerator * f, denominators};
}

std::complex<double> FactoredIntegrand::evaluate(std::span<const std::complex<double>> z) const {
  std::complex<double> value = numerator.evaluate(z);
  for (const auto& f : denominators) {
    std::complex<double> m = f.gamma.get_d();
    for (int i = 0; i < num_vars(); ++i) {
      if (f.mono[i] != 0) m *= std::pow(z[i], f.mono[i]);
    }
    value /= 1.0 - m;
  }
  return value;
}

Rational FactoredIntegrand::evaluate(std::span<const Rational> z) const {
  Rational value = numerator.evaluate(z);
  for (const auto& f : denominators) {
    Rational m = f.gamma;
    for (int i = 0; i < num_vars(); ++i) {
      if (f.mono[i] != 0) m *= Pow(z[i], f.mono[i]);
    }
    if (m == 1) throw NonGenericParameters("denominator vanishes at the evaluation point");
    value /= 1 - m;
  }
  return value;
}

namespace {

LaurentPoly OneMinus(int n, const Rational& gamma, const Exponent& mono) {
  LaurentPoly p = LaurentPoly::Constant(n, 1);
  p.add_term(mono, -gamma);
  return p;
}

void CheckModulus(const char* name, const Rational& x) {
  if (CompareAbsToOne(x) >= 0) {
    throw InvalidParameters(std::string("parameter ") + name + " = " + x.get_str() + " must have modulus < 1");
  }
}

}  // namespace

FactoredIntegrand BuildDensity(DensityKind kind, int n, const ParameterPoint& params) {
  if (n < 1 || n > kMaxVars) throw InvalidParameters("density rank out of range");
  CheckModulus("t", params.t);
  std::array<Rational, 4> uni;
  static const char* kSymNames[] = {"t0", "t1", "t2", "t3"};
  static const char* kNonsymNames[] = {"a", "b", "c", "d"};
  if (kind == DensityKind::kSymmetric) {
    uni = params.tk;
  } else {
    uni = {params.a, params.b, params.c, params.d};
  }
  for (int k = 0; k < 4; ++k) {
    CheckModulus(kind == DensityKind::kSymmetric ? kSymNames[k] : kNonsymNames[k], uni[k]);
  }

  FactoredIntegrand out{LaurentPoly::Constant(n, 1), {}};
  auto add_den = [&](const Rational& g, const Exponent& m) {
    if (g != 0) out.denominators.push_back({g, m});
  };
  for (int i = 0; i < n; ++i) {
    const Exponent zi = Exponent::Unit(i);
    out.numerator *= OneMinus(n, 1, zi.scaled(2));
    if (kind == DensityKind::kSymmetric) {
      out.numerator *= OneMinus(n, 1, zi.scaled(-2));
      for (const auto& g : uni) {
        add_den(g, zi);
        add_den(g, -zi);
      }
    } else {
      for (const auto& g : uni) add_den(g, zi);
      add_den(params.c, -zi);
      add_den(params.d, -zi);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Exponent zi = Exponent::Unit(i), zj = Exponent::Unit(j);
      std::vector<Exponent> monos = {zi + zj, zi - zj};
      if (kind == DensityKind::kSymmetric) {
        monos.push_back(-zi - zj);
        monos.push_back(zj - zi);
      }
      for (const auto& m : monos) {
        out.numerator *= OneMinus(n, 1, m);
        add_den(params.t, m);
      }
    }
  }
  if (kind == DensityKind::kSymmetric) {
    Rational scale = 1;
    for (int i = 1; i <= n; ++i) scale *= 2 * i;
    out.numerator *= Rational(1) / scale;
  }
  return out;
}

namespace {

using Denoms = std::vector<DenominatorFactor>;
using TermSum = std::map<Denoms, LaurentPoly>;

// Folds constant factors into the numerator, orients every factor so that
// |gamma| <= 1, cancels factors on the unit circle and repeated factors
// against the numerator where it divides, and sorts the rest.
void AddNormalized(TermSum& sum, LaurentPoly num, Denoms den) {
  if (num.is_zero()) return;
  const int n = num.num_vars();
  Denoms kept;
  for (auto& f : den) {
    if (f.gamma == 0) continue;
    if (f.mono.is_zero()) {
      if (f.gamma == 1) throw NonGenericParameters("denominator factor vanishes identically");
      num *= Rational(1) / (1 - f.gamma);
      continue;
    }
    const int c = CompareAbsToOne(f.gamma);
    if (c > 0) {
      // 1/(1 - g z^m) = -(g z^m)^{-1} / (1 - g^{-1} z^{-m}).
      num *= LaurentPoly::Monomial(n, -f.mono, -1 / f.gamma);
      f = {1 / f.gamma, -f.mono};
    } else if (c == 0) {
      try {
        num = ExactDivide(num, OneMinus(n, f.gamma, f.mono));
        continue;
      } catch (const InexactDivision&) {
      }
    }
    kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  for (size_t k = 1; k < kept.size();) {
    if (kept[k] == kept[k - 1]) {
      try {
        num = ExactDivide(num, OneMinus(n, kept[k].gamma, kept[k].mono));
        kept.erase(kept.begin() + k);
        continue;
      } catch (const InexactDivision&) {
      }
    }
    ++k;
  }
  auto [it, inserted] = sum.try_emplace(std::move(kept), num);
  if (!inserted) {
    it->second += num;
    if (it->second.is_zero()) sum.erase(it);
  }
}

bool PoleInside(const DenominatorFactor& f, int var) {
  const int m = f.mono[var];
  const int c = CompareAbsToOne(f.gamma);
  if (m != 0 && c == 0) {
    throw InvalidParameters("pole on the unit circle from factor with |gamma| = 1");
  }
  return (m < 0 && c < 0) || (m > 0 && c > 0);
}

// Residue at z_var = 0 of num / prod(den) / z_var.
LaurentPoly ResidueAtZero(const LaurentPoly& num, const Denoms& den, int var) {
  const int n = num.num_vars();
  const int depth = -num.min_degree(var);
  int low = 0;
  for (const auto& f : den) {
    if (f.mono[var] < 0) low += -f.mono[var];
  }
  if (depth < low) return LaurentPoly(n);

  std::vector<LaurentPoly> series(depth + 1, LaurentPoly(n));
  series[0] = LaurentPoly::Constant(n, 1);
  for (const auto& f : den) {
    const int j = f.mono[var];
    if (j == 0) continue;
    Exponent rest = f.mono;
    rest[var] = 0;
    // Expansion of 1/(1 - gamma z^rest z_var^j) in powers of z_var.
    std::vector<LaurentPoly> factor(depth + 1, LaurentPoly(n));
    if (j > 0) {
      for (int r = 0; r * j <= depth; ++r) {
        factor[r * j] = LaurentPoly::Monomial(n, rest.scaled(r), Pow(f.gamma, r));
      }
    } else {
      const int step = -j;
      for (int r = 1; r * step <= depth; ++r) {
        factor[r * step] = LaurentPoly::Monomial(n, rest.scaled(-r), -Pow(f.gamma, -r));
      }
    }
    std::vector<LaurentPoly> next(depth + 1, LaurentPoly(n));
    for (int a = 0; a <= depth; ++a) {
      if (series[a].is_zero()) continue;
      for (int b = 0; a + b <= depth; ++b) {
        if (!factor[b].is_zero()) next[a + b] += series[a] * factor[b];
      }
    }
    series = std::move(next);
  }
  LaurentPoly res(n);
  for (int d = low; d <= depth; ++d) {
    if (series[d].is_zero()) continue;
    const LaurentPoly s = num.slice(var, -d);
    if (!s.is_zero()) res += s * series[d];
  }
  return res;
}

// Replaces z_var^{j s} by (scale z^mono)^s and drops terms whose z_var
// exponent is not a multiple of j.
LaurentPoly SectionSubstitute(const LaurentPoly& f, int var, int j, const Rational& scale, const Exponent& mono) {
  LaurentPoly out(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] % j != 0) continue;
    const int s = e[var] / j;
    Exponent ne = e + mono.scaled(s);
    ne[var] = 0;
    out.add_term(ne, c * Pow(scale, s));
  }
  return out;
}

// The poles of one inside factor: the j roots of z_var^j = scale * z^mono.
struct PoleSet {
  size_t factor;
  int j;
  Rational scale;
  Exponent mono;
};

PoleSet PolesOf(const Denoms& den, size_t index, int var) {
  const auto& f = den[index];
  const int m = f.mono[var];
  Exponent rest = f.mono;
  rest[var] = 0;
  if (m < 0) return {index, -m, f.gamma, rest};
  return {index, m, 1 / f.gamma, -rest};
}

// Two pole sets may share a root only if A1^{j2} = A2^{j1}.
bool MayCollide(const PoleSet& a, const PoleSet& b) {
  return Pow(a.scale, b.j) == Pow(b.scale, a.j) && a.mono.scaled(b.j) == b.mono.scaled(a.j);
}

// Sum of the residues of num / prod(den) / z_var at the simple poles of one
// inside factor. For j > 1 the sum over the roots zeta of zeta^j = A is taken
// exactly: every other factor 1/(1 - X) is rewritten as P / Norm with Norm a
// function of z_var^j only, and sum_zeta zeta^e = j A^{e/j} when j | e.
void AddPoleResidues(TermSum& out, const LaurentPoly& num, const Denoms& den, const PoleSet& pole, int var) {
  const int n = num.num_vars();
  const auto& f = den[pole.factor];
  if (pole.j == 1) {
    LaurentPoly rnum = num.substitute(var, pole.scale, pole.mono);
    if (rnum.is_zero()) return;
    if (f.mono[var] > 0) rnum *= Rational(-1);
    Denoms rden;
    rden.reserve(den.size() - 1);
    for (size_t k = 0; k < den.size(); ++k) {
      if (k == pole.factor) continue;
      const auto& g = den[k];
      const int a = g.mono[var];
      if (a == 0) {
        rden.push_back(g);
        continue;
      }
      Exponent m = g.mono + pole.mono.scaled(a);
      m[var] = 0;
      const Rational gamma = g.gamma * Pow(pole.scale, a);
      if (m.is_zero() && gamma == 1) {
        throw NonGenericParameters("pole at z" + std::to_string(var + 1) + " is not simple");
      }
      rden.push_back({gamma, m});
    }
    AddNormalized(out, std::move(rnum), std::move(rden));
    return;
  }

  const int j = pole.j;
  LaurentPoly h = num;
  if (f.mono[var] > 0) {
    // 1/(1 - g z^m) = -(g z^m)^{-1} / (1 - (g z^m)^{-1}).
    h *= LaurentPoly::Monomial(n, -f.mono, -1 / f.gamma);
  }
  Denoms rden;
  for (size_t k = 0; k < den.size(); ++k) {
    if (k == pole.factor) continue;
    const auto& g = den[k];
    const int a = g.mono[var];
    if (a == 0) {
      rden.push_back(g);
      continue;
    }
    const int gc = std::gcd(std::abs(a), j);
    const int order = j / gc;
    const LaurentPoly x = LaurentPoly::Monomial(n, g.mono, g.gamma);
    LaurentPoly p(n);
    for (int r = 0; r < order; ++r) p += Pow(x, r);
    if (gc > 1) {
      LaurentPoly base = LaurentPoly::Constant(n, 1);
      base.add_term(g.mono.scaled(order), -Pow(g.gamma, order));
      p *= Pow(base, gc - 1);
    }
    h *= p;
    Exponent m = g.mono.scaled(order) + pole.mono.scaled(a / gc);
    m[var] = 0;
    const Rational gamma = Pow(g.gamma, order) * Pow(pole.scale, a / gc);
    if (m.is_zero() && gamma == 1) {
      throw NonGenericParameters("pole at z" + std::to_string(var + 1) + " is not simple");
    }
    for (int c = 0; c < gc; ++c) rden.push_back({gamma, m});
  }
  LaurentPoly rnum = SectionSubstitute(h, var, j, pole.scale, pole.mono);
  AddNormalized(out, std::move(rnum), std::move(rden));
}

void EliminateTerm(TermSum& out, const LaurentPoly& num, const Denoms& den, int var) {
  Denoms pass;
  std::vector<PoleSet> poles;
  for (size_t k = 0; k < den.size(); ++k) {
    if (den[k].mono[var] == 0) {
      pass.push_back(den[k]);
    } else if (PoleInside(den[k], var)) {
      poles.push_back(PolesOf(den, k, var));
    }
  }
  for (size_t a = 0; a < poles.size(); ++a) {
    for (size_t b = a + 1; b < poles.size(); ++b) {
      if (MayCollide(poles[a], poles[b])) {
        throw NonGenericParameters("colliding poles in z" + std::to_string(var + 1) + ": " +
                                   den[poles[a].factor].to_string(num.num_vars()) + " and " +
                                   den[poles[b].factor].to_string(num.num_vars()));
      }
    }
  }
  for (const auto& pole : poles) AddPoleResidues(out, num, den, pole, var);

  LaurentPoly zero_res = ResidueAtZero(num, den, var);
  if (!zero_res.is_zero()) AddNormalized(out, std::move(zero_res), std::move(pass));
}

}  // namespace

Rational ConstantTerm(std::span<const FactoredIntegrand> integrands, std::span<const int> order) {
  if (integrands.empty()) return 0;
  const int n = integrands.front().num_vars();
  std::vector<int> vars(order.begin(), order.end());
  if (vars.empty()) {
    vars.resize(n);
    std::iota(vars.begin(), vars.end(), 0);
  }
  {
    std::vector<int> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(n);
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) throw InvalidParameters("elimination order must be a permutation of the variables");
  }

  TermSum terms;
  for (const auto& I : integrands) {
    if (I.num_vars() != n) throw DimensionMismatch("integrands differ in variable count");
    AddNormalized(terms, I.numerator, I.denominators);
  }
  for (int var : vars) {
    TermSum next;
    for (const auto& [den, num] : terms) EliminateTerm(next, num, den, var);
    terms = std::move(next);
  }
  Rational total = 0;
  for (const auto& [den, num] : terms) {
    if (!den.empty()) throw Error("internal: denominators left after elimination");
    total += num.constant_term();
  }
  return total;
}

Rational ConstantTerm(const FactoredIntegrand& integrand, std::span<const int> order) {
  return ConstantTerm(std::span<const FactoredIntegrand>(&integrand, 1), order);
}

std::complex<double> CtQuadrature(const FactoredIntegrand& integrand, int grid) {
  const int n = integrand.num_vars();
  if (grid < 1) throw InvalidParameters("quadrature grid must be positive");
  // Every node coordinate is a power of omega, so each monomial reduces to a
  // table lookup indexed by its phase modulo the grid size.
  std::vector<std::complex<double>> omega(grid);
  for (int k = 0; k < grid; ++k) omega[k] = std::polar(1.0, 2 * M_PI * k / grid);
  auto phase = [&](const Exponent& e, const std::vector<int>& idx) {
    long p = 0;
    for (int i = 0; i < n; ++i) p += static_cast<long>(e[i]) * idx[i];
    p %= grid;
    return p < 0 ? p + grid : p;
  };
  std::vector<std::pair<Exponent, double>> num;
  for (const auto& [e, c] : integrand.numerator.terms()) num.emplace_back(e, c.get_d());
  std::vector<std::pair<Exponent, double>> den;
  for (const auto& f : integrand.denominators) den.emplace_back(f.mono, f.gamma.get_d());

  std::vector<int> idx(n, 0);
  std::complex<double> sum = 0;
  while (true) {
    std::complex<double> value = 0;
    for (const auto& [e, c] : num) value += c * omega[phase(e, idx)];
    for (const auto& [e, g] : den) value /= 1.0 - g * omega[phase(e, idx)];
    sum += value;
    int i = n - 1;
    while (i >= 0 && ++idx[i] == grid) idx[i--] = 0;
    if (i < 0) break;
  }
  return sum / std::pow(static_cast<double>(grid), n);
}

Rational SymmetricCt(int n, const ParameterPoint& params) {
  return ConstantTerm(BuildDensity(DensityKind::kSymmetric, n, params));
}

Rational NonsymmetricCt(int n, const ParameterPoint& params) {
  return ConstantTerm(BuildDensity(DensityKind::kNonsymmetric, n, params));
}

namespace {

Rational AbcdClosedForm(int n, const Rational& t, const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) {
  Rational out = 1;
  for (int i = 0; i < n; ++i) {
    const Rational ti = Pow(t, i);
    out /= (1 - ti * a * c) * (1 - ti * b * c) * (1 - ti * c * d) * (1 - ti * a * d) * (1 - ti * b * d);
  }
  for (int j = n - 1; j <= 2 * n - 2; ++j) out *= 1 - Pow(t, j) * a * b * c * d;
  return out;
}

}  // namespace

Rational NonsymmetricCtClosedForm(int n, const ParameterPoint& p) {
  return AbcdClosedForm(n, p.t, p.a, p.b, p.c, p.d);
}

Rational SymmetricCtClosedForm(int n, const ParameterPoint& p) {
  const auto& [a, b, c, d] = p.tk;
  Rational out = 1;
  for (int i = 0; i < n; ++i) {
    const Rational ti = Pow(p.t, i);
    out /= (1 - ti * a * b) * (1 - ti * a * c) * (1 - ti * b * c) * (1 - ti * c * d) * (1 - ti * a * d) *
           (1 - ti * b * d);
  }
  for (int j = 0; j < n; ++j) out *= 1 - Pow(p.t, 2 * n - 2 - j) * a * b * c * d;
  for (int j = 1; j <= n; ++j) out *= (1 - p.t) / (1 - Pow(p.t, j));
  return out;
}

Rational NonsymmetricCtRecurrence(int n, const ParameterPoint& p) {
  if (n < 1) throw InvalidParameters("recurrence needs n >= 1");
  const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d, &t = p.t;
  if (c == d) throw NonGenericParameters("recurrence needs c != d");
  auto lower = [&](const Rational& c2, const Rational& d2) -> Rational {
    if (n == 1) return 1;
    return NonsymmetricCt(n - 1, ParameterPoint::Nonsymmetric(t, a, b, c2, d2));
  };
  return c * lower(t * c, d) / ((1 - a * c) * (1 - b * c) * (1 - d * c) * (c - d)) +
         d * lower(c, t * d) / ((1 - a * d) * (1 - b * d) * (1 - c * d) * (d - c));
}

FactoredIntegrand InnerProduct0Integrand(const LaurentPoly& f, const LaurentPoly& g_iota,
                                         const ParameterPoint& params) {
  if (f.num_vars() != g_iota.num_vars()) throw DimensionMismatch("inner product operands differ in n");
  return BuildDensity(DensityKind::kNonsymmetric, f.num_vars(), params).times(f * g_iota.bar());
}

Rational InnerProduct0(const LaurentPoly& f, const LaurentPoly& g_iota, const ParameterPoint& params) {
  return ConstantTerm(InnerProduct0Integrand(f, g_iota, params));
}

}  // namespace koorn
