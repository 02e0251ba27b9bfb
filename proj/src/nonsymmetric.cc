#include "koorn/nonsymmetric.h"

#include <deque>
#include <map>

#include "koorn/ct_engine.h"
#include "koorn/error.h"

namespace koorn {

LaurentPoly EPartition(const Partition& lambda, int n, const ParameterPoint& params) {
  const Partition padded = lambda.padded(n);
  LaurentPoly e = LaurentPoly::Constant(n, 1);
  for (int i = 0; i < n; ++i) {
    const int k = padded[i];
    if (k == 0) continue;
    LaurentPoly f(n);
    f.add_term(Exponent::Unit(i, k), 1);
    f.add_term(Exponent::Unit(i, k - 1), -(params.c + params.d));
    f.add_term(Exponent::Unit(i, k - 2), params.c * params.d);
    e *= f;
  }
  return e;
}

namespace {

LaurentPoly SwapVars(const LaurentPoly& f, int i) {
  LaurentPoly out(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    Exponent m = e;
    std::swap(m[i], m[i + 1]);
    out.add_term(m, c);
  }
  return out;
}

LaurentPoly InvertVar(const LaurentPoly& f, int i) {
  LaurentPoly out(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    Exponent m = e;
    m[i] = -m[i];
    out.add_term(m, c);
  }
  return out;
}

}  // namespace

LaurentPoly HeckeT(int i, const LaurentPoly& f, const ParameterPoint& params) {
  const int n = f.num_vars();
  if (i < 1 || i > n) throw InvalidParameters("Hecke index out of range: " + std::to_string(i));
  if (i < n) {
    const int k = i - 1;
    const LaurentPoly diff = SwapVars(f, k) - f;
    const LaurentPoly den = LaurentPoly::Variable(n, k + 1) - LaurentPoly::Variable(n, k);
    const LaurentPoly num = LaurentPoly::Variable(n, k + 1) - LaurentPoly::Variable(n, k, 1, params.t);
    return f * params.t + num * ExactDivide(diff, den);
  }
  const int k = n - 1;
  const LaurentPoly diff = InvertVar(f, k) - f;
  LaurentPoly den = LaurentPoly::Constant(n, 1);
  den.add_term(Exponent::Unit(k, 2), -1);
  LaurentPoly fa = LaurentPoly::Constant(n, 1), fb = LaurentPoly::Constant(n, 1);
  fa.add_term(Exponent::Unit(k), -params.a);
  fb.add_term(Exponent::Unit(k), -params.b);
  return f * (-params.a * params.b) + fa * fb * ExactDivide(diff, den);
}

CompositionStats Stats(const Composition& lambda, int i) {
  const int n = lambda.size();
  if (i < 1 || i > n) throw InvalidParameters("statistic index out of range");
  CompositionStats s;
  int before = 0, after = 0;
  for (int l = 1; l < i; ++l) {
    if (lambda[l - 1] == -1 || lambda[l - 1] == 0) ++before;
  }
  for (int l = i + 2; l <= n; ++l) {
    if (lambda[l - 1] == 0) ++after;
  }
  s.n_lambda = -before - 2 * after - 1;
  s.r_lambda = lambda.multiplicity(-1) + lambda.multiplicity(0) - 1;
  return s;
}

std::pair<Rational, Rational> PQCoefficients(const Composition& lambda, int i, const ParameterPoint& params) {
  const int n = lambda.size();
  const CompositionStats st = Stats(lambda, i);
  const Rational &t = params.t, &a = params.a, &b = params.b, &c = params.c, &d = params.d;
  const Rational ab = a * b;
  const Rational abcd = ab * c * d;
  if (i == n) {
    const int x = lambda[n - 1];
    if (x < -1) return {-ab - 1, -ab};
    if (x == -1) return {-ab - 1 + abcd * Pow(t, st.r_lambda), -ab};
    if (x > 1) return {Rational(0), Rational(1)};
    if (x == 1) {
      const Rational tk = Pow(t, st.r_lambda + 1);
      return {-abcd * tk, 1 + c * d * tk * (-ab - 1 + abcd * tk)};
    }
    return {-ab, Rational(0)};
  }
  const int x = lambda[i - 1], y = lambda[i];
  if (x == y) return {t, Rational(0)};
  const Rational tn = Pow(t, st.n_lambda);
  if (x == -1 && y == 0) {
    if (abcd == tn) throw NonGenericParameters("abcd - t^{n_lambda} vanishes");
    return {(1 - t) * tn / (abcd - tn), t};
  }
  if (x == 0 && y == -1) {
    if (abcd == tn) throw NonGenericParameters("abcd - t^{n_lambda} vanishes");
    const Rational gap = abcd - tn;
    return {(t - 1) * abcd / gap, 1 - (1 - t) * (1 - t) * abcd * Pow(t, st.n_lambda - 1) / (gap * gap)};
  }
  if (x < y) return {t - 1, t};
  return {Rational(0), Rational(1)};
}

namespace {

bool IsMove(const Composition& lambda, int i) {
  const int n = lambda.size();
  if (i < n) return lambda[i - 1] != lambda[i];
  return lambda[n - 1] != 0;
}

std::vector<int> WalkWord(const Composition& mu, bool smallest) {
  const int n = mu.size();
  const Composition start = mu.dominant();
  std::map<Composition, int> dist{{start, 0}};
  std::deque<Composition> queue{start};
  while (!queue.empty() && !dist.count(mu)) {
    const Composition cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      if (!IsMove(cur, i)) continue;
      Composition next = cur.reflect(i);
      if (dist.emplace(next, dist[cur] + 1).second) queue.push_back(std::move(next));
    }
  }
  if (!dist.count(mu)) throw Error("word construction failed for " + mu.to_string());
  std::vector<int> back;
  Composition cur = mu;
  while (dist[cur] > 0) {
    const int here = dist[cur];
    int chosen = 0;
    for (int k = 1; k <= n; ++k) {
      const int i = smallest ? k : n + 1 - k;
      if (!IsMove(cur, i)) continue;
      auto it = dist.find(cur.reflect(i));
      if (it != dist.end() && it->second == here - 1) {
        chosen = i;
        break;
      }
    }
    if (chosen == 0) throw Error("word construction failed for " + mu.to_string());
    back.push_back(chosen);
    cur = cur.reflect(chosen);
  }
  return {back.rbegin(), back.rend()};
}

}  // namespace

std::vector<int> CanonicalWord(const Composition& mu) { return WalkWord(mu, true); }
std::vector<int> AlternateWord(const Composition& mu) { return WalkWord(mu, false); }

bool IsValidWord(const Composition& mu, std::span<const int> word) {
  Composition cur = mu.dominant();
  for (int i : word) {
    if (i < 1 || i > mu.size() || !IsMove(cur, i)) return false;
    cur = cur.reflect(i);
  }
  return cur == mu;
}

LaurentPoly EComposition(const Composition& mu, const ParameterPoint& params, std::span<const int> word) {
  const int n = mu.size();
  const Composition start = mu.dominant();
  std::vector<int> canonical;
  if (word.empty() && mu != start) {
    canonical = CanonicalWord(mu);
    word = canonical;
  }
  if (!IsValidWord(mu, word)) throw InvalidParameters("word does not carry " + start.to_string() + " to " + mu.to_string());
  LaurentPoly e = EPartition(Partition(start.parts()), n, params);
  Composition cur = start;
  for (int i : word) {
    const auto [p, q] = PQCoefficients(cur, i, params);
    if (q == 0) {
      throw NonGenericParameters("q_" + std::to_string(i) + cur.to_string() + " vanishes at " + params.to_string());
    }
    e = (HeckeT(i, e, params) - e * p) * (Rational(1) / q);
    cur = cur.reflect(i);
  }
  return e;
}

Rational InnerProductE(const Composition& lambda, const Composition& mu, const ParameterPoint& params) {
  return InnerProduct0(EComposition(lambda, params), EComposition(mu, params.inverted()), params);
}

Rational InnerProductEMonomial(const Composition& lambda, const Composition& mu, const ParameterPoint& params) {
  const int n = lambda.size();
  return InnerProduct0(EComposition(lambda, params), LaurentPoly::Monomial(n, Exponent::FromVector(mu.parts())),
                       params);
}

Rational NonsymmetricNormClosedForm(const Partition& lambda, int n, const ParameterPoint& params) {
  const int m0 = lambda.padded(n).multiplicity(0);
  return m0 == 0 ? Rational(1) : NonsymmetricCtClosedForm(m0, params);
}

std::vector<RelationCheck> VerifyHeckeRelations(const LaurentPoly& f, const ParameterPoint& params) {
  const int n = f.num_vars();
  auto T = [&](int i, const LaurentPoly& g) { return HeckeT(i, g, params); };
  auto word = [&](std::initializer_list<int> is, LaurentPoly g) {
    // Rightmost operator acts first.
    for (auto it = std::rbegin(is); it != std::rend(is); ++it) g = T(*it, g);
    return g;
  };
  std::vector<RelationCheck> out;
  for (int i = 1; i < n; ++i) {
    const LaurentPoly g = T(i, f) - f * params.t;
    out.push_back({"(T" + std::to_string(i) + "+1)(T" + std::to_string(i) + "-t)", (T(i, g) + g).is_zero()});
  }
  {
    const LaurentPoly g = T(n, f) + f * (params.a * params.b);
    out.push_back({"(T" + std::to_string(n) + "+1)(T" + std::to_string(n) + "+ab)", (T(n, g) + g).is_zero()});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      out.push_back({"T" + std::to_string(i) + "T" + std::to_string(j) + "=T" + std::to_string(j) + "T" +
                         std::to_string(i),
                     word({i, j}, f) == word({j, i}, f)});
    }
  }
  for (int i = 1; i + 1 < n; ++i) {
    const int j = i + 1;
    out.push_back({"braid T" + std::to_string(i) + "T" + std::to_string(j), word({i, j, i}, f) == word({j, i, j}, f)});
  }
  if (n >= 2) {
    const int i = n - 1;
    out.push_back({"length-4 T" + std::to_string(i) + "T" + std::to_string(n),
                   word({i, n, i, n}, f) == word({n, i, n, i}, f)});
  }
  return out;
}

}  // namespace koorn
