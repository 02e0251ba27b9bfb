#include "koorn/signed_perm.h"

#include <algorithm>
#include <numeric>

#include "koorn/error.h"

namespace koorn {

SignedPermutation SignedPermutation::Identity(int n) {
  std::vector<int> rho(n);
  std::iota(rho.begin(), rho.end(), 0);
  return SignedPermutation(std::move(rho), std::vector<int>(n, 1));
}

SignedPermutation::SignedPermutation(std::vector<int> rho, std::vector<int> eps)
    : rho_(std::move(rho)), eps_(std::move(eps)), position_(rho_.size(), -1) {
  if (rho_.size() != eps_.size()) throw InvalidParameters("rho and eps differ in length");
  const int n = size();
  for (int k = 0; k < n; ++k) {
    if (rho_[k] < 0 || rho_[k] >= n || position_[rho_[k]] != -1) {
      throw InvalidParameters("rho is not a bijection");
    }
    if (eps_[k] != 1 && eps_[k] != -1) throw InvalidParameters("eps entries must be +1 or -1");
    position_[rho_[k]] = k;
  }
}

bool SignedPermutation::is_unsigned() const {
  return std::all_of(eps_.begin(), eps_.end(), [](int e) { return e == 1; });
}

int SignedPermutation::sign() const {
  int s = 1;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rho_[i] > rho_[j]) s = -s;
    }
    s *= eps_[i];
  }
  return s;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (other.size() != size()) throw DimensionMismatch("composing elements of different B_n");
  const int n = size();
  std::vector<int> rho(n), eps(n);
  for (int k = 0; k < n; ++k) {
    rho[k] = rho_[other.rho_[k]];
    eps[k] = eps_[other.rho_[k]] * other.eps_[k];
  }
  return SignedPermutation(std::move(rho), std::move(eps));
}

SignedPermutation SignedPermutation::inverse() const {
  const int n = size();
  std::vector<int> rho(n), eps(n);
  for (int k = 0; k < n; ++k) {
    rho[rho_[k]] = k;
    eps[rho_[k]] = eps_[k];
  }
  return SignedPermutation(std::move(rho), std::move(eps));
}

std::vector<int> SignedPermutation::apply(const std::vector<int>& exponents) const {
  if (static_cast<int>(exponents.size()) != size()) throw DimensionMismatch("exponent length differs from n");
  std::vector<int> out(exponents.size());
  for (int k = 0; k < size(); ++k) out[rho_[k]] = eps_[k] * exponents[k];
  return out;
}

Exponent SignedPermutation::apply(const Exponent& exponents) const {
  Exponent out;
  for (int k = 0; k < size(); ++k) out[rho_[k]] = eps_[k] * exponents[k];
  return out;
}

std::string SignedPermutation::to_string() const {
  std::string s;
  for (int k = 0; k < size(); ++k) {
    if (k) s += " ";
    s += "z" + std::to_string(rho_[k] + 1);
    if (eps_[k] < 0) s += "^-1";
  }
  return s;
}

namespace {

void CheckRank(int n) {
  if (n < 1 || n > kMaxVars) throw InvalidParameters("B_n rank out of range: " + std::to_string(n));
}

}  // namespace

std::vector<SignedPermutation> EnumerateBn(int n) {
  CheckRank(n);
  std::vector<SignedPermutation> out;
  std::vector<int> rho(n);
  std::iota(rho.begin(), rho.end(), 0);
  const unsigned masks = 1u << n;
  do {
    for (unsigned mask = 0; mask < masks; ++mask) {
      std::vector<int> eps(n);
      for (int k = 0; k < n; ++k) eps[k] = (mask >> (n - 1 - k)) & 1u ? -1 : 1;
      out.emplace_back(rho, std::move(eps));
    }
  } while (std::next_permutation(rho.begin(), rho.end()));
  return out;
}

std::vector<SignedPermutation> EnumerateSn(int n) {
  CheckRank(n);
  std::vector<SignedPermutation> out;
  std::vector<int> rho(n);
  std::iota(rho.begin(), rho.end(), 0);
  do {
    out.emplace_back(rho, std::vector<int>(n, 1));
  } while (std::next_permutation(rho.begin(), rho.end()));
  return out;
}

LaurentPoly ApplySignedPerm(const SignedPermutation& w, const LaurentPoly& f) {
  if (w.size() != f.num_vars()) throw DimensionMismatch("signed permutation and polynomial differ in n");
  LaurentPoly out(f.num_vars());
  for (const auto& [e, c] : f.terms()) out.add_term(w.apply(e), c);
  return out;
}

int StatN(const SignedPermutation& w) {
  int count = 0;
  for (int i = 0; i < w.size(); ++i) {
    for (int j = i + 1; j < w.size(); ++j) {
      if (w.precedes(j, i)) ++count;
    }
  }
  return count;
}

StatCResult StatC(const Partition& lambda, const SignedPermutation& w) {
  const int n = w.size();
  if (lambda.size() != n) throw DimensionMismatch("partition length differs from n");
  const int m0 = lambda.multiplicity(0);
  const int m1 = lambda.multiplicity(1);
  StatCResult r;
  std::vector<bool> in_n(n, false);
  for (int i = n - m0 - m1; i < n; ++i) {
    if (w.sign_of_var(i) != -1) continue;
    in_n[i] = true;
    (i >= n - m0 ? r.n0 : r.n1).push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    if (!in_n[i]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (w.precedes(i, j)) ++r.c;
    }
  }
  return r;
}

namespace {

// rho maps each variable to a variable with the same part, signs ignored.
bool PermutesEqualParts(const Partition& lambda, const SignedPermutation& w) {
  for (int k = 0; k < w.size(); ++k) {
    if (lambda[w.rho()[k]] != lambda[k]) return false;
  }
  return true;
}

std::vector<SignedPermutation> FilterSpecial(const Partition& lambda, int n, int big_sign) {
  const Partition padded = lambda.padded(n);
  std::vector<SignedPermutation> out;
  for (auto& w : EnumerateBn(n)) {
    if (!PermutesEqualParts(padded, w)) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (padded[i] >= 2 && w.sign_of_var(i) != big_sign) ok = false;
    }
    if (ok) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::vector<SignedPermutation> SpecialSubsetP(const Partition& lambda, int n) {
  return FilterSpecial(lambda, n, 1);
}

std::vector<SignedPermutation> SpecialSubsetB(const Partition& lambda, int n) {
  return FilterSpecial(lambda, n, -1);
}

Rational InversionGeneratingSum(int m, const Rational& t) {
  if (m == 0) return 1;
  Rational sum = 0;
  for (const auto& w : EnumerateSn(m)) sum += Pow(t, StatN(w));
  return sum;
}

Rational QFactorial(int m, const Rational& t) {
  Rational out = 1;
  for (int j = 1; j <= m; ++j) {
    Rational bracket = 0;
    for (int i = 0; i < j; ++i) bracket += Pow(t, i);
    out *= bracket;
  }
  return out;
}

Rational OnesBlockSum(int m, int m0, const Rational& t, const Rational& e4) {
  if (m == 0) return 1;
  const Partition ones(std::vector<int>(m, 1));
  const Rational weight = -e4 * Pow(t, 2 * m0);
  Rational sum = 0;
  for (const auto& w : EnumerateBn(m)) {
    const StatCResult c = StatC(ones, w);
    sum += Pow(t, StatN(w) + 2 * c.c) * Pow(weight, static_cast<int>(c.n1.size()));
  }
  return sum;
}

Rational OnesBlockProduct(int m, int m0, const Rational& t, const Rational& e4) {
  Rational out = QFactorial(m, t);
  for (int j = 1; j <= m; ++j) out *= 1 - e4 * Pow(t, j - 1 + 2 * m0);
  return out;
}

Rational ZerosBlockSum(int m, const Rational& t, const Rational& ab) {
  if (m == 0) return 1;
  const Partition zeros(std::vector<int>(m, 0));
  Rational sum = 0;
  for (const auto& w : EnumerateBn(m)) {
    const StatCResult c = StatC(zeros, w);
    sum += Pow(t, StatN(w) + 2 * c.c) * Pow(-ab, static_cast<int>(c.n0.size()));
  }
  return sum;
}

Rational ZerosBlockProduct(int m, const Rational& t, const Rational& ab) {
  Rational out = QFactorial(m, t);
  for (int j = 1; j <= m; ++j) out *= 1 - ab * Pow(t, j - 1);
  return out;
}

Rational LeadingCoefficientSum(const Partition& lambda, int n, const Rational& t,
                               const Rational& ab, const Rational& e4) {
  const Partition padded = lambda.padded(n);
  Rational sum = 0;
  for (const auto& w : SpecialSubsetP(padded, n)) {
    const StatCResult c = StatC(padded, w);
    sum += Pow(t, StatN(w) + 2 * c.c) * Pow(-e4, static_cast<int>(c.n1.size())) *
           Pow(-ab, static_cast<int>(c.n0.size()));
  }
  return sum;
}

}  // namespace koorn
