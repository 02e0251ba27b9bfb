#ifndef KOORN_SIGNED_PERM_H_
#define KOORN_SIGNED_PERM_H_

#include <string>
#include <vector>

#include "koorn/composition.h"
#include "koorn/laurent_poly.h"
#include "koorn/rational.h"

namespace koorn {

// Element of the hyperoctahedral group B_n. With 0-based indices, position k
// of the word holds variable rho[k] with exponent sign eps[k]:
//   w(z_1 ... z_n) = z_{rho(1)}^{eps(1)} ... z_{rho(n)}^{eps(n)},
// and w acts on functions by z_k -> z_{rho(k)}^{eps(k)}.
class SignedPermutation {
 public:
  static SignedPermutation Identity(int n);
  // Throws InvalidParameters if rho is not a bijection or eps has entries
  // other than +1/-1.
  SignedPermutation(std::vector<int> rho, std::vector<int> eps);

  int size() const { return static_cast<int>(rho_.size()); }
  const std::vector<int>& rho() const { return rho_; }
  const std::vector<int>& eps() const { return eps_; }

  // Position k with rho(k) == var.
  int position_of(int var) const { return position_[var]; }
  // The exponent sign carried by z_var in the word.
  int sign_of_var(int var) const { return eps_[position_[var]]; }
  // z_i appears to the left of z_j in the word.
  bool precedes(int i, int j) const { return position_[i] < position_[j]; }
  bool is_unsigned() const;

  // Determinant of the signed permutation matrix: sign(rho) * prod eps.
  int sign() const;

  // (*this o other): applying other first, then *this, to a function.
  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;

  std::vector<int> apply(const std::vector<int>& exponents) const;
  Exponent apply(const Exponent& exponents) const;

  std::string to_string() const;

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.rho_ == b.rho_ && a.eps_ == b.eps_;
  }

 private:
  std::vector<int> rho_;
  std::vector<int> eps_;
  std::vector<int> position_;
};

// All 2^n n! elements in lexicographic order of (permutation word, sign word)
// with + before -. Throws InvalidParameters unless 1 <= n <= 8.
std::vector<SignedPermutation> EnumerateBn(int n);
// The unsigned permutations S_n in lexicographic order.
std::vector<SignedPermutation> EnumerateSn(int n);

// Applies w to every monomial of f.
LaurentPoly ApplySignedPerm(const SignedPermutation& w, const LaurentPoly& f);

// n(w): pairs i < j with z_j to the left of z_i.
int StatN(const SignedPermutation& w);

struct StatCResult {
  int c = 0;
  std::vector<int> n0;  // zero-part variables carrying sign -1
  std::vector<int> n1;  // one-part variables carrying sign -1
};

// c_lambda(w) together with the sets N^0_{w,lambda} and N^1_{w,lambda}.
// lambda must have exactly w.size() entries.
StatCResult StatC(const Partition& lambda, const SignedPermutation& w);

// P_{lambda,n}: w permuting equal parts of lambda (signs ignored) with sign +1
// on every variable whose part is >= 2.
std::vector<SignedPermutation> SpecialSubsetP(const Partition& lambda, int n);
// B_{lambda,n}: same permutation condition, sign -1 on every variable whose
// part is >= 2.
std::vector<SignedPermutation> SpecialSubsetB(const Partition& lambda, int n);

// sum over S_m of t^{n(w)}.
Rational InversionGeneratingSum(int m, const Rational& t);
// prod_{j=1}^m (1 - t^j)/(1 - t).
Rational QFactorial(int m, const Rational& t);
// sum over B_m of t^{n(w)} t^{2c(w)} (-e4 t^{2 m0})^{|N^1|}, lambda = 1^m.
Rational OnesBlockSum(int m, int m0, const Rational& t, const Rational& e4);
// prod_{j=1}^m [(1 - t^j)/(1 - t)] (1 - e4 t^{j-1+2 m0}).
Rational OnesBlockProduct(int m, int m0, const Rational& t, const Rational& e4);
// sum over B_m of t^{n(w)} t^{2c(w)} (-ab)^{|N^0|}, lambda = 0^m.
Rational ZerosBlockSum(int m, const Rational& t, const Rational& ab);
// prod_{j=1}^m [(1 - t^j)/(1 - t)] (1 - ab t^{j-1}).
Rational ZerosBlockProduct(int m, const Rational& t, const Rational& ab);
// sum over P_{lambda,n} of t^{n(w)} t^{2c(w)} (-e4)^{|N^1|} (-ab)^{|N^0|}:
// the coefficient of z^{lambda+rho} in R_lambda * Delta_BC.
Rational LeadingCoefficientSum(const Partition& lambda, int n, const Rational& t,
                               const Rational& ab, const Rational& e4);

}  // namespace koorn

#endif  // KOORN_SIGNED_PERM_H_
