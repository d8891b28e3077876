#pragma once

#include "ptheta/chars.hpp"
#include "ptheta/polynomial.hpp"

#include <vector>

namespace ptheta {

enum class SpecialKind { bernoulli, euler };

/// Classical Bernoulli number B_n (B_1 = -1/2). Memoized.
Rational bernoulli_number(int n);
/// E_n(0), from 2/(e^t + 1). Memoized.
Rational euler_number_at_zero(int n);

/// Rational coefficients of B_n(x), constant term first.
const std::vector<Rational>& bernoulli_coefficients(int n);
/// Rational coefficients of E_n(x), constant term first.
const std::vector<Rational>& euler_coefficients(int n);

CharPolynomial bernoulli_poly(int n);
CharPolynomial euler_poly(int n);

Rational bernoulli_value(int n, const Rational& x);
Rational euler_value(int n, const Rational& x);

/// Generalized Bernoulli number B_{n,chi} = f^{n-1} sum_a conj(chi(a)) B_n(a/f),
/// for the generating function sum_a conj(chi(a)) t e^{(a+x)t} / (e^{ft} - 1).
/// Throws std::domain_error unless chi is primitive.
CycRat gen_bernoulli_number(int n, const DirichletCharacter& chi);
/// Generalized Euler number E_{n,chi} = f^n sum_a (-1)^a conj(chi(a)) E_n(a/f).
/// Throws std::domain_error unless chi is primitive with odd conductor.
CycRat gen_euler_number(int n, const DirichletCharacter& chi);

/// B_{n,chi}(x) = sum_k C(n,k) B_{k,chi} x^{n-k}.
CharPolynomial gen_bernoulli_poly(int n, const DirichletCharacter& chi);
/// E_{n,chi}(x) = sum_k C(n,k) E_{k,chi} x^{n-k}.
CharPolynomial gen_euler_poly(int n, const DirichletCharacter& chi);

/// Values B_{n,chi} (or E_{n,chi}) for n = 0..n_max read off the defining
/// generating function at x = 0 by truncated power-series division. Shares no
/// code with the finite-sum route above.
std::vector<CycRat> gf_taylor_oracle(const DirichletCharacter& chi, SpecialKind kind, int n_max);

/// Periodic extension of the generalized Bernoulli / Euler functions.
///
/// Bernoulli kind: f^{n-1} sum_m conj(chi(m)) B_n({(m+x)/f}); period f, with
/// the convention that B_n is evaluated at the fractional part, so the value
/// at an integer y is B_n(0) (B_1 included).
/// Euler kind: f^n sum_m (-1)^m conj(chi(m)) Ebar_n((m+x)/f) where
/// Ebar_n(y) = (-1)^{floor y} E_n({y}); it changes sign under x -> x + f.
/// Both agree with the corresponding polynomial on [0, 1).
class PeriodicCharFunction {
 public:
  PeriodicCharFunction(SpecialKind kind, int n, DirichletCharacter chi);

  SpecialKind kind() const { return kind_; }
  int degree() const { return n_; }
  const DirichletCharacter& character() const { return chi_; }
  long period() const { return chi_.modulus(); }

  CycRat operator()(const Rational& x) const;
  BigComplex operator()(const BigFloat& x) const;

  /// Polynomial equal to the function on [k, k + 1).
  CharPolynomial piece(long k) const;

 private:
  SpecialKind kind_;
  int n_;
  DirichletCharacter chi_;
};

/// B_{n,chi}(x + l f) - B_{n,chi}(x) == n sum_{m=1}^{l f} conj(chi(m)) (m + x)^{n-1}.
bool shift_identity_check(int n, long l, const Rational& x, const DirichletCharacter& chi);

}  // namespace ptheta
