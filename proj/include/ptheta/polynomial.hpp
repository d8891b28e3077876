#pragma once

#include "ptheta/bigfloat.hpp"
#include "ptheta/cyclo.hpp"

#include <string>
#include <vector>

namespace ptheta {

/// Polynomial in one indeterminate with cyclotomic coefficients; index i
/// holds the coefficient of x^i. Trailing zero coefficients are never kept.
class CharPolynomial {
 public:
  CharPolynomial() = default;
  explicit CharPolynomial(std::vector<CycRat> coeffs);
  static CharPolynomial constant(const CycRat& c);
  static CharPolynomial monomial(const CycRat& c, int power);
  /// Rational coefficients, constant term first.
  static CharPolynomial from_rationals(const std::vector<Rational>& coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  CycRat coeff(int i) const;
  const std::vector<CycRat>& coeffs() const { return coeffs_; }

  CycRat evaluate(const Rational& x) const;
  CycRat evaluate(const CycRat& x) const;
  BigComplex evaluate(const BigFloat& x) const;

  CharPolynomial derivative() const;
  /// Antiderivative with zero constant term.
  CharPolynomial antiderivative() const;
  /// p(c x).
  CharPolynomial scaled_argument(const Rational& c) const;
  /// p(x + c).
  CharPolynomial shifted(const Rational& c) const;
  /// Coefficientwise complex conjugate.
  CharPolynomial conj() const;

  CharPolynomial& operator+=(const CharPolynomial& o);
  CharPolynomial& operator-=(const CharPolynomial& o);
  CharPolynomial& operator*=(const CycRat& c);

  friend CharPolynomial operator+(CharPolynomial a, const CharPolynomial& b) { return a += b; }
  friend CharPolynomial operator-(CharPolynomial a, const CharPolynomial& b) { return a -= b; }
  friend CharPolynomial operator*(CharPolynomial a, const CycRat& c) { return a *= c; }
  friend CharPolynomial operator*(const CycRat& c, CharPolynomial a) { return a *= c; }
  friend CharPolynomial operator*(const CharPolynomial& a, const CharPolynomial& b);
  friend CharPolynomial operator-(const CharPolynomial& a);

  friend bool operator==(const CharPolynomial& a, const CharPolynomial& b);
  friend bool operator!=(const CharPolynomial& a, const CharPolynomial& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<CycRat> coeffs_;
};

}  // namespace ptheta
