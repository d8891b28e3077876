#pragma once

#include "ptheta/bigfloat.hpp"
#include "ptheta/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ptheta {

struct CyclotomicTable;

/// Exact element of the cyclotomic field Q(z), z = e^{2 pi i / d}.
///
/// Stored as the unique representative of degree < phi(d) modulo the
/// cyclotomic polynomial Phi_d, so equal numbers have equal representations
/// and sums such as 1 + z + z^2 (d = 3) collapse to zero. Values of different
/// orders combine in the field of order lcm(d1, d2).
class CycRat {
 public:
  /// Zero, order 1.
  CycRat();
  /// Rational constant, order 1.
  CycRat(const Rational& q);  // NOLINT(google-explicit-constructor)
  CycRat(long v);             // NOLINT(google-explicit-constructor)

  /// z^k in order d (k taken mod d, negative allowed).
  static CycRat root_of_unity(int d, long k);
  /// Builds sum c * z^k from arbitrary exponents (reduced mod d, then mod Phi_d).
  static CycRat from_terms(int d, const std::vector<std::pair<long, Rational>>& terms);

  int order() const { return order_; }
  /// Nonzero coefficients of the canonical representative, ascending exponent.
  std::vector<std::pair<int, Rational>> terms() const;

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rational to_rational() const;

  /// Same number expressed in order `multiple_of_order` (must be a multiple of order()).
  CycRat lifted(int multiple_of_order) const;

  /// Complex conjugate: z^k -> z^{d-k}.
  CycRat conj() const;

  /// Complex value at `prec` bits.
  BigComplex embed(mpfr_prec_t prec) const;

  CycRat& operator+=(const CycRat& o);
  CycRat& operator-=(const CycRat& o);
  CycRat& operator*=(const CycRat& o);
  CycRat& operator*=(const Rational& q);

  friend CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
  friend CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }
  friend CycRat operator*(const CycRat& a, const CycRat& b);
  friend CycRat operator*(CycRat a, const Rational& q) { return a *= q; }
  friend CycRat operator*(const Rational& q, CycRat a) { return a *= q; }
  friend CycRat operator-(const CycRat& a);

  friend bool operator==(const CycRat& a, const CycRat& b);
  friend bool operator!=(const CycRat& a, const CycRat& b) { return !(a == b); }

  /// Human-readable form, e.g. "1/3 - 2*z^1 (z^4=1)".
  std::string to_string() const;

 private:
  CycRat(int order, std::vector<Rational> coeffs);
  void align_with(CycRat& other);

  int order_ = 1;
  const CyclotomicTable* table_ = nullptr;
  std::vector<Rational> coeffs_;  // length phi(order_)
};

long lcm_long(long a, long b);

/// Integer coefficients of Phi_d, constant term first.
std::vector<Integer> cyclotomic_polynomial(int d);

}  // namespace ptheta
