#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>

namespace ptheta {

/// Working-precision configuration for every big-float evaluation.
///
/// `bits` is the accuracy the caller asks for; `guard` extra bits are carried
/// internally to absorb rounding in long sums.
struct PrecisionContext {
  long bits = 256;
  long guard = 32;

  long working() const { return bits + guard; }

  /// Throws std::invalid_argument when bits < 24.
  void validate() const;
};

/// Precision used when the caller did not pass one: THETA_ASYM_PREC if set and
/// valid, otherwise 256 bits.
long default_precision_bits();

/// RAII handle around an MPFR number. Every value carries its own precision;
/// binary operations produce the larger of the operand precisions.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_long(long v, mpfr_prec_t prec);
  static BigFloat from_double(double v, mpfr_prec_t prec);
  static BigFloat from_mpz(const mpz_class& v, mpfr_prec_t prec);
  static BigFloat from_rational(const mpq_class& v, mpfr_prec_t prec);
  /// Decimal or scientific notation ("0.125", "1e-3"); throws
  /// std::invalid_argument on malformed input.
  static BigFloat from_string(const std::string& s, mpfr_prec_t prec);
  static BigFloat pi(mpfr_prec_t prec);
  static BigFloat ln2(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  /// Copy rounded to a different precision.
  BigFloat rounded(mpfr_prec_t prec) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long_floor() const;
  /// log2 of |x| as a double; -inf for zero.
  double log2_abs() const;

  /// Scientific notation with `digits` significant decimal digits. With
  /// digits == 0 the count is derived from the precision.
  std::string to_string(int digits = 0) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator*=(long o);
  BigFloat& operator/=(long o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator+(const BigFloat& a, long b);
  friend BigFloat operator-(const BigFloat& a, long b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator/(const BigFloat& a, long b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
/// e^x - 1 without cancellation for small x.
BigFloat expm1(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long n);
BigFloat floor(const BigFloat& x);
/// x * 2^e, exact.
BigFloat ldexp(const BigFloat& x, long e);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// Complex number with BigFloat parts.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  static BigComplex from_real(BigFloat r);

  mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
  BigComplex conj() const { return {re, -im}; }
  BigFloat abs() const;

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
};

}  // namespace ptheta
