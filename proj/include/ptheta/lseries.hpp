#pragma once

#include "ptheta/bigfloat.hpp"
#include "ptheta/chars.hpp"

namespace ptheta {

/// zeta(s, a) = sum_{n>=0} (n + a)^{-s}, continued to real s != 1 by classical
/// Euler-Maclaurin summation (shift to n >= M, then Bernoulli corrections).
/// Absolute accuracy about 2^{-bits+10} relative to the largest summand.
/// Throws std::domain_error for a <= 0 or s = 1.
BigFloat hurwitz_zeta(const BigFloat& s, const BigFloat& a, const PrecisionContext& ctx);

/// Constant term of zeta(s, a) at s = 1, i.e. lim (zeta(s, a) - 1/(s - 1)) = -psi(a).
BigFloat hurwitz_zeta_regular_at_one(const BigFloat& a, const PrecisionContext& ctx);

/// L_{r,eps}(s, b; chi) = r sum_{m>=0} (-1)^{eps m} chi(m) (m + b/r)^{-s}.
struct LSeriesSpec {
  int r = 1;
  int eps = 2;
  Rational b;
  DirichletCharacter chi = DirichletCharacter::from_conrey(1, 1);
  BigFloat s;

  /// r >= 1, eps in {1, 2}, b > 0, chi primitive and nonprincipal, odd
  /// conductor when eps = 1. Throws std::domain_error / std::invalid_argument.
  void validate() const;
};

/// Numeric value through Hurwitz zeta: for eps = 2
///   r f^{-s} sum_{a<f} chi(a) zeta(s, (a + b/r)/f),
/// and for eps = 1 the same over a < 2f with weights (-1)^a chi(a). At s = 1 the
/// pole terms cancel because the weights sum to zero, so the regular parts are
/// combined instead.
BigComplex lseries_numeric(const LSeriesSpec& spec, const PrecisionContext& ctx);

/// Exact L_{r,eps}(-rn, b; chi) for 0 < b < r:
///   eps = 2: -r B_{rn+1,chibar}(b/r) / (rn + 1)
///   eps = 1: (r/2) E_{rn,chibar}(b/r)
/// Throws std::domain_error outside these hypotheses.
CycRat special_value(int r, int eps, int n, const Rational& b, const DirichletCharacter& chi);

/// Same value for any b >= 0. For eps = 2 the Bernoulli formula is used as a
/// polynomial in b; for eps = 1 the value is assembled from plain sums by
///   L_{r,1}(s, b) = 2^{1-s} chi(2) L_{r,2}(s, b/2) - L_{r,2}(s, b).
/// Outside 0 < b < r these are labelled "extended" by callers.
CycRat special_value_extended(int r, int eps, int n, const Rational& b, const DirichletCharacter& chi);

/// Peeling the first f l terms off the sum:
///   L(-rn, b + r f l) = L(-rn, b) - r sum_{m < f l} chi(m) (m + b/r)^{rn},
/// checked exactly with special_value_extended on both sides (eps = 2).
bool extended_shift_check(int r, int n, const Rational& b, long l, const DirichletCharacter& chi);

/// ((-1)^n / n!) special_value(r, eps, n, b, chi) equals gamma_n of the
/// asymptotic expansion for n = 0..N.
bool bridge_check(const DirichletCharacter& chi, const Rational& b, int r, int eps, int N);

/// E_{rn,chibar}(b/r) = (2/(rn+1)) (B_{rn+1,chibar}(b/r) - 2^{rn+1} chi(2) B_{rn+1,chibar}(b/(2r)))
/// in exact arithmetic. Requires a primitive nonprincipal chi of odd conductor.
bool corollary_bk_check(int n, int r, const Rational& b, const DirichletCharacter& chi);

/// The same relation with 1/(rn+1) in place of 2/(rn+1). Fails whenever the
/// Euler side is nonzero; kept so the factor can be demonstrated.
bool corollary_bk_check_unit_factor(int n, int r, const Rational& b, const DirichletCharacter& chi);

struct ParitySplitResult {
  BigComplex alternating;
  BigComplex assembled;
  BigFloat difference;
  BigFloat tolerance;
  bool pass = false;
};

/// Numeric check of L_{r,1}(s, b) = 2^{1-s} chi(2) L_{r,2}(s, b/2) - L_{r,2}(s, b)
/// within 2^{-bits+12} (1 + |L_{r,1}|). Requires odd conductor.
ParitySplitResult parity_splitting(const DirichletCharacter& chi, int r, const Rational& b, const BigFloat& s,
                                   const PrecisionContext& ctx);
bool parity_splitting_check(const DirichletCharacter& chi, int r, const Rational& b, const BigFloat& s,
                            const PrecisionContext& ctx);

}  // namespace ptheta
