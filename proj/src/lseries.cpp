#include "ptheta/lseries.hpp"

#include "ptheta/expansion.hpp"
#include "ptheta/special_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace ptheta {

namespace {

// Euler-Maclaurin for sum_{n>=0} (n + a)^{-s}: the first M terms directly,
// then the integral, half the boundary term and the Bernoulli corrections
//   B_{2j}/(2j)! s(s+1)...(s+2j-2) X^{-s-2j+1},  X = M + a.
// With X >= (|s| + P)/pi consecutive corrections shrink by at least 4 until
// 2j exceeds P, so P/2 + O(1) of them reach 2^{-P}. At s = -m the Pochhammer
// factor hits zero and the sum is exact. With regular_at_one, s must be 1 and
// the pole term X^{1-s}/(s-1) is replaced by its constant part -log X.
BigFloat hurwitz_em(const BigFloat& s, const BigFloat& a, const PrecisionContext& ctx, bool regular_at_one) {
  ctx.validate();
  if (!(a.sign() > 0)) throw std::domain_error("Hurwitz zeta needs a > 0");
  const long P = ctx.working();
  const double sd = s.to_double();
  const double ad = a.to_double();
  const long M = std::max(1L, static_cast<long>(std::ceil((std::fabs(sd) + static_cast<double>(P)) / M_PI - ad)));
  const double neg = std::max(0.0, -sd);
  const auto wp = static_cast<mpfr_prec_t>(P + static_cast<long>(std::ceil((neg + 1) * std::log2(M + ad + 1))) + 16);

  const BigFloat sw = s.rounded(wp), aw = a.rounded(wp);
  const BigFloat minus_s = -sw;
  BigFloat sum(wp);
  for (long k = 0; k < M; ++k) sum += pow(BigFloat::from_long(k, wp) + aw, minus_s);

  const BigFloat X = BigFloat::from_long(M, wp) + aw;
  const BigFloat X_minus_s = pow(X, minus_s);
  if (regular_at_one)
    sum -= log(X);
  else
    sum += X_minus_s * X / (sw - 1);
  sum += X_minus_s / 2;

  const BigFloat inv_X2 = BigFloat::from_long(1, wp) / (X * X);
  BigFloat poch = sw;                 // s (s+1) ... (s+2j-2)
  BigFloat xpow = X_minus_s / X;      // X^{-s-2j+1}
  const BigFloat tol = ldexp(BigFloat::from_long(1, wp), -(P + 4)) * (abs(sum) + 1);
  for (int j = 1;; ++j) {
    if (poch.is_zero()) return sum.rounded(P);
    const BigFloat c = BigFloat::from_rational(bernoulli_number(2 * j) / Rational(factorial(2UL * j)), wp);
    const BigFloat term = c * poch * xpow;
    sum += term;
    if (abs(term) < tol) return sum.rounded(P);
    if (j > P) throw std::runtime_error("Hurwitz zeta corrections did not converge");
    poch *= sw + (2 * j - 1);
    poch *= sw + (2 * j);
    xpow *= inv_X2;
  }
}

void require_value_hypotheses(int r, int eps, int n, const DirichletCharacter& chi) {
  if (r < 1) throw std::domain_error("r must be at least 1");
  if (n < 0) throw std::domain_error("n must be nonnegative");
  if (eps != 1 && eps != 2) throw std::invalid_argument("eps must be 1 or 2");
  if (chi.is_principal()) throw std::domain_error("special values need a nonprincipal character");
  if (!chi.is_primitive()) throw std::domain_error("character " + chi.label() + " is not primitive");
  if (eps == 1 && chi.conductor() % 2 == 0)
    throw std::domain_error("eps = 1 needs an odd conductor; " + chi.label() + " has an even one");
}

CycRat bernoulli_side(int r, int n, const Rational& b, const DirichletCharacter& chi) {
  const int k = r * n + 1;
  const CycRat B = gen_bernoulli_poly(k, chi.conjugate()).evaluate(Rational(b / r));
  return B * Rational(Rational(-r) / k);
}

bool bernoulli_euler_with_factor(int n, int r, const Rational& b, const DirichletCharacter& chi, long numerator) {
  require_value_hypotheses(r, 1, n, chi);
  if (!(b > 0 && b < r)) throw std::domain_error("the Bernoulli-Euler relation is checked for 0 < b < r");
  const DirichletCharacter chibar = chi.conjugate();
  const int m = r * n;
  const CycRat chi2 = chi.value(2);
  if (chi2.is_zero()) throw std::logic_error("chi(2) vanished for an odd conductor");
  const CycRat lhs = gen_euler_poly(m, chibar).evaluate(Rational(b / r));
  const CharPolynomial B = gen_bernoulli_poly(m + 1, chibar);
  const CycRat bracket =
      B.evaluate(Rational(b / r)) - chi2 * B.evaluate(Rational(b / (2 * r))) * pow(Rational(2), static_cast<unsigned long>(m + 1));
  return lhs == bracket * ratio(numerator, m + 1);
}

}  // namespace

BigFloat hurwitz_zeta(const BigFloat& s, const BigFloat& a, const PrecisionContext& ctx) {
  if (s == BigFloat::from_long(1, s.prec())) throw std::domain_error("Hurwitz zeta has a pole at s = 1");
  return hurwitz_em(s, a, ctx, false);
}

BigFloat hurwitz_zeta_regular_at_one(const BigFloat& a, const PrecisionContext& ctx) {
  return hurwitz_em(BigFloat::from_long(1, ctx.working()), a, ctx, true);
}

void LSeriesSpec::validate() const {
  if (r < 1) throw std::domain_error("r must be at least 1");
  if (eps != 1 && eps != 2) throw std::invalid_argument("eps must be 1 or 2");
  if (!(b > 0)) throw std::domain_error("b must be positive");
  if (chi.is_principal()) throw std::domain_error("L-series needs a nonprincipal character");
  if (!chi.is_primitive()) throw std::domain_error("character " + chi.label() + " is not primitive");
  if (eps == 1 && chi.conductor() % 2 == 0)
    throw std::domain_error("eps = 1 needs an odd conductor; " + chi.label() + " has an even one");
  if (!s.is_finite()) throw std::invalid_argument("s must be finite");
}

BigComplex lseries_numeric(const LSeriesSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  ctx.validate();
  const mpfr_prec_t wp = ctx.working() + 16;
  const PrecisionContext inner{ctx.bits + 16, ctx.guard};
  const long f = spec.chi.modulus();
  const long L = spec.eps == 1 ? 2 * f : f;
  const BigFloat s = spec.s.rounded(wp);
  const bool at_one = s == BigFloat::from_long(1, wp);
  const BigFloat c = BigFloat::from_rational(spec.b / spec.r, wp);

  BigComplex acc(wp);
  for (long a = 0; a < L; ++a) {
    CycRat w = spec.chi.value(a);
    if (w.is_zero()) continue;
    if (spec.eps == 1 && a % 2) w = -w;
    const BigFloat x = (BigFloat::from_long(a, wp) + c) / L;
    const BigFloat z = at_one ? hurwitz_zeta_regular_at_one(x, inner) : hurwitz_zeta(s, x, inner);
    acc += w.embed(wp) * z.rounded(wp);
  }
  acc *= pow(BigFloat::from_long(L, wp), -s) * BigFloat::from_long(spec.r, wp);
  return BigComplex(acc.re.rounded(ctx.working()), acc.im.rounded(ctx.working()));
}

CycRat special_value(int r, int eps, int n, const Rational& b, const DirichletCharacter& chi) {
  require_value_hypotheses(r, eps, n, chi);
  if (!(b > 0 && b < r))
    throw std::domain_error("special values are given for 0 < b < r (got b = " + format_rational(b) + ")");
  if (eps == 2) return bernoulli_side(r, n, b, chi);
  return gen_euler_poly(r * n, chi.conjugate()).evaluate(Rational(b / r)) * ratio(r, 2);
}

CycRat special_value_extended(int r, int eps, int n, const Rational& b, const DirichletCharacter& chi) {
  require_value_hypotheses(r, eps, n, chi);
  if (b < 0) throw std::domain_error("b must be nonnegative");
  if (eps == 2) return bernoulli_side(r, n, b, chi);
  const Rational scale = pow(Rational(2), static_cast<unsigned long>(r * n + 1));
  return chi.value(2) * bernoulli_side(r, n, Rational(b / 2), chi) * scale - bernoulli_side(r, n, b, chi);
}

bool extended_shift_check(int r, int n, const Rational& b, long l, const DirichletCharacter& chi) {
  if (l < 1) throw std::domain_error("shift count must be positive");
  const long f = chi.modulus();
  const CycRat lhs = special_value_extended(r, 2, n, Rational(b + Rational(r * f * l)), chi);
  CycRat rhs = special_value_extended(r, 2, n, b, chi);
  const Rational x = b / r;
  for (long m = 0; m < f * l; ++m)
    rhs -= chi.value(m) * Rational(Rational(r) * pow(Rational(Rational(m) + x), static_cast<unsigned long>(r * n)));
  return lhs == rhs;
}

bool bridge_check(const DirichletCharacter& chi, const Rational& b, int r, int eps, int N) {
  const auto series = expansion_coefficients(chi, b, r, eps, N, eps == 2 ? Route::bernoulli : Route::euler);
  for (int n = 0; n <= N; ++n) {
    Rational k = Rational(Integer(1), factorial(static_cast<unsigned long>(n)));
    if (n % 2) k = -k;
    if (special_value(r, eps, n, b, chi) * k != series.gammas[static_cast<size_t>(n)]) return false;
  }
  return true;
}

bool corollary_bk_check(int n, int r, const Rational& b, const DirichletCharacter& chi) {
  return bernoulli_euler_with_factor(n, r, b, chi, 2);
}

bool corollary_bk_check_unit_factor(int n, int r, const Rational& b, const DirichletCharacter& chi) {
  return bernoulli_euler_with_factor(n, r, b, chi, 1);
}

ParitySplitResult parity_splitting(const DirichletCharacter& chi, int r, const Rational& b, const BigFloat& s,
                                   const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  LSeriesSpec spec{r, 1, b, chi, s};
  ParitySplitResult res;
  res.alternating = lseries_numeric(spec, ctx);
  spec.eps = 2;
  const BigComplex full = lseries_numeric(spec, ctx);
  spec.b = b / 2;
  BigComplex half = lseries_numeric(spec, ctx);
  half *= chi.value(2).embed(wp);
  half *= pow(BigFloat::from_long(2, wp), BigFloat::from_long(1, wp) - s.rounded(wp));
  res.assembled = half - full;
  res.difference = (res.alternating - res.assembled).abs();
  res.tolerance = ldexp(BigFloat::from_long(1, wp), -ctx.bits + 12) * (res.alternating.abs() + 1);
  res.pass = res.difference <= res.tolerance;
  return res;
}

bool parity_splitting_check(const DirichletCharacter& chi, int r, const Rational& b, const BigFloat& s,
                            const PrecisionContext& ctx) {
  return parity_splitting(chi, r, b, s, ctx).pass;
}

}  // namespace ptheta
