#pragma once

#include "ptheta/bigfloat.hpp"
#include "ptheta/chars.hpp"
#include "ptheta/polynomial.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace ptheta {

/// A real function on [0, inf) together with its derivatives.
///
/// `eval(k, x)` returns f^{(k)}(x) at the precision of x. `decay_bound(A, k)`
/// returns a finite bound for sup_{x >= 0} x^A |f^{(k)}(x)| or +inf when no
/// such bound exists (polynomials). When `exact` is set the function is the
/// polynomial with these rational coefficients and the exact routines apply.
struct SmoothFunctionBundle {
  std::function<BigFloat(int k, const BigFloat& x)> eval;
  std::function<double(double A, int k)> decay_bound;
  int max_order = std::numeric_limits<int>::max();
  std::optional<std::vector<Rational>> exact;

  /// sum_i c_i x^i.
  static SmoothFunctionBundle polynomial(std::vector<Rational> coeffs);
  /// e^{-c x}, c > 0.
  static SmoothFunctionBundle exponential(const Rational& c);
  /// e^{-x^r}, r >= 1.
  static SmoothFunctionBundle exp_power(int r);
};

struct EMResult {
  BigComplex boundary_sum;
  BigComplex remainder_integral;
  /// Estimated absolute error of remainder_integral (quadrature and, for an
  /// infinite range, the discarded tail).
  BigFloat remainder_error;
  BigComplex total;
  /// Gauss-Legendre points per unit interval in the final pass.
  int quadrature_order = 0;
};

struct ExactEMResult {
  CycRat boundary_sum;
  CycRat remainder_integral;
  CycRat total;
};

struct QuadratureOptions {
  /// Multiplies the starting Gauss-Legendre order (16).
  int order_scale = 1;
  int max_order = 1024;
};

/// Right-hand side of the character Euler-Maclaurin formula for a rational
/// polynomial f, in exact arithmetic:
///   chi(-1) sum_{n<=N} (-1)^{n+1}/(n+1)! [Bbar_{n+1,chibar} f^{(n)}]_alpha^beta
///   + chi(-1) (-1)^N/(N+1)! int_alpha^beta Bbar_{N+1,chibar}(x) f^{(N+1)}(x) dx.
/// The integral is evaluated exactly piece by piece, so any N works. At an
/// integer endpoint Bbar_{1,chibar} takes the average of its one-sided limits,
/// which is what makes the formula equal to the dashed sum.
/// Throws std::invalid_argument unless alpha < beta; std::domain_error unless
/// chi is primitive.
ExactEMResult char_em_sum_exact(const DirichletCharacter& chi, const std::vector<Rational>& poly,
                                const Rational& alpha, const Rational& beta, int N);

/// Same formula for a general bundle; the remainder integral uses Gauss-Legendre
/// quadrature on every unit interval with adaptive order.
EMResult char_em_sum(const DirichletCharacter& chi, const SmoothFunctionBundle& f, const Rational& alpha,
                     const Rational& beta, int N, const PrecisionContext& ctx, const QuadratureOptions& q = {});

/// The beta -> infinity limit: boundary terms at alpha only, remainder integral
/// up to a cutoff chosen from decay_bound so that the discarded pieces are below
/// 2^{-working precision}. Throws std::domain_error when f has no decay bound.
EMResult char_em_sum_to_infinity(const DirichletCharacter& chi, const SmoothFunctionBundle& f,
                                 const Rational& alpha, int N, const PrecisionContext& ctx,
                                 const QuadratureOptions& q = {});

/// sum' chi(m) f(m) over integers alpha <= m <= beta, endpoint terms halved.
CycRat dashed_sum_exact(const DirichletCharacter& chi, const std::vector<Rational>& poly, const Rational& alpha,
                        const Rational& beta);
BigComplex dashed_sum(const DirichletCharacter& chi, const SmoothFunctionBundle& f, const Rational& alpha,
                      const Rational& beta, mpfr_prec_t prec);

/// c_n = -b_n B_{n+1,chibar}(a)/(n+1), n = 0..N, the coefficients of
/// sum_m chi(m) f((m+a)t) ~ sum c_n t^n for f(t) ~ sum b_n t^n.
/// Throws std::domain_error for principal or imprimitive chi, or a < 0.
std::vector<CycRat> tail_expansion_coeffs(const DirichletCharacter& chi, const std::vector<Rational>& taylor,
                                          const Rational& a);

/// sum_{j<=n} (-1)^j C(n,j) B_{j+1,chibar} a^{n-j}/(j+1) == (-1)^n B_{n+1,chibar}(-a)/(n+1).
bool binomial_expansion_check(int n, const Rational& a, const DirichletCharacter& chi);

}  // namespace ptheta
