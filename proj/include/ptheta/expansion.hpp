#pragma once

#include "ptheta/bigfloat.hpp"
#include "ptheta/chars.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ptheta {

enum class Route { bernoulli, euler, closed_form };

std::string route_name(Route r);
/// "bernoulli", "euler" or "closed-form"; throws std::invalid_argument otherwise.
Route parse_route(const std::string& s);

/// Truncated asymptotic series sum_{n<=N} gamma_n theta^n. The 1/n! is part of
/// gamma_n.
struct ExpansionSeries {
  DirichletCharacter chi = DirichletCharacter::from_conrey(1, 1);
  Rational b;
  int r = 1;
  int eps = 2;
  int N = 0;
  std::vector<CycRat> gammas;  // N + 1 entries
  Route provenance = Route::bernoulli;

  /// sum_{n <= order} gamma_n theta^n.
  BigComplex partial_sum(const BigFloat& theta, int order) const;
};

/// Coefficients for the plain character sum (eps = 2):
///   gamma_n = -r (-1)^n B_{rn+1,chibar}(b/r) / ((rn+1) n!).
/// Valid for every b >= 0. Throws std::domain_error for principal or
/// imprimitive characters, r < 1, b < 0 or N < 0.
ExpansionSeries g2_coefficients(const DirichletCharacter& chi, const Rational& b, int r, int N);

/// Coefficients for the alternating sum (eps = 1) by the Euler route:
///   gamma_n = (r/2) (-1)^n E_{rn,chibar}(b/r) / n!.
/// Requires odd conductor and b = 0 or 0 < b < r; std::domain_error otherwise.
ExpansionSeries g1_coefficients(const DirichletCharacter& chi, const Rational& b, int r, int N);

/// The alternating-sum coefficients rebuilt from the plain ones through
///   G1(theta, b) = 2 chi(2) G2(2^r theta, b/2) - G2(theta, b),
/// i.e. gamma_n = 2 chi(2) 2^{rn} gamma2_n(b/2) - gamma2_n(b). Same hypotheses
/// as g1_coefficients.
ExpansionSeries g1_via_g2(const DirichletCharacter& chi, const Rational& b, int r, int N);

/// Taylor coefficients at theta = 0 of the r = 1 closed form
///   sum_{a<L} w(a) e^{-(a+b) theta} / (1 - e^{-L theta}),
/// L = f (eps = 2, w = chi) or lcm(2, f) (eps = 1, w(a) = (-1)^a chi(a)),
/// computed by truncated power-series division.
std::vector<CycRat> closed_form_r1_taylor(const DirichletCharacter& chi, const Rational& b, int N, int eps = 2);

/// Coefficients from the character tail expansion: tail_expansion_coeffs applied to the
/// Taylor series of e^{-t^r} at a = b/r, read at t^{rn} and multiplied by r.
std::vector<CycRat> lemma_route_g2(const DirichletCharacter& chi, const Rational& b, int r, int N);

/// Dispatches on eps and route. Route::closed_form needs r = 1; Route::euler
/// needs eps = 1; for eps = 1, Route::bernoulli means g1_via_g2.
ExpansionSeries expansion_coefficients(const DirichletCharacter& chi, const Rational& b, int r, int eps, int N,
                                       Route route);

/// Checks g2_coefficients(b + r f) against the bracket obtained by peeling off
/// the first f terms of the series:
///   -r (-1)^n [B_{rn+1,chibar}(b/r)/(rn+1) + sum_{m=1}^{f} chi(m)(m + b/r)^{rn}] / n!.
bool shifted_coefficients_check(const DirichletCharacter& chi, const Rational& b, int r, int N);

enum class SlopeStatus { pass, fail, indeterminate };
std::string slope_status_name(SlopeStatus s);

struct VerificationRow {
  BigFloat theta;
  BigComplex value;
  BigFloat tail_bound;
  /// partial[n] = S_n(theta), n = 0..N.
  std::vector<BigComplex> partial;
  /// remainder[n] = |value - S_n(theta)|.
  std::vector<BigFloat> remainder;
};

struct SlopeFit {
  int n = 0;
  double slope = 0;
  double threshold = 0;
  SlopeStatus status = SlopeStatus::indeterminate;
};

struct VerificationReport {
  ExpansionSeries series;  // carries gamma_0..gamma_{N+1}
  std::vector<VerificationRow> rows;
  std::vector<SlopeFit> fits;  // n = 0..N
  bool pass = false;
};

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluates the sum (eps = 1: alternating) at each grid point and fits
/// log R_n against log theta by least squares. A fit passes when the slope is
/// at least n + 0.9; it is indeterminate when gamma_{n+1} = 0. The report
/// passes when no fit fails.
///
/// Throws std::invalid_argument when the grid is not strictly decreasing and
/// positive or has fewer than two points, and PrecisionError when a remainder
/// that is needed for a fit is within 2^16 of the evaluation error.
VerificationReport verify_expansion(const DirichletCharacter& chi, const Rational& b, int r, int eps, int N,
                                    const std::vector<BigFloat>& grid, const PrecisionContext& ctx);

/// {1e-2, 10^-2.5, 1e-3} at the given precision.
std::vector<BigFloat> default_theta_grid(mpfr_prec_t prec);

}  // namespace ptheta
