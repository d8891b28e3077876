#include "ptheta/expansion.hpp"

#include "ptheta/euler_maclaurin.hpp"
#include "ptheta/special_poly.hpp"
#include "ptheta/theta_eval.hpp"

#include <cmath>

namespace ptheta {

namespace {

void require_expansion_character(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw std::domain_error("expansions need a nonprincipal character");
  if (!chi.is_primitive()) throw std::domain_error("character " + chi.label() + " is not primitive");
}

void require_common(int r, int N) {
  if (r < 1) throw std::domain_error("r must be at least 1");
  if (N < 0) throw std::domain_error("N must be nonnegative");
}

void require_g1_hypotheses(const DirichletCharacter& chi, const Rational& b, int r) {
  require_expansion_character(chi);
  if (chi.conductor() % 2 == 0)
    throw std::domain_error("the alternating expansion needs an odd conductor; " + chi.label() + " has conductor " +
                            std::to_string(chi.conductor()));
  if (b < 0 || (b != 0 && b >= r))
    throw std::domain_error("the alternating expansion needs b = 0 or 0 < b < r (got b = " + format_rational(b) +
                            ", r = " + std::to_string(r) + ")");
}

Rational inv_factorial(unsigned long n) { return Rational(Integer(1), factorial(n)); }

}  // namespace

std::string route_name(Route r) {
  switch (r) {
    case Route::bernoulli:
      return "bernoulli";
    case Route::euler:
      return "euler";
    case Route::closed_form:
      return "closed-form";
  }
  return "?";
}

Route parse_route(const std::string& s) {
  if (s == "bernoulli") return Route::bernoulli;
  if (s == "euler") return Route::euler;
  if (s == "closed-form") return Route::closed_form;
  throw std::invalid_argument("unknown route '" + s + "' (expected bernoulli, euler or closed-form)");
}

BigComplex ExpansionSeries::partial_sum(const BigFloat& theta, int order) const {
  const mpfr_prec_t prec = theta.prec();
  BigComplex acc(prec);
  for (int n = std::min(order, static_cast<int>(gammas.size()) - 1); n >= 0; --n) {
    acc *= theta;
    acc += gammas[static_cast<size_t>(n)].embed(prec);
  }
  return acc;
}

ExpansionSeries g2_coefficients(const DirichletCharacter& chi, const Rational& b, int r, int N) {
  require_expansion_character(chi);
  require_common(r, N);
  if (b < 0) throw std::domain_error("b must be nonnegative");
  const DirichletCharacter chibar = chi.conjugate();
  const Rational x = b / r;
  ExpansionSeries s{chi, b, r, 2, N, {}, Route::bernoulli};
  for (int n = 0; n <= N; ++n) {
    const int k = r * n + 1;
    const CycRat B = b == 0 ? gen_bernoulli_number(k, chibar) : gen_bernoulli_poly(k, chibar).evaluate(x);
    Rational c = Rational(-r) * inv_factorial(static_cast<unsigned long>(n)) / k;
    if (n % 2) c = -c;
    s.gammas.push_back(B * c);
  }
  return s;
}

ExpansionSeries g1_coefficients(const DirichletCharacter& chi, const Rational& b, int r, int N) {
  require_g1_hypotheses(chi, b, r);
  require_common(r, N);
  const DirichletCharacter chibar = chi.conjugate();
  const Rational x = b / r;
  ExpansionSeries s{chi, b, r, 1, N, {}, Route::euler};
  for (int n = 0; n <= N; ++n) {
    const CycRat E = b == 0 ? gen_euler_number(r * n, chibar) : gen_euler_poly(r * n, chibar).evaluate(x);
    Rational c = ratio(r, 2) * inv_factorial(static_cast<unsigned long>(n));
    if (n % 2) c = -c;
    s.gammas.push_back(E * c);
  }
  return s;
}

ExpansionSeries g1_via_g2(const DirichletCharacter& chi, const Rational& b, int r, int N) {
  require_g1_hypotheses(chi, b, r);
  require_common(r, N);
  const auto half = g2_coefficients(chi, b / 2, r, N);
  const auto full = g2_coefficients(chi, b, r, N);
  const CycRat two_chi2 = chi.value(2) * Rational(2);
  ExpansionSeries s{chi, b, r, 1, N, {}, Route::bernoulli};
  for (int n = 0; n <= N; ++n) {
    const Rational scale = pow(Rational(2), static_cast<unsigned long>(r * n));
    s.gammas.push_back(two_chi2 * half.gammas[static_cast<size_t>(n)] * scale - full.gammas[static_cast<size_t>(n)]);
  }
  return s;
}

std::vector<CycRat> closed_form_r1_taylor(const DirichletCharacter& chi, const Rational& b, int N, int eps) {
  require_expansion_character(chi);
  if (N < 0) throw std::domain_error("N must be nonnegative");
  if (b < 0) throw std::domain_error("b must be nonnegative");
  if (eps != 1 && eps != 2) throw std::invalid_argument("eps must be 1 or 2");
  const long f = chi.modulus();
  const long L = eps == 2 ? f : lcm_long(2, f);
  const auto len = static_cast<size_t>(N) + 1;

  // numerator sum_a w(a) e^{-(a+b) theta}: coefficient of theta^k
  std::vector<CycRat> num(len + 1);
  for (long a = 0; a < L; ++a) {
    CycRat w = chi.value(a);
    if (w.is_zero()) continue;
    if (eps == 1 && a % 2) w = -w;
    const Rational x = -(Rational(a) + b);
    Rational p = 1;
    for (size_t k = 0; k <= len; ++k) {
      num[k] += w * Rational(p * inv_factorial(k));
      p *= x;
    }
  }
  if (!num[0].is_zero()) throw std::logic_error("character sum over a period is not zero");

  // (1 - e^{-L theta}) / theta
  std::vector<Rational> den(len);
  for (size_t k = 0; k < len; ++k) {
    Rational d = pow(Rational(L), k + 1) * inv_factorial(k + 1);
    den[k] = k % 2 ? Rational(-d) : d;
  }

  std::vector<CycRat> out(len);
  const Rational inv_d0 = 1 / den[0];
  for (size_t k = 0; k < len; ++k) {
    CycRat acc = num[k + 1];
    for (size_t i = 1; i <= k; ++i) acc -= out[k - i] * den[i];
    out[k] = acc * inv_d0;
  }
  return out;
}

std::vector<CycRat> lemma_route_g2(const DirichletCharacter& chi, const Rational& b, int r, int N) {
  require_common(r, N);
  std::vector<Rational> taylor(static_cast<size_t>(r * N + 1), Rational(0));
  for (int n = 0; n <= N; ++n) {
    Rational c = inv_factorial(static_cast<unsigned long>(n));
    taylor[static_cast<size_t>(r * n)] = n % 2 ? Rational(-c) : c;
  }
  const auto c = tail_expansion_coeffs(chi, taylor, b / r);
  std::vector<CycRat> out;
  for (int n = 0; n <= N; ++n) out.push_back(c[static_cast<size_t>(r * n)] * Rational(r));
  return out;
}

ExpansionSeries expansion_coefficients(const DirichletCharacter& chi, const Rational& b, int r, int eps, int N,
                                       Route route) {
  if (eps != 1 && eps != 2) throw std::invalid_argument("eps must be 1 or 2");
  switch (route) {
    case Route::closed_form: {
      if (r != 1) throw std::invalid_argument("the closed-form route needs r = 1");
      if (eps == 1) require_g1_hypotheses(chi, b, r);
      ExpansionSeries s{chi, b, 1, eps, N, closed_form_r1_taylor(chi, b, N, eps), Route::closed_form};
      return s;
    }
    case Route::euler:
      if (eps != 1) throw std::invalid_argument("the Euler route applies to eps = 1 only");
      return g1_coefficients(chi, b, r, N);
    case Route::bernoulli:
      return eps == 2 ? g2_coefficients(chi, b, r, N) : g1_via_g2(chi, b, r, N);
  }
  throw std::invalid_argument("unknown route");
}

bool shifted_coefficients_check(const DirichletCharacter& chi, const Rational& b, int r, int N) {
  require_expansion_character(chi);
  if (!(b > 0)) throw std::domain_error("b must be positive");
  const long f = chi.modulus();
  const auto shifted = g2_coefficients(chi, b + Rational(r * f), r, N);
  const DirichletCharacter chibar = chi.conjugate();
  const Rational x = b / r;
  for (int n = 0; n <= N; ++n) {
    const int k = r * n + 1;
    CycRat bracket = gen_bernoulli_poly(k, chibar).evaluate(x) * Rational(1, k);
    for (long m = 1; m <= f; ++m) bracket += chi.value(m) * pow(Rational(Rational(m) + x), static_cast<unsigned long>(r * n));
    Rational c = Rational(-r) * inv_factorial(static_cast<unsigned long>(n));
    if (n % 2) c = -c;
    if (shifted.gammas[static_cast<size_t>(n)] != bracket * c) return false;
  }
  return true;
}

std::string slope_status_name(SlopeStatus s) {
  switch (s) {
    case SlopeStatus::pass:
      return "PASS";
    case SlopeStatus::fail:
      return "FAIL";
    case SlopeStatus::indeterminate:
      return "indeterminate";
  }
  return "?";
}

std::vector<BigFloat> default_theta_grid(mpfr_prec_t prec) {
  const BigFloat ln10 = log(BigFloat::from_long(10, prec));
  std::vector<BigFloat> g;
  for (const char* e : {"-2", "-2.5", "-3"}) g.push_back(exp(BigFloat::from_string(e, prec) * ln10));
  return g;
}

VerificationReport verify_expansion(const DirichletCharacter& chi, const Rational& b, int r, int eps, int N,
                                    const std::vector<BigFloat>& grid, const PrecisionContext& ctx) {
  ctx.validate();
  if (grid.size() < 2) throw std::invalid_argument("theta grid needs at least two points");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i].sign() > 0)) throw std::invalid_argument("theta grid values must be positive");
    if (i > 0 && !(grid[i] < grid[i - 1])) throw std::invalid_argument("theta grid must be strictly decreasing");
  }
  VerificationReport rep;
  rep.series = expansion_coefficients(chi, b, r, eps, N + 1, eps == 2 ? Route::bernoulli : Route::euler);

  const mpfr_prec_t prec = ctx.working();
  for (const auto& theta_in : grid) {
    VerificationRow row;
    row.theta = theta_in.rounded(prec);
    ThetaParams p{row.theta, BigFloat::from_rational(b, prec), r, eps};
    ThetaValue v = eval_G_eps_chi(chi, p, ctx);
    row.value = v.value;
    row.tail_bound = v.tail_bound;
    for (int n = 0; n <= N; ++n) {
      row.partial.push_back(rep.series.partial_sum(row.theta, n));
      row.remainder.push_back((row.value - row.partial.back()).abs());
    }
    rep.rows.push_back(std::move(row));
  }

  rep.pass = true;
  for (int n = 0; n <= N; ++n) {
    SlopeFit fit;
    fit.n = n;
    fit.threshold = n + 0.9;
    const bool leading_present = !rep.series.gammas[static_cast<size_t>(n) + 1].is_zero();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(rep.rows.size());
    for (const auto& row : rep.rows) {
      const BigFloat& R = row.remainder[static_cast<size_t>(n)];
      const BigFloat noise = (row.tail_bound + ldexp(BigFloat::from_long(1, prec), -ctx.bits) * (row.value.abs() + 1)) *
                             BigFloat::from_long(1L << 16, prec);
      if (leading_present && R <= noise)
        throw PrecisionError("remainder R_" + std::to_string(n) + " at theta = " + row.theta.to_string(6) +
                             " is within 2^16 of the evaluation error; raise --prec");
      const double x = row.theta.log2_abs();
      const double y = R.is_zero() ? -static_cast<double>(prec) : R.log2_abs();
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    if (!leading_present)
      fit.status = SlopeStatus::indeterminate;
    else
      fit.status = fit.slope >= fit.threshold ? SlopeStatus::pass : SlopeStatus::fail;
    if (fit.status == SlopeStatus::fail) rep.pass = false;
    rep.fits.push_back(fit);
  }
  return rep;
}

}  // namespace ptheta
