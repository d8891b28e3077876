#include "doctest.h"
#include "oracles.hpp"
#include "ptheta/expansion.hpp"
#include "ptheta/theta_eval.hpp"

using namespace ptheta;

namespace {
DirichletCharacter ch(const char* label) { return DirichletCharacter::parse(label); }

// gamma_n = r (-1)^n / n! times the regularised moment of order rn, with the
// moment taken at c = b/r.
CycRat mellin_gamma(const DirichletCharacter& chi, const Rational& b, int r, int n, bool alternating) {
  Rational c = b / r;
  c.canonicalize();
  Rational k = Rational(r) / Rational(factorial(static_cast<unsigned long>(n)));
  if (n % 2) k = -k;
  return oracle::hurwitz_moment(chi, c, r * n, alternating) * k;
}

const char* kOddLabels[] = {"3.2", "5.2", "5.3", "7.2", "7.3", "9.2", "15.2"};
const char* kAllLabels[] = {"3.2", "4.3", "5.2", "5.3", "7.2", "8.3", "8.5", "12.11", "9.2", "15.2"};
}  // namespace

TEST_CASE("leading coefficients of small cases") {
  CHECK(g2_coefficients(ch("3.2"), 1, 1, 0).gammas[0] == CycRat(ratio(1, 3)));
  CHECK(g1_coefficients(ch("3.2"), 0, 1, 0).gammas[0] == CycRat(-1));
  CHECK(g1_via_g2(ch("3.2"), 0, 1, 0).gammas[0] == CycRat(-1));
}

TEST_CASE("plain-sum coefficients match the Hurwitz moments") {
  for (const char* lab : kAllLabels) {
    const auto chi = ch(lab);
    for (int r = 1; r <= 3; ++r)
      for (const Rational& b : {Rational(0), ratio(r, 2), Rational(r), ratio(5, 3), Rational(2 * r + 1)}) {
        const auto s = g2_coefficients(chi, b, r, 5);
        for (int n = 0; n <= 5; ++n) {
          INFO(lab << " r=" << r << " b=" << format_rational(b) << " n=" << n);
          CHECK(s.gammas[static_cast<size_t>(n)] == mellin_gamma(chi, b, r, n, false));
        }
      }
  }
}

TEST_CASE("alternating coefficients agree across the three routes and the moments") {
  for (const char* lab : kOddLabels) {
    const auto chi = ch(lab);
    for (int r = 1; r <= 3; ++r)
      for (const Rational& b : {Rational(0), ratio(r, 2), ratio(r, 4)}) {
        const auto e = g1_coefficients(chi, b, r, 6);
        const auto v = g1_via_g2(chi, b, r, 6);
        for (int n = 0; n <= 6; ++n) {
          INFO(lab << " r=" << r << " b=" << format_rational(b) << " n=" << n);
          CHECK(e.gammas[static_cast<size_t>(n)] == v.gammas[static_cast<size_t>(n)]);
          CHECK(e.gammas[static_cast<size_t>(n)] == mellin_gamma(chi, b, r, n, true));
        }
        if (r == 1) {
          const auto c = closed_form_r1_taylor(chi, b, 6, 1);
          for (int n = 0; n <= 6; ++n) CHECK(c[static_cast<size_t>(n)] == e.gammas[static_cast<size_t>(n)]);
        }
      }
  }
}

TEST_CASE("closed form at r = 1 equals the Bernoulli route") {
  for (const char* lab : kAllLabels) {
    const auto chi = ch(lab);
    for (const Rational& b : {Rational(0), ratio(1, 2), Rational(1), ratio(7, 3)}) {
      const auto c = closed_form_r1_taylor(chi, b, 12);
      const auto g = g2_coefficients(chi, b, 1, 12);
      for (int n = 0; n <= 12; ++n) CHECK(c[static_cast<size_t>(n)] == g.gammas[static_cast<size_t>(n)]);
    }
  }
  // even conductor, alternating sign: only odd a contribute, giving -G2
  const auto chi = ch("4.3");
  const auto c = closed_form_r1_taylor(chi, ratio(1, 2), 6, 1);
  const auto g = g2_coefficients(chi, ratio(1, 2), 1, 6);
  for (int n = 0; n <= 6; ++n) CHECK(c[static_cast<size_t>(n)] == -g.gammas[static_cast<size_t>(n)]);
}

TEST_CASE("tail expansion of exp(-t^r) reproduces the plain-sum coefficients") {
  for (const char* lab : {"3.2", "4.3", "5.2", "7.3", "8.5"}) {
    const auto chi = ch(lab);
    for (int r = 1; r <= 3; ++r)
      for (const Rational& b : {ratio(r, 2), Rational(0), ratio(1, 3)}) {
        const auto l = lemma_route_g2(chi, b, r, 4);
        const auto g = g2_coefficients(chi, b, r, 4);
        for (int n = 0; n <= 4; ++n) CHECK(l[static_cast<size_t>(n)] == g.gammas[static_cast<size_t>(n)]);
      }
  }
}

TEST_CASE("shifting b by r f peels off the first f terms") {
  for (const char* lab : {"3.2", "4.3", "5.3", "7.2"})
    for (int r = 1; r <= 3; ++r)
      for (const Rational& b : {ratio(1, 2), Rational(1), ratio(r, 2)}) CHECK(shifted_coefficients_check(ch(lab), b, r, 5));
  CHECK_THROWS_AS(shifted_coefficients_check(ch("3.2"), 0, 1, 2), std::domain_error);
}

TEST_CASE("hypotheses are enforced") {
  CHECK_THROWS_AS(g2_coefficients(ch("1.1"), 1, 1, 2), std::domain_error);
  CHECK_THROWS_AS(g2_coefficients(ch("6.5"), 1, 1, 2), std::domain_error);
  CHECK_THROWS_AS(g1_coefficients(ch("4.3"), 1, 2, 2), std::domain_error);
  CHECK_THROWS_AS(g1_coefficients(ch("3.2"), 2, 2, 2), std::domain_error);
  CHECK_THROWS_AS(g1_coefficients(ch("3.2"), -1, 2, 2), std::domain_error);
  CHECK_THROWS_AS(expansion_coefficients(ch("3.2"), 1, 2, 2, 2, Route::closed_form), std::invalid_argument);
  CHECK_THROWS_AS(expansion_coefficients(ch("3.2"), 1, 1, 2, 2, Route::euler), std::invalid_argument);
  CHECK_THROWS_AS(parse_route("taylor"), std::invalid_argument);
  CHECK(parse_route(route_name(Route::closed_form)) == Route::closed_form);
}

TEST_CASE("partial sums of the series track the evaluator") {
  PrecisionContext ctx{128, 32};
  const auto chi = ch("3.2");
  const auto rep = verify_expansion(chi, 1, 1, 2, 4, default_theta_grid(ctx.working()), ctx);
  CHECK(rep.pass);
  REQUIRE(rep.fits.size() == 5);
  for (const auto& fit : rep.fits) {
    INFO("n=" << fit.n << " slope=" << fit.slope);
    CHECK(fit.status == SlopeStatus::pass);
    CHECK(fit.slope == doctest::Approx(fit.n + 1).epsilon(0.02));
  }
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[1].theta.to_double() == doctest::Approx(0.0031622776601683794));
}

TEST_CASE("vanishing next coefficient makes the fit indeterminate") {
  // For r = 2, b = 0 and an even character the plain sum has gamma_n = 0 at every n.
  PrecisionContext ctx{128, 32};
  const auto rep = verify_expansion(ch("5.4"), 0, 2, 2, 1, default_theta_grid(ctx.working()), ctx);
  for (const auto& fit : rep.fits) CHECK(fit.status == SlopeStatus::indeterminate);
  CHECK(rep.pass);
}

TEST_CASE("grid validation and precision floor") {
  PrecisionContext ctx{64, 16};
  std::vector<BigFloat> bad{BigFloat::from_string("1e-3", 80), BigFloat::from_string("1e-2", 80)};
  CHECK_THROWS_AS(verify_expansion(ch("3.2"), 1, 1, 2, 2, bad, ctx), std::invalid_argument);
  // at 64 bits the remainder of order theta^13 is below the evaluation noise
  CHECK_THROWS_AS(verify_expansion(ch("3.2"), 1, 1, 2, 12, default_theta_grid(80), ctx), PrecisionError);
}

TEST_CASE("slopes across the character matrix") {
  PrecisionContext ctx{256, 32};
  const auto coarse = default_theta_grid(ctx.working());
  std::vector<BigFloat> fine;
  const BigFloat ln10 = log(BigFloat::from_long(10, ctx.working()));
  for (const char* e : {"-5", "-5.5", "-6"}) fine.push_back(exp(BigFloat::from_string(e, ctx.working()) * ln10));
  for (const char* lab : {"3.2", "4.3", "5.2"})
    for (int r = 1; r <= 3; ++r)
      for (int eps : {2, 1}) {
        const auto chi = ch(lab);
        if (eps == 1 && chi.conductor() % 2 == 0) continue;
        for (const Rational& b : {ratio(r, 2), Rational(0)}) {
          INFO(lab << " r=" << r << " eps=" << eps << " b=" << format_rational(b));
          // r = 3 needs smaller theta before the terms start to decrease
          CHECK(verify_expansion(chi, b, r, eps, 4, r <= 2 ? coarse : fine, ctx).pass);
        }
      }
}
