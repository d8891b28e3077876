#include "doctest.h"
#include "ptheta/euler_maclaurin.hpp"
#include "ptheta/special_poly.hpp"

#include <random>

using namespace ptheta;

namespace {
DirichletCharacter ch(const char* label) { return DirichletCharacter::parse(label); }

std::vector<DirichletCharacter> small_characters(long fmax) {
  std::vector<DirichletCharacter> out;
  for (long f = 3; f <= fmax; ++f)
    for (auto& c : primitive_nonprincipal_characters(f)) out.push_back(c);
  return out;
}
}  // namespace

TEST_CASE("worked example with f(x) = x") {
  const auto c = ch("3.2");
  const std::vector<Rational> x{0, 1};
  CHECK(dashed_sum_exact(c, x, 0, 3) == CycRat(-1));
  auto r = char_em_sum_exact(c, x, 0, 3, 1);
  CHECK(r.total == CycRat(-1));
  CHECK(r.remainder_integral.is_zero());
}

TEST_CASE("exact polynomial identity, remainder zero for N = deg f") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 5);
  for (auto& c : small_characters(7)) {
    for (int deg = 0; deg <= 8; ++deg) {
      std::vector<Rational> p;
      for (int i = 0; i <= deg; ++i) p.push_back(ratio(coef(rng), den(rng)));
      if (p.back() == 0) p.back() = 1;
      for (long M = 1; M <= 4; ++M) {
        const Rational beta(c.modulus() * M);
        auto r = char_em_sum_exact(c, p, 0, beta, deg);
        CHECK(r.remainder_integral.is_zero());
        CHECK_MESSAGE(r.total == dashed_sum_exact(c, p, 0, beta), c.label() << " deg " << deg << " M " << M);
      }
    }
  }
}

TEST_CASE("exact identity with small N and rational or integer endpoints") {
  const std::vector<Rational> p{3, -1, 0, 2, Rational(1, 2)};
  for (auto& c : small_characters(8)) {
    for (int N = 0; N <= 5; ++N) {
      for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{
               {0, 5}, {1, 7}, {Rational(1, 3), Rational(17, 2)}, {-2, 4}, {2, 3}}) {
        auto r = char_em_sum_exact(c, p, a, b, N);
        CHECK_MESSAGE(r.total == dashed_sum_exact(c, p, a, b), c.label() << " N " << N);
      }
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(char_em_sum_exact(ch("3.2"), {1}, 3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(char_em_sum_exact(DirichletCharacter::from_conrey(9, 8), {1}, 0, 3, 0), std::domain_error);
  CHECK_THROWS_AS(tail_expansion_coeffs(DirichletCharacter::from_conrey(5, 1), {1}, 0), std::domain_error);
  PrecisionContext ctx;
  CHECK_THROWS_AS(char_em_sum_to_infinity(ch("3.2"), SmoothFunctionBundle::polynomial({1}), 0, 2, ctx),
                  std::domain_error);
}

TEST_CASE("numeric mode with e^{-x} against the direct dashed sum") {
  PrecisionContext ctx{128, 32};
  const auto c = ch("4.3");
  const auto f = SmoothFunctionBundle::exponential(1);
  auto r = char_em_sum(c, f, 0, 40, 3, ctx);
  auto direct = dashed_sum(c, f, 0, 40, ctx.working());
  CHECK((r.total - direct).abs().log2_abs() < -90);
  // refining the quadrature fourfold stays within the reported bound
  auto fine = char_em_sum(c, f, 0, 40, 3, ctx, QuadratureOptions{4, 4096});
  CHECK((fine.remainder_integral - r.remainder_integral).abs() <= r.remainder_error);
}

TEST_CASE("numeric mode with a complex character and e^{-x^2}") {
  PrecisionContext ctx{160, 32};
  const auto c = ch("5.2");
  const auto f = SmoothFunctionBundle::exp_power(2);
  for (int N : {0, 2, 5}) {
    auto r = char_em_sum(c, f, Rational(1, 2), 9, N, ctx);
    auto direct = dashed_sum(c, f, Rational(1, 2), 9, ctx.working());
    CHECK((r.total - direct).abs().log2_abs() < -140);
  }
}

TEST_CASE("infinite range reproduces the full series") {
  PrecisionContext ctx{128, 32};
  for (const char* label : {"3.2", "5.2", "7.3"}) {
    const auto c = ch(label);
    const auto f = SmoothFunctionBundle::exponential(Rational(1, 3));
    auto r = char_em_sum_to_infinity(c, f, 0, 4, ctx);
    auto direct = dashed_sum(c, f, 0, 400, ctx.working());  // e^{-400/3} is far below 2^{-160}
    CHECK((r.total - direct).abs().log2_abs() < -110);
  }
}

TEST_CASE("tail expansion coefficients") {
  auto c = tail_expansion_coeffs(ch("3.2"), {1}, 0);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == CycRat(Rational(1, 3)));
  auto z = tail_expansion_coeffs(ch("5.2"), {0, 2}, Rational(1, 2));
  CHECK(z[0].is_zero());
  const auto c43 = ch("4.3");
  auto t = tail_expansion_coeffs(c43, {1, 1}, 1);
  CHECK(t[0] == -gen_bernoulli_poly(1, c43.conjugate()).evaluate(Rational(1)));
  CHECK(t[1] == gen_bernoulli_poly(2, c43.conjugate()).evaluate(Rational(1)) * Rational(-1, 2));
}

TEST_CASE("binomial rearrangement") {
  CHECK(binomial_expansion_check(0, 5, ch("3.2")));
  CHECK(binomial_expansion_check(3, Rational(1, 2), ch("3.2")));
  CHECK(binomial_expansion_check(7, 2, ch("4.3")));
  for (auto& c : small_characters(9))
    for (int n = 0; n <= 12; ++n) CHECK(binomial_expansion_check(n, Rational(3, 7), c));
}
