#include "doctest.h"
#include "oracles.hpp"
#include "ptheta/special_poly.hpp"

using namespace ptheta;

namespace {
DirichletCharacter ch(const char* label) { return DirichletCharacter::parse(label); }

std::vector<DirichletCharacter> primitive_upto(long fmax, bool odd_only = false) {
  std::vector<DirichletCharacter> out;
  for (long f = 3; f <= fmax; ++f) {
    if (odd_only && f % 2 == 0) continue;
    for (auto& c : primitive_nonprincipal_characters(f)) out.push_back(c);
  }
  return out;
}
}  // namespace

TEST_CASE("classical numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  for (int n = 0; n <= 30; ++n) CHECK_MESSAGE(bernoulli_number(n) == oracle::bernoulli_explicit(n), n);
  for (int k = 1; k <= 15; ++k) CHECK(bernoulli_number(2 * k + 1) == 0);
  CHECK(euler_number_at_zero(0) == 1);
  CHECK(euler_number_at_zero(1) == Rational(-1, 2));
  CHECK(euler_number_at_zero(2) == 0);
  CHECK(euler_number_at_zero(3) == Rational(1, 4));
}

TEST_CASE("classical polynomials") {
  CHECK(bernoulli_poly(1) == CharPolynomial::from_rationals({Rational(-1, 2), 1}));
  CHECK(bernoulli_poly(2) == CharPolynomial::from_rationals({Rational(1, 6), -1, 1}));
  CHECK(euler_poly(0) == CharPolynomial::from_rationals({1}));
  CHECK(euler_poly(1) == CharPolynomial::from_rationals({Rational(-1, 2), 1}));
  // E_n(x) + E_n(x+1) = 2 x^n
  for (int n = 0; n <= 12; ++n)
    for (Rational x : {Rational(0), Rational(1, 3), Rational(-5, 2)}) {
      Rational xn = pow(x, static_cast<unsigned long>(n));
      CHECK(euler_value(n, x) + euler_value(n, x + 1) == 2 * xn);
    }
}

TEST_CASE("generalized Bernoulli examples") {
  const auto principal = DirichletCharacter::from_conrey(1, 1);
  for (int n = 0; n <= 8; ++n) CHECK(gen_bernoulli_poly(n, principal) == bernoulli_poly(n));
  for (auto& c : primitive_upto(12)) CHECK(gen_bernoulli_poly(0, c).is_zero());
  CHECK(gen_bernoulli_poly(1, ch("3.2")) == CharPolynomial::constant(Rational(-1, 3)));
  CHECK(gen_bernoulli_poly(1, ch("4.3")) == CharPolynomial::constant(Rational(-1, 2)));
  CHECK(gen_bernoulli_number(2, ch("4.3")).is_zero());
  CHECK(gen_bernoulli_number(3, ch("3.2")) == CycRat(Rational(2, 3)));
  CHECK(gen_bernoulli_number(3, ch("4.3")) == CycRat(Rational(3, 2)));
  CHECK_THROWS_AS(gen_bernoulli_poly(1, DirichletCharacter::from_conrey(8, 7)), std::domain_error);
}

TEST_CASE("generalized Euler examples") {
  CHECK(gen_euler_poly(0, ch("3.2")) == CharPolynomial::constant(CycRat(-2)));
  const auto c52 = ch("5.2");
  CycRat expect;
  for (long m = 1; m <= 4; ++m) expect += c52.conj_value(m) * Rational(m % 2 ? -1 : 1);
  CHECK(gen_euler_number(0, c52) == expect);
  CHECK_THROWS_AS(gen_euler_poly(0, ch("4.3")), std::domain_error);
  // conductor 1 gives the classical polynomials
  for (int n = 0; n <= 6; ++n) CHECK(gen_euler_poly(n, DirichletCharacter::from_conrey(1, 1)) == euler_poly(n));
}

TEST_CASE("generating-function oracles agree with the finite sums") {
  std::vector<DirichletCharacter> chars = primitive_upto(12);
  chars.push_back(DirichletCharacter::from_conrey(1, 1));
  for (auto& c : chars) {
    const int nmax = 14;
    auto lib = gf_taylor_oracle(c, SpecialKind::bernoulli, nmax);
    auto ref = oracle::gen_bernoulli_series(c, nmax);
    for (int n = 0; n <= nmax; ++n) {
      CHECK_MESSAGE(gen_bernoulli_number(n, c) == ref[static_cast<size_t>(n)], c.label() << " n=" << n);
      CHECK(lib[static_cast<size_t>(n)] == ref[static_cast<size_t>(n)]);
      CHECK(gen_bernoulli_poly(n, c).evaluate(Rational(0)) == ref[static_cast<size_t>(n)]);
    }
  }
  auto b32 = gf_taylor_oracle(ch("3.2"), SpecialKind::bernoulli, 1);
  CHECK(b32[0].is_zero());
  CHECK(b32[1] == CycRat(Rational(-1, 3)));
  auto bp = gf_taylor_oracle(DirichletCharacter::from_conrey(1, 1), SpecialKind::bernoulli, 2);
  CHECK(bp[0] == CycRat(1));
  CHECK(bp[1] == CycRat(Rational(-1, 2)));
  CHECK(bp[2] == CycRat(Rational(1, 6)));
  CHECK(gf_taylor_oracle(ch("3.2"), SpecialKind::euler, 0)[0] == CycRat(-2));
  for (auto& c : primitive_upto(11, true)) {
    auto e = gf_taylor_oracle(c, SpecialKind::euler, 10);
    for (int n = 0; n <= 10; ++n) CHECK(gen_euler_number(n, c) == e[static_cast<size_t>(n)]);
  }
}

TEST_CASE("parity vanishing, derivative and reflection") {
  for (auto& c : primitive_upto(12)) {
    for (int n = 1; n <= 16; ++n) {
      const auto p = gen_bernoulli_poly(n, c);
      CHECK(p.derivative() == gen_bernoulli_poly(n - 1, c) * CycRat(n));
      const CycRat sign = CycRat(((n % 2) ? -1 : 1) * c.parity());
      CHECK(p.scaled_argument(-1) == p * sign);
      if (n >= 2 && c.parity() == -1 && n % 2 == 0) CHECK(gen_bernoulli_number(n, c).is_zero());
      if (n >= 3 && c.parity() == 1 && n % 2 == 1) CHECK(gen_bernoulli_number(n, c).is_zero());
    }
  }
}

TEST_CASE("periodic functions") {
  const auto c32 = ch("3.2");
  PeriodicCharFunction b1(SpecialKind::bernoulli, 1, c32);
  CHECK(b1(Rational(0)) == gen_bernoulli_number(1, c32));
  CHECK(b1(Rational(3)) == gen_bernoulli_number(1, c32));
  CHECK(b1(Rational(7, 2)) == b1(Rational(1, 2)));
  CHECK(b1(Rational(1, 2)) == CycRat(Rational(-1, 3)));
  CHECK(b1(Rational(3, 2)) == CycRat(Rational(2, 3)));
  for (auto& c : primitive_upto(9)) {
    for (int n = 0; n <= 6; ++n) {
      PeriodicCharFunction pb(SpecialKind::bernoulli, n, c);
      const auto poly = gen_bernoulli_poly(n, c);
      for (Rational x : {Rational(0), Rational(1, 7), Rational(5, 6)}) CHECK(pb(x) == poly.evaluate(x));
      for (long k = -3; k <= 2 * c.modulus(); ++k) {
        const auto piece = pb.piece(k);
        for (Rational u : {Rational(1, 5), Rational(1, 2), Rational(7, 9)}) {
          const Rational x = u + k;
          CHECK(piece.evaluate(x) == pb(x));
          CHECK(pb(x + c.modulus()) == pb(x));
        }
      }
      if (c.modulus() % 2 == 1) {
        PeriodicCharFunction pe(SpecialKind::euler, n, c);
        const auto epoly = gen_euler_poly(n, c);
        for (Rational x : {Rational(0), Rational(2, 7)}) CHECK(pe(x) == epoly.evaluate(x));
        for (long k = -2; k <= c.modulus(); ++k) {
          const Rational x = Rational(1, 3) + k;
          CHECK(pe.piece(k).evaluate(x) == pe(x));
          CHECK(pe(x + c.modulus()) == -pe(x));
        }
      }
    }
  }
  auto v = b1(BigFloat::from_string("1.5", 128));
  CHECK(std::abs(v.re.to_double() - 2.0 / 3) < 1e-30);
}

TEST_CASE("shift identity") {
  CHECK(shift_identity_check(0, 2, Rational(1, 3), ch("5.2")));
  CHECK(shift_identity_check(1, 1, Rational(0), ch("3.2")));
  CHECK(shift_identity_check(5, 2, Rational(1, 3), ch("4.3")));
  for (auto& c : primitive_upto(9))
    for (int n = 0; n <= 8; ++n)
      for (long l = 1; l <= 3; ++l) CHECK(shift_identity_check(n, l, Rational(2, 5), c));
}
