#include "doctest.h"
#include "oracles.hpp"
#include "ptheta/cyclo.hpp"

#include <random>

using namespace ptheta;

TEST_CASE("ring basics at order 4") {
  const CycRat x = CycRat::root_of_unity(4, 1);
  CHECK((CycRat(1) + x) + (-x) == CycRat(1));
  CHECK(x * x == CycRat::root_of_unity(4, 2));
  const CycRat x2 = x * x;
  CHECK(x2 * x2 == CycRat(1));
  CHECK(x2 == CycRat(-1));
}

TEST_CASE("conjugation") {
  CHECK(CycRat::root_of_unity(4, 1).conj() == CycRat::root_of_unity(4, 3));
  CHECK(CycRat(Rational(3, 5)).conj() == CycRat(Rational(3, 5)));
  const CycRat z = CycRat::root_of_unity(3, 1);
  const CycRat a = CycRat(1) + CycRat(2) * z;
  CHECK(a.conj() == CycRat(1) + CycRat(2) * z * z);
  CHECK(a.conj().conj() == a);
}

TEST_CASE("vanishing sums of roots of unity collapse to zero") {
  for (int d = 2; d <= 24; ++d) {
    CycRat s;
    for (int k = 0; k < d; ++k) s += CycRat::root_of_unity(d, k);
    CHECK_MESSAGE(s.is_zero(), "d=" << d);
  }
}

TEST_CASE("embedding") {
  auto one = CycRat(1).embed(64);
  CHECK(mpfr_cmp_ui(one.re.get(), 1) == 0);
  CHECK(one.im.is_zero());
  auto i = CycRat::root_of_unity(4, 1).embed(64);
  CHECK(std::abs(i.re.to_double()) < 1e-18);
  CHECK(std::abs(i.im.to_double() - 1) < 1e-18);
  auto zero = CycRat::from_terms(3, {{0, 1}, {1, 1}, {2, 1}}).embed(64);
  CHECK(zero.abs().log2_abs() < -60);
}

TEST_CASE("mixed orders align to the lcm") {
  const CycRat a = CycRat::root_of_unity(4, 1);
  const CycRat b = CycRat::root_of_unity(6, 1);
  const CycRat p = a * b;
  CHECK(p.order() == 12);
  CHECK(p == CycRat::root_of_unity(12, 5));
}

namespace {
CycRat random_element(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> coef(-5, 5), nterms(0, 4), den(1, 4);
  std::uniform_int_distribution<long> expo(0, d - 1);
  std::vector<std::pair<long, Rational>> t;
  for (int i = nterms(rng); i > 0; --i) t.emplace_back(expo(rng), ratio(coef(rng), den(rng)));
  return CycRat::from_terms(d, t);
}
}  // namespace

TEST_CASE("randomized ring axioms and embedding homomorphism") {
  std::mt19937 rng(12345);
  for (int d = 1; d <= 24; ++d) {
    for (int trial = 0; trial < 6; ++trial) {
      const CycRat a = random_element(rng, d), b = random_element(rng, d), c = random_element(rng, d);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      const auto ea = oracle::to_complex(a), eb = oracle::to_complex(b);
      CHECK(std::abs(oracle::to_complex(a * b) - ea * eb) < 1e-11 * (1 + std::abs(ea) * std::abs(eb)));
      // high-precision homomorphism bound 2^{4-P}(1+|a||b|)
      const long P = 128;
      auto lhs = (a * b).embed(P) - a.embed(P) * b.embed(P);
      const double bound = std::ldexp(1.0 + std::abs(ea) * std::abs(eb), static_cast<int>(4 - P));
      CHECK(lhs.abs().to_double() <= bound);
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  auto p12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
  REQUIRE(p12.size() == 5);
  CHECK(p12[0] == 1);
  CHECK(p12[2] == -1);
  CHECK(p12[4] == 1);
}
