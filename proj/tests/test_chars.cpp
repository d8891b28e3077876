#include "doctest.h"
#include "ptheta/chars.hpp"

#include <numeric>
#include <set>

using namespace ptheta;

TEST_CASE("counts match the group order") {
  CHECK(enumerate_characters(1).size() == 1);
  CHECK(enumerate_characters(4).size() == 2);
  for (long q = 1; q <= 30; ++q) CHECK(static_cast<long>(enumerate_characters(q).size()) == euler_phi(q));
  CHECK_THROWS_AS(enumerate_characters(0), std::domain_error);
}

TEST_CASE("modulus 5 orders as a multiset") {
  std::multiset<long> orders;
  for (auto& chi : enumerate_characters(5)) orders.insert(chi.order());
  CHECK(orders == std::multiset<long>{1, 2, 4, 4});
}

TEST_CASE("small named characters") {
  auto c32 = DirichletCharacter::from_conrey(3, 2);
  CHECK(c32.value(1) == CycRat(1));
  CHECK(c32.value(2) == CycRat(-1));
  auto c43 = DirichletCharacter::parse("4.3");
  CHECK(c43.value(3) == CycRat(-1));
  CHECK(c43.value(7) == CycRat(-1));
  CHECK(c43.value(0).is_zero());
  auto c52 = DirichletCharacter::parse("5.2");
  CHECK(c52.order() == 4);
  CHECK(c52.value(2) == CycRat::root_of_unity(4, 1));
  CHECK(c52.value(4) == CycRat(-1));
  CHECK(DirichletCharacter::from_conrey(7, 1).is_principal());
  CHECK_THROWS_AS(DirichletCharacter::from_conrey(6, 3), std::domain_error);
  CHECK_THROWS_AS(DirichletCharacter::parse("5"), std::invalid_argument);
}

TEST_CASE("multiplicativity, orthogonality, conjugation for q <= 30") {
  for (long q = 1; q <= 30; ++q) {
    auto all = enumerate_characters(q);
    for (auto& chi : all) {
      for (long m = 0; m < q; ++m)
        for (long n = 0; n < q; ++n) REQUIRE(chi.value(m * n) == chi.value(m) * chi.value(n));
      CycRat s;
      for (long n = 0; n < q; ++n) s += chi.value(n);
      if (!chi.is_principal()) CHECK_MESSAGE(s.is_zero(), chi.label());
      CHECK(chi.conjugate().conjugate() == chi);
      for (long n = 0; n < q; ++n) {
        CHECK(chi.value(n + q) == chi.value(n));
        CHECK(chi.conjugate().value(n) == chi.value(n).conj());
        CHECK(chi.value(n).is_zero() == (std::gcd(n, q) != 1));
      }
      CHECK(chi.value(q - 1) == CycRat(chi.parity()));
    }
    // distinct tables
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
    // conrey labels round-trip
    for (auto& chi : all) CHECK(DirichletCharacter::parse(chi.label()) == chi);
  }
}

TEST_CASE("conductors by brute-force induced modulus") {
  for (long q = 1; q <= 30; ++q) {
    for (auto& chi : enumerate_characters(q)) {
      long least = q;
      for (long d = 1; d <= q; ++d) {
        if (q % d) continue;
        bool induced = true;
        for (long m = 1; m < q && induced; ++m)
          for (long n = m + d; n < q && induced; n += d)
            if (std::gcd(m, q) == 1 && std::gcd(n, q) == 1 && !(chi.value(m) == chi.value(n))) induced = false;
        if (induced) {
          least = d;
          break;
        }
      }
      CHECK_MESSAGE(chi.conductor() == least, chi.label());
      auto [f, prim] = conductor_and_primitivize(chi);
      CHECK(f == least);
      CHECK(prim.is_primitive());
      CHECK(prim.modulus() == f);
      for (long n = 0; n < q; ++n)
        if (std::gcd(n, q) == 1) CHECK(prim.value(n) == chi.value(n));
    }
  }
  auto [f6, p6] = conductor_and_primitivize(DirichletCharacter::from_conrey(6, 1));
  CHECK(f6 == 1);
  CHECK(p6.modulus() == 1);
  auto [f8, p8] = conductor_and_primitivize(DirichletCharacter::from_conrey(8, 7));
  CHECK(f8 == 4);
  CHECK(p8 == DirichletCharacter::from_conrey(4, 3));
}
