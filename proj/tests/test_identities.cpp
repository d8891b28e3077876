#include "doctest.h"
#include "ptheta/identities.hpp"

#include <stdexcept>

using namespace ptheta;

TEST_CASE("identity suite over conductors up to 9") {
  const auto m = run_identity_suite(20, 9);
  REQUIRE(m.identities.size() == 9);
  // conductors 3, 4, 5, 7, 8, 9 carry 1, 1, 3, 5, 2, 4 primitive nonprincipal characters
  CHECK(m.characters.size() == 16);
  for (size_t i = 0; i < m.identities.size(); ++i)
    for (size_t j = 0; j < m.characters.size(); ++j) {
      const auto& c = m.cells[i][j];
      INFO(m.identities[i] << " " << m.characters[j] << " " << c.first_failure);
      CHECK(c.pass());
      if (c.applicable) CHECK(c.cases > 0);
    }
  CHECK(m.pass());
}

TEST_CASE("even conductors skip the odd-only identities") {
  const auto m = run_identity_suite(4, 4);
  REQUIRE(m.characters == std::vector<std::string>{"3.2", "4.3"});
  for (size_t i = 0; i < m.identities.size(); ++i) {
    const bool odd_only = m.identities[i] == "be-bridge" || m.identities[i] == "g1-routes";
    CHECK(m.cells[i][1].applicable == !odd_only);
    CHECK(m.cells[i][0].applicable);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(run_identity_suite(-1, 5), std::invalid_argument);
  CHECK_THROWS_AS(run_identity_suite(3, 2), std::invalid_argument);
}
