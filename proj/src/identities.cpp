#include "ptheta/identities.hpp"

#include "ptheta/chars.hpp"
#include "ptheta/euler_maclaurin.hpp"
#include "ptheta/expansion.hpp"
#include "ptheta/special_poly.hpp"

#include <functional>
#include <stdexcept>

namespace ptheta {

long IdentityMatrix::total_cases() const {
  long t = 0;
  for (const auto& row : cells)
    for (const auto& c : row) t += c.cases;
  return t;
}

long IdentityMatrix::total_failures() const {
  long t = 0;
  for (const auto& row : cells)
    for (const auto& c : row) t += c.failures;
  return t;
}

namespace {

using Check = std::function<void(IdentityCell&, const DirichletCharacter&, int max_n)>;

void record(IdentityCell& cell, bool ok, const std::string& what) {
  ++cell.cases;
  if (ok) return;
  if (cell.failures++ == 0) cell.first_failure = what;
}

// Runs one case, counting exceptions as failures.
void attempt(IdentityCell& cell, const std::string& what, const std::function<bool()>& body) {
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    record(cell, false, what + ": " + e.what());
    return;
  }
  record(cell, ok, what);
}

std::string tag(const char* name, int n) { return std::string(name) + " n=" + std::to_string(n); }

const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> pts{Rational(0), ratio(1, 3), ratio(1, 2), Rational(2)};
  return pts;
}

void reflection(IdentityCell& cell, const DirichletCharacter& chi, int max_n) {
  for (int n = 0; n <= max_n; ++n)
    attempt(cell, tag("reflection", n), [&] {
      const auto p = gen_bernoulli_poly(n, chi);
      return p.scaled_argument(-1) == p * CycRat((n % 2 ? -1 : 1) * chi.parity());
    });
}

void derivative(IdentityCell& cell, const DirichletCharacter& chi, int max_n) {
  for (int n = 1; n <= max_n; ++n)
    attempt(cell, tag("derivative", n), [&] {
      return gen_bernoulli_poly(n, chi).derivative() == gen_bernoulli_poly(n - 1, chi) * CycRat(n);
    });
}

void parity(IdentityCell& cell, const DirichletCharacter& chi, int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    const bool must_vanish = (chi.parity() == -1) == (n % 2 == 0);
    if (!must_vanish) continue;
    attempt(cell, tag("parity", n), [&] { return gen_bernoulli_number(n, chi).is_zero(); });
  }
}

void gf_route(IdentityCell& cell, const DirichletCharacter& chi, int max_n) {
  const auto b = gf_taylor_oracle(chi, SpecialKind::bernoulli, max_n);
  for (int n = 0; n <= max_n; ++n)
    attempt(cell, tag("gf bernoulli", n), [&] { return gen_bernoulli_number(n, chi) == b[static_cast<size_t>(n)]; });
  if (chi.conductor() % 2 == 0) return;  // Euler numbers are defined for odd conductors only
  const auto e = gf_taylor_oracle(chi, SpecialKind::euler, max_n);
  for (int n = 0; n <= max_n; ++n)
    attempt(cell, tag("gf euler", n), [&] { return gen_euler_number(n, chi) == e[static_cast<size_t>(n)]; });
}

void shift(IdentityCell& cell, const DirichletCharacter& chi, int max_n) {
  for (int n = 0; n <= max_n; ++n)
    for (long l = 1; l <= 3; ++l)
      for (const auto& x : {Rational(0), ratio(1, 3), ratio(-5, 2)})
        attempt(cell, tag("shift", n) + " l=" + std::to_string(l) + " x=" + format_rational(x),
                [&] { return shift_identity_check(n, l, x, chi); });
}

void be_bridge(IdentityCell& cell, const DirichletCharacter& chi, int max_n) {
  if (chi.conductor() % 2 == 0) {
    cell.applicable = false;
    return;
  }
  for (int n = 0; n <= max_n; ++n)
    attempt(cell, tag("bridge", n), [&] {
      const auto B = gen_bernoulli_poly(n + 1, chi);
      const CycRat k = chi.conj_value(2) * pow(Rational(2), static_cast<unsigned long>(n + 1));
      const auto lhs = B.scaled_argument(ratio(1, 2)) * k - B;
      return lhs == gen_euler_poly(n, chi) * CycRat(ratio(-(n + 1), 2));
    });
}

void binomial_rearrangement(IdentityCell& cell, const DirichletCharacter& chi, int max_n) {
  for (int n = 0; n <= max_n; ++n)
    for (const auto& a : sample_points())
      attempt(cell, tag("binomial", n) + " a=" + format_rational(a), [&] { return binomial_expansion_check(n, a, chi); });
}

void g1_routes(IdentityCell& cell, const DirichletCharacter& chi, int max_n) {
  if (chi.conductor() % 2 == 0) {
    cell.applicable = false;
    return;
  }
  for (int r = 1; r <= 3; ++r) {
    const int N = max_n / r;
    for (const Rational& b : {Rational(0), ratio(r, 2)}) {
      attempt(cell, "g1 r=" + std::to_string(r) + " b=" + format_rational(b), [&] {
        const auto e = g1_coefficients(chi, b, r, N);
        const auto v = g1_via_g2(chi, b, r, N);
        if (e.gammas != v.gammas) return false;
        return r != 1 || closed_form_r1_taylor(chi, b, N, 1) == e.gammas;
      });
    }
  }
}

void orthogonality(IdentityCell& cell, const DirichletCharacter& chi, int) {
  attempt(cell, "orthogonality", [&] {
    CycRat sum, norm;
    for (long a = 0; a < chi.modulus(); ++a) {
      sum += chi.value(a);
      norm += chi.value(a) * chi.conj_value(a);
    }
    return sum.is_zero() && norm == CycRat(euler_phi(chi.modulus()));
  });
}

}  // namespace

IdentityMatrix run_identity_suite(int max_n, long max_f) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  if (max_f < 3) throw std::invalid_argument("max_f must be at least 3");
  const std::vector<std::pair<const char*, Check>> checks{
      {"reflection", reflection}, {"derivative", derivative}, {"parity", parity},
      {"gf-route", gf_route},     {"shift", shift},           {"be-bridge", be_bridge},
      {"binomial", binomial_rearrangement},     {"g1-routes", g1_routes},   {"orthogonality", orthogonality},
  };
  std::vector<DirichletCharacter> chars;
  for (long q = 3; q <= max_f; ++q)
    for (auto& c : primitive_nonprincipal_characters(q)) chars.push_back(c);

  IdentityMatrix m;
  m.max_n = max_n;
  m.max_f = max_f;
  for (const auto& c : chars) m.characters.push_back(c.label());
  for (const auto& [name, fn] : checks) {
    m.identities.emplace_back(name);
    std::vector<IdentityCell> row(chars.size());
    for (size_t j = 0; j < chars.size(); ++j) fn(row[j], chars[j], max_n);
    m.cells.push_back(std::move(row));
  }
  return m;
}

}  // namespace ptheta
