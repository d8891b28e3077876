#pragma once
// Reference computations used only by the tests. Each one follows a route
// that shares no code with the library function it is compared against.

#include "ptheta/chars.hpp"
#include "ptheta/cyclo.hpp"

#include <mpfr.h>

#include <complex>
#include <vector>

namespace oracle {

using ptheta::CycRat;
using ptheta::Integer;
using ptheta::Rational;

// B_n by the explicit double sum B_n = sum_k 1/(k+1) sum_j (-1)^j C(k,j) j^n.
inline Rational bernoulli_explicit(int n) {
  Rational total = 0;
  for (int k = 0; k <= n; ++k) {
    Integer inner = 0;
    for (int j = 0; j <= k; ++j) {
      Integer jn;
      mpz_ui_pow_ui(jn.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
      inner += (j % 2 == 0 ? 1 : -1) * c * jn;
    }
    total += Rational(inner) / (k + 1);
  }
  total.canonicalize();
  return total;
}

// Taylor coefficients of sum_a conj(chi(a)) t e^{a t} / (e^{f t} - 1), times n!,
// by dividing truncated series term by term (leading t cancelled).
inline std::vector<CycRat> gen_bernoulli_series(const ptheta::DirichletCharacter& chi, int n_max) {
  const long f = chi.modulus();
  const int len = n_max + 1;
  std::vector<Rational> fact(static_cast<size_t>(len) + 2);
  fact[0] = 1;
  for (size_t k = 1; k < fact.size(); ++k) fact[k] = fact[k - 1] * static_cast<long>(k);
  std::vector<CycRat> numer(static_cast<size_t>(len));
  std::vector<Rational> denom(static_cast<size_t>(len));
  for (int k = 0; k < len; ++k) {
    for (long a = 1; a < f; ++a) {
      Rational ak = 1;
      for (int i = 0; i < k; ++i) ak *= a;
      numer[static_cast<size_t>(k)] += chi.value(a).conj() * Rational(ak / fact[static_cast<size_t>(k)]);
    }
    if (f == 1 && k == 0) numer[0] += CycRat(1);  // a = 0 term of the principal character
    Rational fk = 1;
    for (int i = 0; i <= k; ++i) fk *= f;
    denom[static_cast<size_t>(k)] = fk / fact[static_cast<size_t>(k) + 1];
  }
  std::vector<CycRat> q(static_cast<size_t>(len));
  for (int k = 0; k < len; ++k) {
    CycRat acc = numer[static_cast<size_t>(k)];
    for (int i = 1; i <= k; ++i) acc -= q[static_cast<size_t>(k - i)] * denom[static_cast<size_t>(i)];
    q[static_cast<size_t>(k)] = acc * Rational(1 / denom[0]);
  }
  for (int k = 0; k < len; ++k) q[static_cast<size_t>(k)] *= fact[static_cast<size_t>(k)];
  return q;
}

// Complex double value of a cyclotomic number (for coarse numeric checks).
inline std::complex<double> to_complex(const CycRat& c) {
  const double tau = 6.283185307179586476925286766559;
  std::complex<double> s = 0;
  for (auto& [k, v] : c.terms()) s += v.get_d() * std::polar(1.0, tau * k / c.order());
  return s;
}

// B_n(x) = sum_j C(n,j) B_j x^{n-j} with B_j from the explicit double sum.
inline Rational bernoulli_poly_value(int n, const Rational& x) {
  Rational total = 0, xp = 1;
  for (int j = n; j >= 0; --j) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    total += Rational(c) * bernoulli_explicit(j) * xp;
    xp *= x;
  }
  total.canonicalize();
  return total;
}

// Regularised value of r sum_{n>=0} w(n) (n + c)^m read through Hurwitz zeta at
// -m: -r L^m sum_{a<L} w(a) B_{m+1}((a + c)/L) / (m + 1), where w has period L.
// Here w(n) = chi(n), or (-1)^n chi(n) with L = 2f when alternating is set.
inline CycRat hurwitz_moment(const ptheta::DirichletCharacter& chi, const Rational& c, int m, bool alternating) {
  const long f = chi.modulus();
  const long L = alternating ? 2 * f : f;
  CycRat s;
  for (long a = 0; a < L; ++a) {
    CycRat w = chi.value(a);
    if (w.is_zero()) continue;
    if (alternating && a % 2) w = -w;
    Rational x = (Rational(a) + c) / L;
    x.canonicalize();
    s += w * bernoulli_poly_value(m + 1, x);
  }
  Rational Lm = 1;
  for (int i = 0; i < m; ++i) Lm *= L;
  Rational k = -Lm / (m + 1);
  k.canonicalize();
  return s * k;
}

}  // namespace oracle
