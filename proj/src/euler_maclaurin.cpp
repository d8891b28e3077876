#include "ptheta/euler_maclaurin.hpp"

#include "ptheta/quadrature.hpp"
#include "ptheta/special_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ptheta {

namespace {

void check_inputs(const DirichletCharacter& chi, const Rational& alpha, const Rational& beta, int N) {
  if (!chi.is_primitive()) throw std::domain_error("character " + chi.label() + " is not primitive");
  if (!(alpha < beta)) throw std::invalid_argument("need alpha < beta");
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of range");
  return z.get_si();
}

// Bbar_{n,chibar}(x); at integers the mean of the one-sided limits.
CycRat periodic_mid(const PeriodicCharFunction& pf, const Rational& x) {
  if (!is_integer(x)) return pf(x);
  const long k = to_long(x.get_num());
  return (pf.piece(k - 1).evaluate(x) + pf.piece(k).evaluate(x)) * Rational(1, 2);
}

Rational inv_factorial(unsigned long n) { return Rational(Integer(1), factorial(n)); }

// sup over [0,1] of |B_n(y)|, crude but rigorous: sum of |coefficients|.
double log2_sup_bernoulli(int n) {
  double s = 0;
  for (const auto& c : bernoulli_coefficients(n)) s += std::fabs(c.get_d());
  return std::log2(s);
}

// log2 of a bound for sup |Bbar_{n,chi}| over the real line.
double log2_sup_periodic(int n, long f) {
  return (n - 1) * std::log2(static_cast<double>(f)) + std::log2(static_cast<double>(f)) + log2_sup_bernoulli(n);
}

class PieceCache {
 public:
  PieceCache(const PeriodicCharFunction& pf, mpfr_prec_t prec) : pf_(pf), prec_(prec) {}

  // Coefficients (in u = x - k) of the piece on [k, k+1), embedded.
  const std::vector<BigComplex>& local(long k) {
    const long f = pf_.period();
    const long key = ((k % f) + f) % f;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const CharPolynomial poly = pf_.piece(k).shifted(Rational(k));
    std::vector<BigComplex> c;
    for (const auto& a : poly.coeffs()) c.push_back(a.embed(prec_));
    return cache_.emplace(key, std::move(c)).first->second;
  }

 private:
  const PeriodicCharFunction& pf_;
  mpfr_prec_t prec_;
  std::map<long, std::vector<BigComplex>> cache_;
};

BigComplex horner(const std::vector<BigComplex>& c, const BigFloat& u) {
  BigComplex acc(u.prec());
  for (size_t i = c.size(); i-- > 0;) {
    acc *= u;
    acc += c[i];
  }
  return acc;
}

// int_alpha^beta Bbar_{n,chibar}(x) f^{(n)}(x) dx with `order` points per unit piece.
BigComplex integrate_pieces(PieceCache& pieces, const SmoothFunctionBundle& f, int n, const Rational& alpha,
                            const Rational& beta, int order, mpfr_prec_t prec) {
  const GaussLegendreRule& rule = gauss_legendre(order, prec);
  BigComplex total(prec);
  const long k0 = to_long(floor_div(alpha));
  const long k1 = to_long(floor_div(beta));
  for (long k = k0; k <= k1; ++k) {
    const Rational lo = std::max(alpha, Rational(k));
    const Rational hi = std::min(beta, Rational(k + 1));
    if (!(lo < hi)) continue;
    const auto& coeffs = pieces.local(k);
    const BigFloat ulo = BigFloat::from_rational(lo - k, prec);
    const BigFloat uhi = BigFloat::from_rational(hi - k, prec);
    const BigFloat half = (uhi - ulo) / 2;
    const BigFloat mid = (uhi + ulo) / 2;
    BigComplex piece(prec);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const BigFloat u = mid + half * rule.nodes[i];
      BigComplex v = horner(coeffs, u);
      v *= f.eval(n, u + k) * rule.weights[i];
      piece += v;
    }
    piece *= half;
    total += piece;
  }
  return total;
}

struct Integral {
  BigComplex value;
  BigFloat error;
  int order;
};

Integral adaptive_integral(const DirichletCharacter& chi, const SmoothFunctionBundle& f, int N, const Rational& alpha,
                           const Rational& beta, mpfr_prec_t prec, const QuadratureOptions& q) {
  PeriodicCharFunction pf(SpecialKind::bernoulli, N + 1, chi.conjugate());
  PieceCache pieces(pf, prec);
  int order = 16 * std::max(1, q.order_scale);
  BigComplex prev = integrate_pieces(pieces, f, N + 1, alpha, beta, order, prec);
  const BigFloat floor_err = ldexp(BigFloat::from_long(1, prec), -static_cast<long>(prec) + 8);
  while (true) {
    const int next_order = 2 * order;
    BigComplex cur = integrate_pieces(pieces, f, N + 1, alpha, beta, next_order, prec);
    BigFloat diff = (cur - prev).abs();
    BigFloat scale = cur.abs() + 1;
    BigFloat tol = floor_err * scale;
    if (diff <= tol || next_order >= q.max_order) {
      // The doubled rule is far more accurate than the difference suggests;
      // the difference is reported as the bound.
      return {std::move(cur), max(diff, tol), next_order};
    }
    prev = std::move(cur);
    order = next_order;
  }
}

BigFloat sign_factor(int sign, mpfr_prec_t prec) { return BigFloat::from_long(sign, prec); }

}  // namespace

SmoothFunctionBundle SmoothFunctionBundle::polynomial(std::vector<Rational> coeffs) {
  SmoothFunctionBundle b;
  auto derivs = std::make_shared<std::vector<std::vector<Rational>>>();
  derivs->push_back(coeffs);
  while (!derivs->back().empty()) {
    const auto& p = derivs->back();
    std::vector<Rational> d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    derivs->push_back(std::move(d));
  }
  b.eval = [derivs](int k, const BigFloat& x) {
    BigFloat acc(x.prec());
    if (k >= static_cast<int>(derivs->size())) return acc;
    const auto& p = (*derivs)[static_cast<size_t>(k)];
    for (size_t i = p.size(); i-- > 0;) {
      acc *= x;
      acc += BigFloat::from_rational(p[i], x.prec());
    }
    return acc;
  };
  const bool zero = coeffs.empty() || std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
  b.decay_bound = [zero](double, int) { return zero ? 0.0 : std::numeric_limits<double>::infinity(); };
  b.exact = std::move(coeffs);
  return b;
}

SmoothFunctionBundle SmoothFunctionBundle::exponential(const Rational& c) {
  if (c <= 0) throw std::domain_error("exponential decay rate must be positive");
  SmoothFunctionBundle b;
  b.eval = [c](int k, const BigFloat& x) {
    const BigFloat cf = BigFloat::from_rational(c, x.prec());
    BigFloat v = exp(-(cf * x)) * pow(cf, static_cast<long>(k));
    return k % 2 ? -v : v;
  };
  const double cd = c.get_d();
  b.decay_bound = [cd](double A, int k) {
    // sup x^A e^{-cx} = (A/(c e))^A
    const double base = A > 0 ? std::pow(A / (cd * std::exp(1.0)), A) : 1.0;
    return std::pow(cd, k) * base;
  };
  return b;
}

SmoothFunctionBundle SmoothFunctionBundle::exp_power(int r) {
  if (r < 1) throw std::domain_error("exponent r must be positive");
  // f^{(k)}(x) = p_k(x) e^{-x^r} with p_{k+1} = p_k' - r x^{r-1} p_k.
  struct State {
    int r;
    std::mutex mu;
    std::vector<std::vector<Integer>> polys{{Integer(1)}};
    std::vector<Integer> get(int k) {
      std::lock_guard<std::mutex> lock(mu);
      while (static_cast<int>(polys.size()) <= k) {
        const auto& p = polys.back();
        std::vector<Integer> next(p.size() + static_cast<size_t>(r - 1), Integer(0));
        for (size_t i = 1; i < p.size(); ++i) next[i - 1] += p[i] * static_cast<long>(i);
        for (size_t i = 0; i < p.size(); ++i) next[i + static_cast<size_t>(r - 1)] -= p[i] * r;
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        polys.push_back(std::move(next));
      }
      return polys[static_cast<size_t>(k)];
    }
  };
  auto st = std::make_shared<State>();
  st->r = r;
  SmoothFunctionBundle b;
  b.eval = [st](int k, const BigFloat& x) {
    const auto p = st->get(k);
    BigFloat acc(x.prec());
    for (size_t i = p.size(); i-- > 0;) {
      acc *= x;
      acc += BigFloat::from_mpz(p[i], x.prec());
    }
    return acc * exp(-pow(x, static_cast<long>(st->r)));
  };
  b.decay_bound = [st](double A, int k) {
    const auto p = st->get(k);
    const double rr = st->r;
    double total = 0;
    for (size_t j = 0; j < p.size(); ++j) {
      if (p[j] == 0) continue;
      const double s = A + static_cast<double>(j);
      // sup x^s e^{-x^r} = (s/(r e))^{s/r}
      const double sup = s > 0 ? std::pow(s / (rr * std::exp(1.0)), s / rr) : 1.0;
      total += std::fabs(p[j].get_d()) * sup;
    }
    return total;
  };
  return b;
}

ExactEMResult char_em_sum_exact(const DirichletCharacter& chi, const std::vector<Rational>& poly,
                                const Rational& alpha, const Rational& beta, int N) {
  check_inputs(chi, alpha, beta, N);
  const DirichletCharacter chibar = chi.conjugate();
  std::vector<CharPolynomial> derivs{CharPolynomial::from_rationals(poly)};
  for (int n = 0; n <= N; ++n) derivs.push_back(derivs.back().derivative());

  CycRat boundary;
  for (int n = 0; n <= N; ++n) {
    PeriodicCharFunction pf(SpecialKind::bernoulli, n + 1, chibar);
    CycRat diff = periodic_mid(pf, beta) * derivs[static_cast<size_t>(n)].evaluate(beta) -
                  periodic_mid(pf, alpha) * derivs[static_cast<size_t>(n)].evaluate(alpha);
    Rational c = inv_factorial(static_cast<unsigned long>(n + 1));
    if (n % 2 == 0) c = -c;
    boundary += diff * c;
  }
  boundary *= Rational(chi.parity());

  PeriodicCharFunction pf(SpecialKind::bernoulli, N + 1, chibar);
  const CharPolynomial& top = derivs[static_cast<size_t>(N + 1)];
  CycRat integral;
  if (!top.is_zero()) {
    const long k0 = to_long(floor_div(alpha));
    const long k1 = to_long(floor_div(beta));
    for (long k = k0; k <= k1; ++k) {
      const Rational lo = std::max(alpha, Rational(k));
      const Rational hi = std::min(beta, Rational(k + 1));
      if (!(lo < hi)) continue;
      const CharPolynomial anti = (pf.piece(k) * top).antiderivative();
      integral += anti.evaluate(hi) - anti.evaluate(lo);
    }
    Rational c = inv_factorial(static_cast<unsigned long>(N + 1)) * chi.parity();
    if (N % 2) c = -c;
    integral *= c;
  }
  return {boundary, integral, boundary + integral};
}

namespace {

BigComplex boundary_terms(const DirichletCharacter& chi, const SmoothFunctionBundle& f, const Rational& x, int N,
                          mpfr_prec_t prec) {
  const DirichletCharacter chibar = chi.conjugate();
  const BigFloat xf = BigFloat::from_rational(x, prec);
  BigComplex s(prec);
  for (int n = 0; n <= N; ++n) {
    PeriodicCharFunction pf(SpecialKind::bernoulli, n + 1, chibar);
    BigComplex term = periodic_mid(pf, x).embed(prec);
    term *= f.eval(n, xf);
    term *= BigFloat::from_rational(inv_factorial(static_cast<unsigned long>(n + 1)), prec);
    if (n % 2 == 0)
      s -= term;
    else
      s += term;
  }
  return s;
}

}  // namespace

EMResult char_em_sum(const DirichletCharacter& chi, const SmoothFunctionBundle& f, const Rational& alpha,
                     const Rational& beta, int N, const PrecisionContext& ctx, const QuadratureOptions& q) {
  ctx.validate();
  check_inputs(chi, alpha, beta, N);
  if (N + 1 > f.max_order) throw std::invalid_argument("function bundle lacks derivatives of order N+1");
  const mpfr_prec_t prec = ctx.working();
  const BigFloat sgn = sign_factor(chi.parity(), prec);

  BigComplex boundary = boundary_terms(chi, f, beta, N, prec) - boundary_terms(chi, f, alpha, N, prec);
  boundary *= sgn;

  Integral in = adaptive_integral(chi, f, N, alpha, beta, prec, q);
  BigComplex integral = in.value;
  integral *= BigFloat::from_rational(inv_factorial(static_cast<unsigned long>(N + 1)), prec) * sgn;
  if (N % 2) integral = -integral;
  BigFloat err = in.error * BigFloat::from_rational(inv_factorial(static_cast<unsigned long>(N + 1)), prec);

  EMResult r;
  r.total = boundary + integral;
  r.boundary_sum = std::move(boundary);
  r.remainder_integral = std::move(integral);
  r.remainder_error = std::move(err);
  r.quadrature_order = in.order;
  return r;
}

EMResult char_em_sum_to_infinity(const DirichletCharacter& chi, const SmoothFunctionBundle& f, const Rational& alpha,
                                 int N, const PrecisionContext& ctx, const QuadratureOptions& q) {
  ctx.validate();
  if (!chi.is_primitive()) throw std::domain_error("character " + chi.label() + " is not primitive");
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  const mpfr_prec_t prec = ctx.working();
  const long fchi = chi.modulus();
  const double target = -static_cast<double>(prec);

  // log2 bound on what is dropped when the range stops at beta: the boundary
  // terms at beta plus the integral beyond it.
  auto dropped = [&](double beta) {
    const double lb = std::log2(beta);
    double best = std::numeric_limits<double>::infinity();
    for (int A = 2; A <= 64; A *= 2) {
      // log2-sum of the individual bounds
      double acc = -std::numeric_limits<double>::infinity();
      auto add = [&acc](double l) { acc = std::max(acc, l) + std::log2(1 + std::exp2(-std::fabs(acc - l))); };
      for (int n = 0; n <= N + 1; ++n) {
        const double d = f.decay_bound(A, n);
        if (!std::isfinite(d)) return std::numeric_limits<double>::infinity();
        if (d == 0) continue;
        const int order = std::min(n + 1, N + 1);
        double l = log2_sup_periodic(order, fchi) - std::lgamma(order + 1.0) / std::log(2.0) + std::log2(d);
        l -= n <= N ? A * lb : (A - 1) * lb + std::log2(A - 1.0);
        add(l);
      }
      best = std::min(best, acc);
    }
    return best;
  };
  if (!(dropped(1e6) < std::numeric_limits<double>::infinity()))
    throw std::domain_error("function has no decay bound; infinite range impossible");

  long M = std::max<long>(1, to_long(floor_div(alpha / fchi)) + 1);
  while (dropped(static_cast<double>(M * fchi)) > target) {
    if (M > (1L << 40)) throw std::runtime_error("decay too slow for the requested precision");
    M *= 2;
  }
  long lo = M / 2, hi = M;
  while (hi - lo > 1) {
    const long mid = (lo + hi) / 2;
    if (Rational(mid * fchi) > alpha && dropped(static_cast<double>(mid * fchi)) <= target)
      hi = mid;
    else
      lo = mid;
  }
  const Rational beta(hi * fchi);

  const BigFloat sgn = sign_factor(chi.parity(), prec);
  BigComplex boundary = -boundary_terms(chi, f, alpha, N, prec);
  boundary *= sgn;
  Integral in = adaptive_integral(chi, f, N, alpha, beta, prec, q);
  BigComplex integral = in.value;
  integral *= BigFloat::from_rational(inv_factorial(static_cast<unsigned long>(N + 1)), prec) * sgn;
  if (N % 2) integral = -integral;

  EMResult r;
  r.total = boundary + integral;
  r.boundary_sum = std::move(boundary);
  r.remainder_integral = std::move(integral);
  r.remainder_error = in.error * BigFloat::from_rational(inv_factorial(static_cast<unsigned long>(N + 1)), prec) +
                      ldexp(BigFloat::from_long(1, prec), static_cast<long>(std::ceil(dropped(beta.get_d()))));
  r.quadrature_order = in.order;
  return r;
}

CycRat dashed_sum_exact(const DirichletCharacter& chi, const std::vector<Rational>& poly, const Rational& alpha,
                        const Rational& beta) {
  const CharPolynomial p = CharPolynomial::from_rationals(poly);
  CycRat s;
  Integer m = floor_div(alpha);
  if (Rational(m) < alpha) ++m;
  for (; Rational(m) <= beta; ++m) {
    const long ml = to_long(m);
    CycRat term = chi.value(ml) * p.evaluate(Rational(m));
    if (Rational(m) == alpha || Rational(m) == beta) term *= Rational(1, 2);
    s += term;
  }
  return s;
}

BigComplex dashed_sum(const DirichletCharacter& chi, const SmoothFunctionBundle& f, const Rational& alpha,
                      const Rational& beta, mpfr_prec_t prec) {
  BigComplex s(prec);
  Integer m = floor_div(alpha);
  if (Rational(m) < alpha) ++m;
  for (; Rational(m) <= beta; ++m) {
    const long ml = to_long(m);
    const CycRat c = chi.value(ml);
    if (c.is_zero()) continue;
    BigComplex term = c.embed(prec);
    BigFloat v = f.eval(0, BigFloat::from_mpz(m, prec));
    if (Rational(m) == alpha || Rational(m) == beta) v /= 2;
    term *= v;
    s += term;
  }
  return s;
}

std::vector<CycRat> tail_expansion_coeffs(const DirichletCharacter& chi, const std::vector<Rational>& taylor,
                                          const Rational& a) {
  if (chi.is_principal()) throw std::domain_error("the expansion needs a nonprincipal character");
  if (!chi.is_primitive()) throw std::domain_error("character " + chi.label() + " is not primitive");
  if (a < 0) throw std::domain_error("shift a must be nonnegative");
  const DirichletCharacter chibar = chi.conjugate();
  std::vector<CycRat> out;
  for (size_t n = 0; n < taylor.size(); ++n) {
    if (taylor[n] == 0) {
      out.emplace_back();
      continue;
    }
    const int k = static_cast<int>(n) + 1;
    const CycRat b = a == 0 ? gen_bernoulli_number(k, chibar) : gen_bernoulli_poly(k, chibar).evaluate(a);
    out.push_back(b * Rational(-taylor[n] / k));
  }
  return out;
}

bool binomial_expansion_check(int n, const Rational& a, const DirichletCharacter& chi) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const DirichletCharacter chibar = chi.conjugate();
  CycRat lhs;
  for (int j = 0; j <= n; ++j) {
    Rational c = Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) *
                 pow(a, static_cast<unsigned long>(n - j)) / (j + 1);
    if (j % 2) c = -c;
    lhs += gen_bernoulli_number(j + 1, chibar) * c;
  }
  Rational c(1, n + 1);
  if (n % 2) c = -c;
  const CycRat rhs = gen_bernoulli_poly(n + 1, chibar).evaluate(Rational(-a)) * c;
  return lhs == rhs;
}

}  // namespace ptheta
