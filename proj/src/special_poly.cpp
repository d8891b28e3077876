#include "ptheta/special_poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace ptheta {

namespace {

void require_primitive(const DirichletCharacter& chi) {
  if (!chi.is_primitive())
    throw std::domain_error("character " + chi.label() + " is not primitive (conductor " +
                            std::to_string(chi.conductor()) + ")");
}

void require_odd_conductor(const DirichletCharacter& chi) {
  require_primitive(chi);
  if (chi.conductor() % 2 == 0)
    throw std::domain_error("generalized Euler polynomials need an odd conductor; " + chi.label() +
                            " has conductor " + std::to_string(chi.conductor()));
}

// Append-only memo for sequences computed by recurrence.
class SequenceCache {
 public:
  template <class Next>
  Rational get(int n, Next next) {
    if (n < 0) throw std::invalid_argument("index must be nonnegative");
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(values_.size()) <= n) values_.push_back(next(values_));
    return values_[static_cast<size_t>(n)];
  }

 private:
  std::mutex mu_;
  std::vector<Rational> values_;
};

class CoefficientCache {
 public:
  template <class Build>
  const std::vector<Rational>& get(int n, Build build) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(n);
    if (it == map_.end()) it = map_.emplace(n, build(n)).first;
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<int, std::vector<Rational>> map_;
};

class GenNumberCache {
 public:
  template <class Build>
  CycRat get(const DirichletCharacter& chi, int n, Build build) {
    const auto key = std::make_pair(chi.label(), n);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    CycRat v = build();
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<std::string, int>, CycRat> map_;
};

Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Appell-type polynomial sum_k C(n,k) a_k x^{n-k}.
template <class Value>
std::vector<Value> appell(int n, const std::vector<Value>& a) {
  std::vector<Value> out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Value term = a[static_cast<size_t>(k)];
    term *= Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    out[static_cast<size_t>(n - k)] = term;
  }
  return out;
}

}  // namespace

Rational bernoulli_number(int n) {
  static SequenceCache cache;
  return cache.get(n, [](const std::vector<Rational>& prev) {
    const auto m = static_cast<unsigned long>(prev.size());
    if (m == 0) return Rational(1);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    Rational s = 0;
    for (unsigned long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * prev[k];
    return Rational(-s / Rational(static_cast<long>(m + 1)));
  });
}

Rational euler_number_at_zero(int n) {
  static SequenceCache cache;
  return cache.get(n, [](const std::vector<Rational>& prev) {
    const auto m = static_cast<unsigned long>(prev.size());
    if (m == 0) return Rational(1);
    // (e^t + 1) sum E_k(0) t^k/k! = 2  =>  2 E_m(0) + sum_{k<m} C(m,k) E_k(0) = 0
    Rational s = 0;
    for (unsigned long k = 0; k < m; ++k) s += Rational(binomial(m, k)) * prev[k];
    return Rational(-s / 2);
  });
}

const std::vector<Rational>& bernoulli_coefficients(int n) {
  static CoefficientCache cache;
  return cache.get(n, [](int m) {
    std::vector<Rational> b;
    for (int k = 0; k <= m; ++k) b.push_back(bernoulli_number(k));
    return appell(m, b);
  });
}

const std::vector<Rational>& euler_coefficients(int n) {
  static CoefficientCache cache;
  return cache.get(n, [](int m) {
    std::vector<Rational> e;
    for (int k = 0; k <= m; ++k) e.push_back(euler_number_at_zero(k));
    return appell(m, e);
  });
}

CharPolynomial bernoulli_poly(int n) { return CharPolynomial::from_rationals(bernoulli_coefficients(n)); }
CharPolynomial euler_poly(int n) { return CharPolynomial::from_rationals(euler_coefficients(n)); }

Rational bernoulli_value(int n, const Rational& x) { return horner(bernoulli_coefficients(n), x); }
Rational euler_value(int n, const Rational& x) { return horner(euler_coefficients(n), x); }

CycRat gen_bernoulli_number(int n, const DirichletCharacter& chi) {
  require_primitive(chi);
  static GenNumberCache cache;
  return cache.get(chi, n, [&] {
    const long f = chi.modulus();
    CycRat s;
    for (long a = 0; a < f; ++a) {
      CycRat c = chi.conj_value(a);
      if (c.is_zero()) continue;
      s += c * bernoulli_value(n, ratio(a, f));
    }
    // f^{n-1}
    Rational scale = n >= 1 ? Rational(pow(Rational(f), static_cast<unsigned long>(n - 1))) : ratio(1, f);
    return CycRat(s * scale);
  });
}

CycRat gen_euler_number(int n, const DirichletCharacter& chi) {
  require_odd_conductor(chi);
  static GenNumberCache cache;
  return cache.get(chi, n, [&] {
    const long f = chi.modulus();
    CycRat s;
    for (long a = 0; a < f; ++a) {
      CycRat c = chi.conj_value(a);
      if (c.is_zero()) continue;
      Rational e = euler_value(n, ratio(a, f));
      s += c * (a % 2 == 0 ? e : Rational(-e));
    }
    return CycRat(s * pow(Rational(f), static_cast<unsigned long>(n)));
  });
}

CharPolynomial gen_bernoulli_poly(int n, const DirichletCharacter& chi) {
  std::vector<CycRat> nums;
  for (int k = 0; k <= n; ++k) nums.push_back(gen_bernoulli_number(k, chi));
  return CharPolynomial(appell(n, nums));
}

CharPolynomial gen_euler_poly(int n, const DirichletCharacter& chi) {
  std::vector<CycRat> nums;
  for (int k = 0; k <= n; ++k) nums.push_back(gen_euler_number(k, chi));
  return CharPolynomial(appell(n, nums));
}

std::vector<CycRat> gf_taylor_oracle(const DirichletCharacter& chi, SpecialKind kind, int n_max) {
  if (kind == SpecialKind::bernoulli)
    require_primitive(chi);
  else
    require_odd_conductor(chi);
  const long f = chi.modulus();
  const auto len = static_cast<size_t>(n_max) + 1;

  // numerator A(t) and denominator D(t), both with the common factor t removed
  // in the Bernoulli case.
  std::vector<CycRat> num(len);
  std::vector<Rational> den(len);
  for (size_t k = 0; k < len; ++k) {
    CycRat s;
    for (long a = 0; a < f; ++a) {
      CycRat c = chi.conj_value(a);
      if (c.is_zero()) continue;
      Rational ak = pow(Rational(a), k);
      if (kind == SpecialKind::euler && a % 2 == 1) ak = -ak;
      s += c * ak;
    }
    Rational inv_fact(Integer(1), factorial(k));
    if (kind == SpecialKind::bernoulli) {
      num[k] = s * inv_fact;
      den[k] = pow(Rational(f), k + 1) / Rational(factorial(k + 1));
    } else {
      num[k] = s * Rational(2 * inv_fact);
      den[k] = k == 0 ? Rational(2) : Rational(pow(Rational(f), k) * inv_fact);
    }
  }

  std::vector<CycRat> quot(len);
  for (size_t k = 0; k < len; ++k) {
    CycRat acc = num[k];
    for (size_t i = 1; i <= k; ++i) acc -= quot[k - i] * den[i];
    quot[k] = acc * Rational(1 / den[0]);
  }
  for (size_t k = 0; k < len; ++k) quot[k] *= Rational(factorial(k));
  return quot;
}

PeriodicCharFunction::PeriodicCharFunction(SpecialKind kind, int n, DirichletCharacter chi)
    : kind_(kind), n_(n), chi_(std::move(chi)) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (kind_ == SpecialKind::bernoulli)
    require_primitive(chi_);
  else
    require_odd_conductor(chi_);
}

CycRat PeriodicCharFunction::operator()(const Rational& x) const {
  const long f = chi_.modulus();
  CycRat s;
  for (long m = 0; m < f; ++m) {
    CycRat c = chi_.conj_value(m);
    if (c.is_zero()) continue;
    Rational y = (Rational(m) + x) / Rational(f);
    Integer fl = floor_div(y);
    Rational u = y - Rational(fl);
    if (kind_ == SpecialKind::bernoulli) {
      s += c * bernoulli_value(n_, u);
    } else {
      Rational e = euler_value(n_, u);
      if (mpz_odd_p(fl.get_mpz_t())) e = -e;
      if (m % 2 == 1) e = -e;
      s += c * e;
    }
  }
  const Rational fr(f);
  if (kind_ == SpecialKind::bernoulli)
    return s * (n_ >= 1 ? pow(fr, static_cast<unsigned long>(n_ - 1)) : ratio(1, f));
  return s * pow(fr, static_cast<unsigned long>(n_));
}

BigComplex PeriodicCharFunction::operator()(const BigFloat& x) const {
  const long k = floor(x).to_long_floor();
  return piece(k).evaluate(x);
}

CharPolynomial PeriodicCharFunction::piece(long k) const {
  const long f = chi_.modulus();
  const CharPolynomial base = kind_ == SpecialKind::bernoulli ? bernoulli_poly(n_) : euler_poly(n_);
  const CharPolynomial scaled = base.scaled_argument(ratio(1, f));  // P(x / f)
  CharPolynomial out;
  for (long m = 0; m < f; ++m) {
    CycRat c = chi_.conj_value(m);
    if (c.is_zero()) continue;
    // floor((m + x)/f) is constant on [k, k+1)
    long s = (m + k) >= 0 ? (m + k) / f : -((-(m + k) + f - 1) / f);
    CycRat w = c;
    if (kind_ == SpecialKind::euler && ((s % 2 != 0) != (m % 2 != 0))) w = -w;
    out += scaled.shifted(Rational(m - f * s)) * w;
  }
  const Rational fr(f);
  if (kind_ == SpecialKind::bernoulli)
    return out * CycRat(n_ >= 1 ? pow(fr, static_cast<unsigned long>(n_ - 1)) : ratio(1, f));
  return out * CycRat(pow(fr, static_cast<unsigned long>(n_)));
}

bool shift_identity_check(int n, long l, const Rational& x, const DirichletCharacter& chi) {
  if (l < 1) throw std::invalid_argument("shift multiplier must be positive");
  const CharPolynomial b = gen_bernoulli_poly(n, chi);
  const long f = chi.modulus();
  const CycRat lhs = b.evaluate(Rational(x + l * f)) - b.evaluate(x);
  CycRat rhs;
  if (n >= 1) {
    for (long m = 1; m <= l * f; ++m) {
      CycRat c = chi.conj_value(m);
      if (c.is_zero()) continue;
      rhs += c * pow(Rational(Rational(m) + x), static_cast<unsigned long>(n - 1));
    }
    rhs *= Rational(n);
  }
  return lhs == rhs;
}

}  // namespace ptheta
