#include "ptheta/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ptheta {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

void PrecisionContext::validate() const {
  if (bits < 24) throw std::invalid_argument("precision must be at least 24 bits");
  if (guard < 0) throw std::invalid_argument("guard bits must be nonnegative");
}

long default_precision_bits() {
  if (const char* env = std::getenv("THETA_ASYM_PREC")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 24) return v;
  }
  return 256;
}

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, kRnd);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_long(long v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, v, kRnd);
  return r;
}

BigFloat BigFloat::from_double(double v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, v, kRnd);
  return r;
}

BigFloat BigFloat::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), kRnd);
  return r;
}

BigFloat BigFloat::from_rational(const mpq_class& v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), kRnd);
  return r;
}

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
  BigFloat r(prec);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, kRnd);
  if (s.empty() || end == s.c_str() || *end != '\0')
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, kRnd);
  return r;
}

BigFloat BigFloat::ln2(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_log2(r.v_, kRnd);
  return r;
}

BigFloat BigFloat::rounded(mpfr_prec_t prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

long BigFloat::to_long_floor() const { return mpfr_get_si(v_, MPFR_RNDD); }

double BigFloat::log2_abs() const {
  if (is_zero()) return -INFINITY;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, kRnd);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

std::string BigFloat::to_string(int digits) const {
  if (digits <= 0) digits = static_cast<int>(std::ceil(static_cast<double>(prec()) * 0.30103)) + 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), kRnd);
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), kRnd);
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), kRnd);
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), kRnd);
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}
BigFloat& BigFloat::operator/=(long o) {
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}
BigFloat operator+(const BigFloat& a, long b) {
  BigFloat r(a.prec());
  mpfr_add_si(r.v_, a.v_, b, kRnd);
  return r;
}
BigFloat operator-(const BigFloat& a, long b) {
  BigFloat r(a.prec());
  mpfr_sub_si(r.v_, a.v_, b, kRnd);
  return r;
}
BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r(a.prec());
  mpfr_mul_si(r.v_, a.v_, b, kRnd);
  return r;
}
BigFloat operator/(const BigFloat& a, long b) {
  BigFloat r(a.prec());
  mpfr_div_si(r.v_, a.v_, b, kRnd);
  return r;
}
BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_neg(r.v_, a.v_, kRnd);
  return r;
}

#define PTHETA_UNARY(name, fn)                 \
  BigFloat name(const BigFloat& x) {           \
    BigFloat r(x.prec());                      \
    fn(r.get(), x.get(), kRnd);                \
    return r;                                  \
  }

PTHETA_UNARY(abs, mpfr_abs)
PTHETA_UNARY(exp, mpfr_exp)
PTHETA_UNARY(expm1, mpfr_expm1)
PTHETA_UNARY(log, mpfr_log)
PTHETA_UNARY(sqrt, mpfr_sqrt)
PTHETA_UNARY(cos, mpfr_cos)
PTHETA_UNARY(sin, mpfr_sin)

#undef PTHETA_UNARY

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(max_prec(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.prec());
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

BigFloat floor(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_floor(r.get(), x.get());
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.prec());
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex BigComplex::from_real(BigFloat r) {
  BigFloat zero(r.prec());
  return {std::move(r), std::move(zero)};
}

BigFloat BigComplex::abs() const {
  BigFloat r(prec());
  mpfr_hypot(r.get(), re.get(), im.get(), kRnd);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat nr = re * o.re - im * o.im;
  BigFloat ni = re * o.im + im * o.re;
  re = std::move(nr);
  im = std::move(ni);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& o) {
  re *= o;
  im *= o;
  return *this;
}

}  // namespace ptheta
