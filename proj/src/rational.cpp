#include "ptheta/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ptheta {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer d{std::string(den)};
    if (d == 0) bad(text);
    out = Rational(Integer(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      bad(text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Integer whole = ip.empty() ? Integer(0) : Integer(std::string(ip));
    Integer part = fp.empty() ? Integer(0) : Integer(std::string(fp));
    out = Rational(whole * scale + part, scale);
  } else {
    if (!all_digits(s)) bad(text);
    out = Rational(Integer(std::string(s)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer floor_div(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) { return q - Rational(floor_div(q)); }

Rational pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

Rational ratio(long n, long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational r(n);
  r /= d;
  return r;
}

}  // namespace ptheta
