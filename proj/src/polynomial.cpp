#include "ptheta/polynomial.hpp"

#include <sstream>

namespace ptheta {

CharPolynomial::CharPolynomial(std::vector<CycRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CharPolynomial CharPolynomial::constant(const CycRat& c) { return CharPolynomial({c}); }

CharPolynomial CharPolynomial::monomial(const CycRat& c, int power) {
  std::vector<CycRat> v(static_cast<size_t>(power) + 1);
  v.back() = c;
  return CharPolynomial(std::move(v));
}

CharPolynomial CharPolynomial::from_rationals(const std::vector<Rational>& coeffs) {
  std::vector<CycRat> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return CharPolynomial(std::move(v));
}

void CharPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CycRat CharPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return CycRat();
  return coeffs_[static_cast<size_t>(i)];
}

CycRat CharPolynomial::evaluate(const Rational& x) const {
  CycRat acc;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

CycRat CharPolynomial::evaluate(const CycRat& x) const {
  CycRat acc;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x;
    acc += coeffs_[i];
  }
  return acc;
}

BigComplex CharPolynomial::evaluate(const BigFloat& x) const {
  const mpfr_prec_t prec = x.prec();
  BigComplex acc(prec);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i].embed(prec);
  }
  return acc;
}

CharPolynomial CharPolynomial::derivative() const {
  std::vector<CycRat> v;
  for (size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return CharPolynomial(std::move(v));
}

CharPolynomial CharPolynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<CycRat> v(coeffs_.size() + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = coeffs_[i] * Rational(1, static_cast<long>(i + 1));
  return CharPolynomial(std::move(v));
}

CharPolynomial CharPolynomial::scaled_argument(const Rational& c) const {
  std::vector<CycRat> v = coeffs_;
  Rational p = 1;
  for (auto& a : v) {
    a *= p;
    p *= c;
  }
  return CharPolynomial(std::move(v));
}

CharPolynomial CharPolynomial::shifted(const Rational& c) const {
  // Horner in polynomial form: acc = acc * (x + c) + a_i.
  std::vector<CycRat> acc;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    std::vector<CycRat> next(acc.size() + 1);
    for (size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      next[k] += acc[k] * c;
    }
    next[0] += coeffs_[i];
    acc = std::move(next);
  }
  return CharPolynomial(std::move(acc));
}

CharPolynomial CharPolynomial::conj() const {
  std::vector<CycRat> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.conj());
  return CharPolynomial(std::move(v));
}

CharPolynomial& CharPolynomial::operator+=(const CharPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

CharPolynomial& CharPolynomial::operator-=(const CharPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

CharPolynomial& CharPolynomial::operator*=(const CycRat& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

CharPolynomial operator*(const CharPolynomial& a, const CharPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<CycRat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return CharPolynomial(std::move(v));
}

CharPolynomial operator-(const CharPolynomial& a) {
  CharPolynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CharPolynomial& a, const CharPolynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

std::string CharPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].to_string() << ")";
    if (i > 0) os << "*x^" << i;
  }
  return os.str();
}

}  // namespace ptheta
