#include "ptheta/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptheta {

struct CyclotomicTable {
  int d = 1;
  int phi = 1;
  std::vector<Integer> poly;
  // reduce[k] = z^k mod Phi_d for 0 <= k < d, as phi coefficients.
  std::vector<std::vector<Integer>> reduce;
};

namespace {

std::vector<Integer> compute_cyclotomic(int d);

std::vector<Integer> cached_cyclotomic(int d) {
  static std::recursive_mutex mu;
  static std::map<int, std::vector<Integer>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  auto poly = compute_cyclotomic(d);
  cache.emplace(d, poly);
  return poly;
}

// x^d - 1 divided by Phi_e for every proper divisor e of d.
std::vector<Integer> compute_cyclotomic(int d) {
  std::vector<Integer> num(static_cast<size_t>(d) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<size_t>(d)] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto den = cached_cyclotomic(e);
    const size_t dd = den.size() - 1;
    const size_t nd = num.size() - 1;
    std::vector<Integer> quot(nd - dd + 1, Integer(0));
    for (size_t i = nd + 1; i-- > dd;) {
      Integer c = num[i];  // den is monic
      quot[i - dd] = c;
      if (c != 0)
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

const CyclotomicTable* table_for(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return it->second.get();

  auto t = std::make_unique<CyclotomicTable>();
  t->d = d;
  t->poly = cached_cyclotomic(d);
  t->phi = static_cast<int>(t->poly.size()) - 1;
  const size_t phi = static_cast<size_t>(t->phi);
  std::vector<Integer> row(phi + 1, Integer(0));
  row[0] = 1;
  t->reduce.reserve(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    t->reduce.emplace_back(row.begin(), row.begin() + static_cast<long>(phi));
    for (size_t i = phi; i > 0; --i) row[i] = row[i - 1];
    row[0] = 0;
    if (Integer c = row[phi]; c != 0)
      for (size_t i = 0; i <= phi; ++i) row[i] -= c * t->poly[i];
  }
  auto* raw = t.get();
  cache.emplace(d, std::move(t));
  return raw;
}

long mod_pos(long k, long d) {
  long m = k % d;
  return m < 0 ? m + d : m;
}

// Group-ring vector (length d) -> canonical coefficients.
std::vector<Rational> reduce_group_ring(const CyclotomicTable& t, const std::vector<Rational>& g) {
  std::vector<Rational> out(static_cast<size_t>(t.phi), Rational(0));
  for (int k = 0; k < t.d; ++k) {
    const Rational& c = g[static_cast<size_t>(k)];
    if (c == 0) continue;
    const auto& row = t.reduce[static_cast<size_t>(k)];
    for (int i = 0; i < t.phi; ++i)
      if (row[static_cast<size_t>(i)] != 0) out[static_cast<size_t>(i)] += c * row[static_cast<size_t>(i)];
  }
  return out;
}

}  // namespace

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

std::vector<Integer> cyclotomic_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic order must be positive");
  return cached_cyclotomic(d);
}

CycRat::CycRat() : order_(1), table_(table_for(1)), coeffs_{Rational(0)} {}

CycRat::CycRat(const Rational& q) : order_(1), table_(table_for(1)), coeffs_{q} {}

CycRat::CycRat(long v) : CycRat(Rational(v)) {}

CycRat::CycRat(int order, std::vector<Rational> coeffs)
    : order_(order), table_(table_for(order)), coeffs_(std::move(coeffs)) {}

CycRat CycRat::root_of_unity(int d, long k) {
  return from_terms(d, {{k, Rational(1)}});
}

CycRat CycRat::from_terms(int d, const std::vector<std::pair<long, Rational>>& terms) {
  const CyclotomicTable* t = table_for(d);
  std::vector<Rational> g(static_cast<size_t>(d), Rational(0));
  for (const auto& [k, c] : terms) g[static_cast<size_t>(mod_pos(k, d))] += c;
  return CycRat(d, reduce_group_ring(*t, g));
}

std::vector<std::pair<int, Rational>> CycRat::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(static_cast<int>(i), coeffs_[i]);
  return out;
}

bool CycRat::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycRat::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CycRat::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + to_string());
  return coeffs_[0];
}

CycRat CycRat::lifted(int multiple_of_order) const {
  if (multiple_of_order == order_) return *this;
  if (multiple_of_order <= 0 || multiple_of_order % order_ != 0)
    throw std::invalid_argument("lift target must be a multiple of the order");
  const long step = multiple_of_order / order_;
  const CyclotomicTable* t = table_for(multiple_of_order);
  std::vector<Rational> g(static_cast<size_t>(multiple_of_order), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) g[static_cast<size_t>(static_cast<long>(i) * step % multiple_of_order)] += coeffs_[i];
  return CycRat(multiple_of_order, reduce_group_ring(*t, g));
}

CycRat CycRat::conj() const {
  std::vector<Rational> g(static_cast<size_t>(order_), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) g[static_cast<size_t>(mod_pos(-static_cast<long>(i), order_))] += coeffs_[i];
  return CycRat(order_, reduce_group_ring(*table_, g));
}

BigComplex CycRat::embed(mpfr_prec_t prec) const {
  const mpfr_prec_t wp = prec + 16 + static_cast<mpfr_prec_t>(coeffs_.size());
  BigComplex acc(wp);
  BigFloat two_pi_over_d = BigFloat::pi(wp) * 2 / static_cast<long>(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    BigFloat c = BigFloat::from_rational(coeffs_[i], wp);
    if (i == 0) {
      acc.re += c;
      continue;
    }
    BigFloat angle = two_pi_over_d * static_cast<long>(i);
    acc.re += c * cos(angle);
    acc.im += c * sin(angle);
  }
  return {acc.re.rounded(prec), acc.im.rounded(prec)};
}

void CycRat::align_with(CycRat& other) {
  if (order_ == other.order_) return;
  const int l = static_cast<int>(lcm_long(order_, other.order_));
  *this = lifted(l);
  other = other.lifted(l);
}

CycRat& CycRat::operator+=(const CycRat& o) {
  if (o.order_ == order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CycRat b = o;
  align_with(b);
  return *this += b;
}

CycRat& CycRat::operator-=(const CycRat& o) {
  if (o.order_ == order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  CycRat b = o;
  align_with(b);
  return *this -= b;
}

CycRat& CycRat::operator*=(const CycRat& o) {
  *this = *this * o;
  return *this;
}

CycRat& CycRat::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CycRat operator*(const CycRat& a, const CycRat& b) {
  if (a.order_ == 1) return b * a.coeffs_[0];
  if (b.order_ == 1) return a * b.coeffs_[0];
  if (a.order_ != b.order_) {
    CycRat x = a, y = b;
    x.align_with(y);
    return x * y;
  }
  const int d = a.order_;
  std::vector<Rational> g(static_cast<size_t>(d), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      g[(i + j) % static_cast<size_t>(d)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycRat(d, reduce_group_ring(*a.table_, g));
}

CycRat operator-(const CycRat& a) {
  CycRat r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycRat& a, const CycRat& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  CycRat x = a, y = b;
  x.align_with(y);
  return x.coeffs_ == y.coeffs_;
}

std::string CycRat::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z^" << k;
    }
  }
  if (first) os << "0";
  if (order_ > 2) os << " (z^" << order_ << "=1)";
  return os.str();
}

}  // namespace ptheta
