#include "ptheta/chars.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ptheta {

namespace {

long mod_pos(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long pow_mod(long base, long e, long m) {
  long result = 1 % m;
  base = mod_pos(base, m);
  while (e > 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return result;
}

long inverse_mod(long a, long m) {
  if (m == 1) return 0;
  long t = 0, new_t = 1, r = m, new_r = mod_pos(a, m);
  while (new_r != 0) {
    long quo = r / new_r;
    t = std::exchange(new_t, t - quo * new_t);
    r = std::exchange(new_r, r - quo * new_r);
  }
  return mod_pos(t, m);
}

bool is_primitive_root(long g, long p) {
  for (auto [l, unused] : factorize(p - 1))
    if (pow_mod(g, (p - 1) / l, p) == 1) return false;
  return true;
}

// Least primitive root mod p that stays primitive mod p^2 (hence mod every p^e).
long conrey_generator(long p) {
  for (long g = 2; g < p * p; ++g) {
    if (g % p == 0 || !is_primitive_root(g, p)) continue;
    if (pow_mod(g, p - 1, p * p) != 1) return g;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace

long euler_phi(long n) {
  long r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

DirichletCharacter DirichletCharacter::from_conrey(long q, long j) {
  if (q < 1) throw std::domain_error("character modulus must be positive");
  if (j < 1 || j > q || std::gcd(j, q) != 1)
    throw std::domain_error("Conrey index " + std::to_string(j) + " is not a unit in [1, " + std::to_string(q) + "]");

  const long phi = euler_phi(q);
  std::vector<long> num(static_cast<size_t>(q), 0);  // exponent numerators over phi

  for (auto [p, e] : factorize(q)) {
    long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e == 1) continue;
      if (e == 2) {
        const bool jb = j % 4 == 3;
        for (long n = 1; n < q; n += 2)
          if (jb && n % 4 == 3) num[static_cast<size_t>(n)] += phi / 2;
        continue;
      }
      // (Z/2^e)^* = {+-1} x <5>
      const long half = pe / 4;
      std::vector<long> log5(static_cast<size_t>(pe), -1);
      std::vector<long> sign(static_cast<size_t>(pe), 0);
      long x = 1;
      for (long a = 0; a < half; ++a) {
        log5[static_cast<size_t>(x)] = a;
        sign[static_cast<size_t>(x)] = 0;
        log5[static_cast<size_t>(pe - x)] = a;
        sign[static_cast<size_t>(pe - x)] = 1;
        x = x * 5 % pe;
      }
      const long jr = j % pe;
      const long jb = sign[static_cast<size_t>(jr)], ja = log5[static_cast<size_t>(jr)];
      for (long n = 1; n < q; n += 2) {
        const long nr = n % pe;
        const long nb = sign[static_cast<size_t>(nr)], na = log5[static_cast<size_t>(nr)];
        num[static_cast<size_t>(n)] += jb * nb * (phi / 2) + (ja * na % half) * (phi / half);
      }
      continue;
    }
    const long g = conrey_generator(p);
    const long phi_pe = pe / p * (p - 1);
    std::vector<long> dlog(static_cast<size_t>(pe), -1);
    long x = 1;
    for (long k = 0; k < phi_pe; ++k) {
      dlog[static_cast<size_t>(x)] = k;
      x = x * g % pe;
    }
    const long lj = dlog[static_cast<size_t>(j % pe)];
    for (long n = 1; n < q; ++n) {
      const long ln = dlog[static_cast<size_t>(n % pe)];
      if (ln < 0) continue;
      num[static_cast<size_t>(n)] += (lj * ln % phi_pe) * (phi / phi_pe);
    }
  }

  DirichletCharacter chi;
  chi.q_ = q;
  chi.j_ = j;
  long g = phi;
  for (long n = 0; n < q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    num[static_cast<size_t>(n)] %= phi;
    g = std::gcd(g, num[static_cast<size_t>(n)]);
  }
  chi.order_ = phi / g;
  chi.exps_.assign(static_cast<size_t>(q), -1);
  for (long n = 0; n < q; ++n)
    if (std::gcd(n, q) == 1) chi.exps_[static_cast<size_t>(n)] = num[static_cast<size_t>(n)] / g;
  chi.finish();
  return chi;
}

void DirichletCharacter::finish() {
  const long minus_one = exps_[static_cast<size_t>(mod_pos(-1, q_))];
  parity_ = (minus_one == 0) ? 1 : -1;

  conductor_ = q_;
  for (long f = 1; f < q_; ++f) {
    if (q_ % f != 0) continue;
    bool trivial = true;
    for (long n = 1; n < q_ && trivial; n += f)
      if (exps_[static_cast<size_t>(n)] > 0) trivial = false;
    if (trivial) {
      conductor_ = f;
      break;
    }
  }
}

DirichletCharacter DirichletCharacter::parse(std::string_view label) {
  const auto dot = label.find('.');
  long q = 0, j = 0;
  auto parse_part = [&](std::string_view s, long& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
  };
  if (dot == std::string_view::npos || !parse_part(label.substr(0, dot), q) || !parse_part(label.substr(dot + 1), j))
    throw std::invalid_argument("character label must look like q.j, got '" + std::string(label) + "'");
  return from_conrey(q, j);
}

std::string DirichletCharacter::label() const { return std::to_string(q_) + "." + std::to_string(j_); }

std::optional<long> DirichletCharacter::exponent(long n) const {
  const long k = exps_[static_cast<size_t>(mod_pos(n, q_))];
  if (k < 0) return std::nullopt;
  return k;
}

CycRat DirichletCharacter::value(long n) const {
  auto k = exponent(n);
  if (!k) return CycRat();
  if (order_ == 1) return CycRat(1);
  return CycRat::root_of_unity(static_cast<int>(order_), *k);
}

CycRat DirichletCharacter::conj_value(long n) const {
  auto k = exponent(n);
  if (!k) return CycRat();
  if (order_ == 1) return CycRat(1);
  return CycRat::root_of_unity(static_cast<int>(order_), -*k);
}

DirichletCharacter DirichletCharacter::conjugate() const {
  DirichletCharacter c = *this;
  c.j_ = q_ == 1 ? 1 : inverse_mod(j_, q_);
  for (auto& k : c.exps_)
    if (k > 0) k = order_ - k;
  return c;
}

DirichletCharacter DirichletCharacter::primitive() const {
  if (is_primitive()) return *this;
  // The inducing Conrey index is not j mod f in general (27.10 is not induced
  // from 9.1), so match value tables directly.
  const long f = conductor_;
  for (long jf = 1; jf <= f; ++jf) {
    if (std::gcd(jf, f) != 1) continue;
    DirichletCharacter cand = from_conrey(f, jf);
    if (cand.order_ != order_) continue;
    bool same = true;
    for (long n = 1; n < q_ && same; ++n)
      if (exps_[static_cast<size_t>(n)] >= 0 && cand.exps_[static_cast<size_t>(n % f)] != exps_[static_cast<size_t>(n)])
        same = false;
    if (same) return cand;
  }
  throw std::logic_error("no primitive character induces " + label());
}

std::vector<DirichletCharacter> enumerate_characters(long q) {
  if (q < 1) throw std::domain_error("character modulus must be positive");
  std::vector<DirichletCharacter> out;
  for (long j = 1; j <= q; ++j)
    if (std::gcd(j, q) == 1) out.push_back(DirichletCharacter::from_conrey(q, j));
  return out;
}

std::vector<DirichletCharacter> primitive_nonprincipal_characters(long q) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : enumerate_characters(q))
    if (chi.is_primitive() && !chi.is_principal()) out.push_back(std::move(chi));
  return out;
}

std::pair<long, DirichletCharacter> conductor_and_primitivize(const DirichletCharacter& chi) {
  return {chi.conductor(), chi.primitive()};
}

}  // namespace ptheta
