#pragma once

#include "ptheta/cyclo.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ptheta {

/// Dirichlet character mod q with exact values, labelled by its Conrey index.
///
/// Values are stored as exponents k_n modulo the character order d, meaning
/// chi(n) = e^{2 pi i k_n / d}; entries for gcd(n, q) > 1 are empty. Instances
/// are immutable.
class DirichletCharacter {
 public:
  /// The Conrey character chi_q(j, .). Throws std::domain_error when q < 1,
  /// j is outside [1, q] or gcd(j, q) > 1.
  static DirichletCharacter from_conrey(long q, long j);
  /// Parses a "q.j" label.
  static DirichletCharacter parse(std::string_view label);

  long modulus() const { return q_; }
  long order() const { return order_; }
  long conductor() const { return conductor_; }
  long conrey_index() const { return j_; }
  std::string label() const;

  /// Exponent of chi(n) mod order(), or nullopt when gcd(n, q) > 1.
  std::optional<long> exponent(long n) const;
  /// chi(n) as an exact root of unity (or zero); periodic in n with period q.
  CycRat value(long n) const;
  /// conj(chi(n)).
  CycRat conj_value(long n) const;

  /// chi(-1), either +1 or -1.
  int parity() const { return parity_; }
  bool is_principal() const { return order_ == 1; }
  bool is_primitive() const { return conductor_ == q_; }

  DirichletCharacter conjugate() const;
  /// The primitive character mod conductor() inducing this one.
  DirichletCharacter primitive() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.q_ == b.q_ && a.order_ == b.order_ && a.exps_ == b.exps_;
  }

 private:
  DirichletCharacter() = default;
  void finish();

  long q_ = 1;
  long j_ = 1;
  long order_ = 1;
  long conductor_ = 1;
  int parity_ = 1;
  std::vector<long> exps_;  // -1 marks gcd(n, q) > 1
};

/// All phi(q) characters mod q in ascending Conrey index. Throws
/// std::domain_error for q < 1.
std::vector<DirichletCharacter> enumerate_characters(long q);

/// Characters mod q that are primitive and nonprincipal, ascending Conrey index.
std::vector<DirichletCharacter> primitive_nonprincipal_characters(long q);

/// (f, chi*) with f the conductor and chi* the primitive character mod f.
std::pair<long, DirichletCharacter> conductor_and_primitivize(const DirichletCharacter& chi);

long euler_phi(long n);
/// Prime factorisation as (p, e) pairs, ascending p.
std::vector<std::pair<long, int>> factorize(long n);

}  // namespace ptheta
