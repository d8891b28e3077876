#pragma once

#include <string>
#include <vector>

namespace ptheta {

struct IdentityCell {
  long cases = 0;
  long failures = 0;
  bool applicable = true;
  /// Description of the first failing case, empty when none failed.
  std::string first_failure;

  bool pass() const { return failures == 0; }
};

/// Exact identity checks over every primitive nonprincipal character with
/// conductor 3..max_f. Rows are identities, columns characters.
struct IdentityMatrix {
  int max_n = 0;
  long max_f = 0;
  std::vector<std::string> identities;
  std::vector<std::string> characters;
  std::vector<std::vector<IdentityCell>> cells;  // [identity][character]

  long total_cases() const;
  long total_failures() const;
  bool pass() const { return total_failures() == 0; }
};

/// Runs, for all n <= max_n:
///   reflection    B_{n,chi}(-x) = (-1)^n chi(-1) B_{n,chi}(x)
///   derivative    B'_{n,chi} = n B_{n-1,chi}
///   parity        vanishing of B_{n,chi} for n >= 2 of the wrong parity
///   gf-route      generalized numbers against the generating-function division
///                 (Euler numbers for odd f only)
///   shift         shift_identity_check for l = 1..3
///   be-bridge     2^{n+1} chibar(2) B_{n+1,chi}(x/2) - B_{n+1,chi}(x) = -((n+1)/2) E_{n,chi}(x), odd f
///   binomial      binomial_expansion_check at a in {0, 1/3, 1/2, 2}
///   g1-routes     Euler, plain-sum and (r = 1) closed-form coefficients agree, odd f
///   orthogonality sum_a chi(a) = 0 and sum_a |chi(a)|^2 = phi(f)
/// Throws std::invalid_argument for max_n < 0 or max_f < 3.
IdentityMatrix run_identity_suite(int max_n, long max_f);

}  // namespace ptheta
