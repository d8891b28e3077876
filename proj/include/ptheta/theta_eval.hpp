#pragma once

#include "ptheta/bigfloat.hpp"
#include "ptheta/chars.hpp"

namespace ptheta {

/// Parameters of r sum_n (+-1)^n chi(n) exp(-(n + b/r)^r theta).
struct ThetaParams {
  BigFloat theta;
  BigFloat b;
  int r = 1;
  /// 1 selects the alternating sign (-1)^n, 2 the plain sum.
  int eps = 2;

  /// Throws std::invalid_argument unless theta > 0, b >= 0, r >= 1, eps in {1, 2}.
  void validate() const;
};

struct ThetaValue {
  BigComplex value;
  /// Bound on the absolute size of the discarded terms n > last index.
  BigFloat tail_bound;
  /// Number of indices n = 0..terms_used-1 that were summed.
  long terms_used = 0;
};

struct ThetaOptions {
  /// Multiplies the planned number of terms (>= 1.0); used to probe truncation.
  double cutoff_scale = 1.0;
};

/// r sum_{n>=0} (-1)^{eps n} chi(n) exp(-(n + b/r)^r theta) to about 2^{-bits}
/// absolute plus relative error.
///
/// Terms are produced by a multiplicative recurrence on forward differences of
/// (n + b/r)^r and accumulated per residue class of n at extended precision;
/// the character weights are applied once at the end. The cutoff n* is the
/// least index whose geometric tail bound r t_{n*} / (1 - t_{n*+1}/t_{n*}) is
/// below 2^{-(bits + guard)}.
ThetaValue eval_G_eps_chi(const DirichletCharacter& chi, const ThetaParams& p, const PrecisionContext& ctx,
                          const ThetaOptions& opts = {});

/// eps = 1 form (alternating), regardless of p.eps.
ThetaValue eval_G1(const DirichletCharacter& chi, const ThetaParams& p, const PrecisionContext& ctx,
                   const ThetaOptions& opts = {});
/// eps = 2 form, regardless of p.eps.
ThetaValue eval_G2(const DirichletCharacter& chi, const ThetaParams& p, const PrecisionContext& ctx,
                   const ThetaOptions& opts = {});
/// r sum_n (-1)^{eps n} exp(-(n + b/r)^r theta), no character.
ThetaValue eval_G_plain(const ThetaParams& p, const PrecisionContext& ctx, const ThetaOptions& opts = {});

struct RecombinationResult {
  BigComplex direct;
  BigComplex recombined;
  BigFloat difference;
  BigFloat tolerance;
  bool pass = false;
};

/// Splits n = a + f m (f the conductor) and compares the direct sum with
///   sum_{a<f} (-1)^{eps a} chi(a) G_{eps'}(theta f^r, (a r + b)/f, r),
/// where eps' = eps except that eps = 1 with even f gives eps' = 2 (the sign
/// (-1)^{f m} is then trivial). Tolerance 2^{-bits+10} (1 + |direct|).
/// Requires chi primitive.
RecombinationResult residue_class_recombination(const DirichletCharacter& chi, const ThetaParams& p,
                                                const PrecisionContext& ctx);
bool residue_class_recombination_check(const DirichletCharacter& chi, const ThetaParams& p,
                                       const PrecisionContext& ctx);

/// The same split with the inner arguments (theta f, eps) taken literally,
/// i.e. without the f^r scaling and the parity adjustment. Exposed so tests can
/// show where the literal form stops matching.
RecombinationResult residue_class_recombination_literal(const DirichletCharacter& chi, const ThetaParams& p,
                                                        const PrecisionContext& ctx);

}  // namespace ptheta
