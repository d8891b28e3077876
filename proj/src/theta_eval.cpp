#include "ptheta/theta_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ptheta {

namespace {

// log2 of the bound r t_n / (1 - t_{n+1}/t_n) on sum_{m >= n} t_m, with
// t_m = exp(-(m + c)^r theta). The ratios t_{m+1}/t_m decrease in m because
// (x + c)^r is convex for r >= 1, so the tail is dominated by a geometric series.
double log2_tail(double n, double c, int r, double theta) {
  const double x = n + c;
  const double gap = std::pow(x + 1, r) - std::pow(x, r);
  const double log2_t = -std::pow(x, r) * theta / std::log(2.0);
  const double one_minus_rho = -std::expm1(-theta * gap);
  return std::log2(static_cast<double>(r)) + log2_t - std::log2(one_minus_rho);
}

long plan_cutoff(double c, int r, double theta, long bits, double scale) {
  const double target = -static_cast<double>(bits);
  long hi = 1;
  while (log2_tail(static_cast<double>(hi), c, r, theta) > target) {
    if (hi > (1L << 50)) throw std::runtime_error("theta too small: series cutoff out of range");
    hi *= 2;
  }
  long lo = hi / 2;
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (log2_tail(static_cast<double>(mid), c, r, theta) > target)
      lo = mid;
    else
      hi = mid;
  }
  const double scaled = std::ceil(static_cast<double>(hi) * std::max(1.0, scale));
  return std::max(1L, static_cast<long>(scaled));
}

// exp(-theta * Delta^k (x + c)^r at x = n) for k = 0..r.
std::vector<BigFloat> sync_state(long n, const BigFloat& c, int r, const BigFloat& theta, mpfr_prec_t prec,
                                 mpfr_prec_t diff_prec) {
  std::vector<BigFloat> vals;
  for (int j = 0; j <= r; ++j) vals.push_back(pow(BigFloat::from_long(n + j, diff_prec) + c.rounded(diff_prec), r));
  std::vector<BigFloat> out;
  const BigFloat th = theta.rounded(diff_prec);
  for (int k = 0; k <= r; ++k) {
    BigFloat d(diff_prec);
    for (int j = 0; j <= k; ++j) {
      const Integer bin = binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j));
      BigFloat term = vals[static_cast<size_t>(j)] * BigFloat::from_mpz(bin, diff_prec);
      if ((k - j) % 2)
        d -= term;
      else
        d += term;
    }
    out.push_back(exp(-(d * th)).rounded(prec));
  }
  return out;
}

ThetaValue weighted_sum(const std::vector<BigComplex>& weights, const ThetaParams& p, const PrecisionContext& ctx,
                        const ThetaOptions& opts) {
  p.validate();
  ctx.validate();
  const int r = p.r;
  const BigFloat c = p.b / r;
  const double cd = c.to_double(), thd = p.theta.to_double();
  if (!(thd > 0)) throw std::invalid_argument("theta underflows double range");
  const long n_star = plan_cutoff(cd, r, thd, ctx.working(), opts.cutoff_scale);

  const auto extra = static_cast<mpfr_prec_t>(std::ceil(std::log2(static_cast<double>(n_star) + 1)));
  const mpfr_prec_t prec = ctx.working() + extra + 8 + 4 * r;
  const mpfr_prec_t diff_prec = prec + r * static_cast<mpfr_prec_t>(std::ceil(std::log2(n_star + cd + 2))) + 8;
  const long period = static_cast<long>(weights.size());
  std::vector<bool> active(static_cast<size_t>(period));
  for (long a = 0; a < period; ++a) active[static_cast<size_t>(a)] = !weights[static_cast<size_t>(a)].abs().is_zero();

  std::vector<BigFloat> sums(static_cast<size_t>(period), BigFloat(prec));
  const long resync = r <= 3 ? 64 : 16;
  std::vector<BigFloat> state;
  for (long n = 0; n < n_star; ++n) {
    if (n % resync == 0) state = sync_state(n, c, r, p.theta, prec, diff_prec);
    const long a = n % period;
    if (active[static_cast<size_t>(a)]) sums[static_cast<size_t>(a)] += state[0];
    for (int k = 0; k < r; ++k) state[static_cast<size_t>(k)] *= state[static_cast<size_t>(k) + 1];
  }

  BigComplex total(prec);
  for (long a = 0; a < period; ++a) {
    if (!active[static_cast<size_t>(a)]) continue;
    BigComplex w = weights[static_cast<size_t>(a)];
    w *= sums[static_cast<size_t>(a)];
    total += w;
  }
  total *= BigFloat::from_long(r, prec);

  ThetaValue out;
  out.value = BigComplex(total.re.rounded(ctx.working()), total.im.rounded(ctx.working()));
  const mpfr_prec_t bp = 64;
  const BigFloat x = BigFloat::from_long(n_star, bp) + c.rounded(bp);
  const BigFloat th = p.theta.rounded(bp);
  const BigFloat gap = pow(x + 1, r) - pow(x, r);
  out.tail_bound = exp(-(pow(x, r) * th)) * r / (-expm1(-(gap * th)));
  out.terms_used = n_star;
  return out;
}

std::vector<BigComplex> character_weights(const DirichletCharacter& chi, int eps, mpfr_prec_t prec) {
  const long q = chi.modulus();
  const long period = eps == 1 ? lcm_long(2, q) : q;
  std::vector<BigComplex> w;
  for (long a = 0; a < period; ++a) {
    BigComplex v = chi.value(a).embed(prec);
    if (eps == 1 && a % 2) v = -v;
    w.push_back(std::move(v));
  }
  return w;
}

ThetaParams with_eps(const ThetaParams& p, int eps) {
  ThetaParams q = p;
  q.eps = eps;
  return q;
}

RecombinationResult recombine(const DirichletCharacter& chi, const ThetaParams& p, const PrecisionContext& ctx,
                              bool literal) {
  if (!chi.is_primitive()) throw std::domain_error("character " + chi.label() + " is not primitive");
  p.validate();
  const long f = chi.modulus();
  const mpfr_prec_t prec = ctx.working();
  RecombinationResult res;
  res.direct = eval_G_eps_chi(chi, p, ctx).value;

  ThetaParams inner = p;
  inner.theta = literal ? p.theta * f : p.theta * pow(BigFloat::from_long(f, prec), static_cast<long>(p.r));
  inner.eps = (!literal && p.eps == 1 && f % 2 == 0) ? 2 : p.eps;
  BigComplex sum(prec);
  for (long a = 0; a < f; ++a) {
    const CycRat c = chi.value(a);
    if (c.is_zero()) continue;
    inner.b = (BigFloat::from_long(a * p.r, prec) + p.b) / f;
    BigComplex term = c.embed(prec);
    if (p.eps == 1 && a % 2) term = -term;
    term *= eval_G_plain(inner, ctx).value.re;
    sum += term;
  }
  res.recombined = std::move(sum);
  res.difference = (res.direct - res.recombined).abs();
  res.tolerance = ldexp(BigFloat::from_long(1, prec), -ctx.bits + 10) * (res.direct.abs() + 1);
  res.pass = res.difference <= res.tolerance;
  return res;
}

}  // namespace

void ThetaParams::validate() const {
  if (!(theta.sign() > 0) || !theta.is_finite()) throw std::invalid_argument("theta must be positive");
  if (b.sign() < 0 || !b.is_finite()) throw std::invalid_argument("b must be nonnegative");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (eps != 1 && eps != 2) throw std::invalid_argument("eps must be 1 or 2");
}

ThetaValue eval_G_eps_chi(const DirichletCharacter& chi, const ThetaParams& p, const PrecisionContext& ctx,
                          const ThetaOptions& opts) {
  p.validate();
  return weighted_sum(character_weights(chi, p.eps, ctx.working() + 16), p, ctx, opts);
}

ThetaValue eval_G1(const DirichletCharacter& chi, const ThetaParams& p, const PrecisionContext& ctx,
                   const ThetaOptions& opts) {
  return eval_G_eps_chi(chi, with_eps(p, 1), ctx, opts);
}

ThetaValue eval_G2(const DirichletCharacter& chi, const ThetaParams& p, const PrecisionContext& ctx,
                   const ThetaOptions& opts) {
  return eval_G_eps_chi(chi, with_eps(p, 2), ctx, opts);
}

ThetaValue eval_G_plain(const ThetaParams& p, const PrecisionContext& ctx, const ThetaOptions& opts) {
  return eval_G_eps_chi(DirichletCharacter::from_conrey(1, 1), p, ctx, opts);
}

RecombinationResult residue_class_recombination(const DirichletCharacter& chi, const ThetaParams& p,
                                                const PrecisionContext& ctx) {
  return recombine(chi, p, ctx, false);
}

bool residue_class_recombination_check(const DirichletCharacter& chi, const ThetaParams& p,
                                       const PrecisionContext& ctx) {
  return residue_class_recombination(chi, p, ctx).pass;
}

RecombinationResult residue_class_recombination_literal(const DirichletCharacter& chi, const ThetaParams& p,
                                                        const PrecisionContext& ctx) {
  return recombine(chi, p, ctx, true);
}

}  // namespace ptheta
