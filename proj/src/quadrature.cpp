#include "ptheta/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ptheta {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, const BigFloat& x, BigFloat& p, BigFloat& dp) {
  const mpfr_prec_t prec = x.prec();
  BigFloat p0 = BigFloat::from_long(1, prec);
  BigFloat p1 = x;
  for (int k = 2; k <= n; ++k) {
    BigFloat p2 = (x * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  p = p1;
  // (x^2 - 1) P_n' = n (x P_n - P_{n-1})
  dp = (x * p1 - p0) * n / (x * x - 1);
}

GaussLegendreRule build(int order, mpfr_prec_t prec) {
  const mpfr_prec_t work = prec + 32;
  GaussLegendreRule rule;
  rule.nodes.reserve(static_cast<size_t>(order));
  rule.weights.reserve(static_cast<size_t>(order));
  const double pi = 3.14159265358979323846;
  const long threshold = -(static_cast<long>(work) - 8);
  for (int i = 0; i < order; ++i) {
    // Tricomi initial guess, then Newton to full precision.
    BigFloat x = BigFloat::from_double(std::cos(pi * (i + 0.75) / (order + 0.5)), work);
    BigFloat p(work), dp(work);
    for (int iter = 0; iter < 200; ++iter) {
      legendre(order, x, p, dp);
      BigFloat dx = p / dp;
      x -= dx;
      if (dx.is_zero() || dx.log2_abs() < threshold) break;
    }
    legendre(order, x, p, dp);
    BigFloat w = BigFloat::from_long(2, work) / ((BigFloat::from_long(1, work) - x * x) * dp * dp);
    rule.nodes.push_back(x.rounded(prec));
    rule.weights.push_back(w.rounded(prec));
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order, mpfr_prec_t prec) {
  if (order < 1) throw std::invalid_argument("quadrature order must be positive");
  static std::mutex mu;
  static std::map<std::pair<int, mpfr_prec_t>, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{order, prec}];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(build(order, prec));
  return *slot;
}

}  // namespace ptheta
