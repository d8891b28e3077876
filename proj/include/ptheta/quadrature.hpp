#pragma once

#include "ptheta/bigfloat.hpp"

#include <vector>

namespace ptheta {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
};

/// Rule with `order` points at `prec` bits, computed by Newton iteration on
/// the Legendre recurrence. Cached per (order, prec); the returned reference
/// stays valid for the life of the process.
const GaussLegendreRule& gauss_legendre(int order, mpfr_prec_t prec);

}  // namespace ptheta
