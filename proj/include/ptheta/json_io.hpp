#pragma once

#include "ptheta/expansion.hpp"
#include "ptheta/identities.hpp"
#include "ptheta/polynomial.hpp"
#include "ptheta/theta_eval.hpp"

#include "json.hpp"

#include <string>

namespace ptheta {

using Json = nlohmann::ordered_json;

/// {"order": d, "terms": [[k, "p/q"], ...]} with ascending k.
Json cycrat_to_json(const CycRat& c);
/// Inverse of cycrat_to_json; throws std::invalid_argument on malformed input.
CycRat cycrat_from_json(const Json& j);

/// {"degree": n, "coeffs": [cycrat, ...]}, constant term first.
Json polynomial_to_json(const CharPolynomial& p);
CharPolynomial polynomial_from_json(const Json& j);

/// Scientific-notation string with `digits` significant digits (0: from the precision).
Json bigfloat_to_json(const BigFloat& x, int digits = 0);
Json bigcomplex_to_json(const BigComplex& z, int digits = 0);

Json series_to_json(const ExpansionSeries& s);
/// Throws std::invalid_argument on malformed input.
ExpansionSeries series_from_json(const Json& j);

Json theta_value_to_json(const ThetaValue& v, int digits = 0);
Json verification_to_json(const VerificationReport& rep, int digits = 0);
/// Header plus one row per (theta, n): theta,n,G_re,G_im,S_re,S_im,remainder.
std::string verification_to_csv(const VerificationReport& rep, int digits = 0);
Json identity_matrix_to_json(const IdentityMatrix& m);

}  // namespace ptheta
