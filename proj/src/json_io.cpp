#include "ptheta/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace ptheta {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing '") + key + "'");
  return j.at(key);
}

long integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) malformed(std::string("'") + key + "' must be an integer");
  return v.get<long>();
}

Rational rational_from(const Json& v) {
  if (!v.is_string()) malformed("rationals are encoded as strings");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    malformed(e.what());
  }
}

}  // namespace

Json cycrat_to_json(const CycRat& c) {
  Json terms = Json::array();
  for (const auto& [k, q] : c.terms()) terms.push_back(Json::array({k, format_rational(q)}));
  return Json{{"order", c.order()}, {"terms", std::move(terms)}};
}

CycRat cycrat_from_json(const Json& j) {
  const long d = integer_field(j, "order");
  if (d < 1) malformed("order must be positive");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("'terms' must be an array");
  std::vector<std::pair<long, Rational>> t;
  for (const auto& e : terms) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer()) malformed("terms are [k, \"p/q\"] pairs");
    t.emplace_back(e[0].get<long>(), rational_from(e[1]));
  }
  return CycRat::from_terms(static_cast<int>(d), t);
}

Json polynomial_to_json(const CharPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(cycrat_to_json(c));
  return Json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

CharPolynomial polynomial_from_json(const Json& j) {
  const long deg = integer_field(j, "degree");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || static_cast<long>(coeffs.size()) != deg + 1) malformed("coefficient count does not match degree");
  std::vector<CycRat> c;
  for (const auto& e : coeffs) c.push_back(cycrat_from_json(e));
  return CharPolynomial(std::move(c));
}

Json bigfloat_to_json(const BigFloat& x, int digits) { return x.to_string(digits); }

Json bigcomplex_to_json(const BigComplex& z, int digits) {
  return Json::array({bigfloat_to_json(z.re, digits), bigfloat_to_json(z.im, digits)});
}

Json series_to_json(const ExpansionSeries& s) {
  Json gammas = Json::array();
  for (const auto& g : s.gammas) gammas.push_back(cycrat_to_json(g));
  return Json{{"character", s.chi.label()},
              {"b", format_rational(s.b)},
              {"r", s.r},
              {"eps", s.eps},
              {"N", s.N},
              {"route", route_name(s.provenance)},
              {"gammas", std::move(gammas)}};
}

ExpansionSeries series_from_json(const Json& j) {
  ExpansionSeries s;
  const Json& label = field(j, "character");
  if (!label.is_string()) malformed("'character' must be a q.j string");
  try {
    s.chi = DirichletCharacter::parse(label.get<std::string>());
    const Json& route = field(j, "route");
    if (!route.is_string()) malformed("'route' must be a string");
    s.provenance = parse_route(route.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    malformed(e.what());
  }
  s.b = rational_from(field(j, "b"));
  s.r = static_cast<int>(integer_field(j, "r"));
  s.eps = static_cast<int>(integer_field(j, "eps"));
  s.N = static_cast<int>(integer_field(j, "N"));
  const Json& gammas = field(j, "gammas");
  if (!gammas.is_array() || static_cast<long>(gammas.size()) != s.N + 1) malformed("'gammas' must hold N + 1 entries");
  for (const auto& g : gammas) s.gammas.push_back(cycrat_from_json(g));
  return s;
}

Json theta_value_to_json(const ThetaValue& v, int digits) {
  return Json{{"value_re", bigfloat_to_json(v.value.re, digits)},
              {"value_im", bigfloat_to_json(v.value.im, digits)},
              {"tail_bound", bigfloat_to_json(v.tail_bound, 6)},
              {"terms_used", v.terms_used}};
}

Json verification_to_json(const VerificationReport& rep, int digits) {
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json rem = Json::array();
    for (const auto& r : row.remainder) rem.push_back(bigfloat_to_json(r, 12));
    rows.push_back(Json{{"theta", bigfloat_to_json(row.theta, 12)},
                        {"value", bigcomplex_to_json(row.value, digits)},
                        {"tail_bound", bigfloat_to_json(row.tail_bound, 6)},
                        {"remainders", std::move(rem)}});
  }
  Json fits = Json::array();
  for (const auto& f : rep.fits) {
    std::ostringstream slope;
    slope.precision(6);
    slope << f.slope;
    fits.push_back(Json{{"n", f.n},
                        {"slope", slope.str()},
                        {"threshold", f.threshold},
                        {"status", slope_status_name(f.status)}});
  }
  return Json{{"series", series_to_json(rep.series)},
              {"rows", std::move(rows)},
              {"fits", std::move(fits)},
              {"result", rep.pass ? "PASS" : "FAIL"}};
}

std::string verification_to_csv(const VerificationReport& rep, int digits) {
  std::ostringstream out;
  out << "theta,n,G_re,G_im,S_re,S_im,remainder\n";
  for (const auto& row : rep.rows)
    for (size_t n = 0; n < row.partial.size(); ++n)
      out << row.theta.to_string(12) << ',' << n << ',' << row.value.re.to_string(digits) << ','
          << row.value.im.to_string(digits) << ',' << row.partial[n].re.to_string(digits) << ','
          << row.partial[n].im.to_string(digits) << ',' << row.remainder[n].to_string(12) << '\n';
  return out.str();
}

Json identity_matrix_to_json(const IdentityMatrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.identities.size(); ++i) {
    Json cells = Json::object();
    for (size_t j = 0; j < m.characters.size(); ++j) {
      const auto& c = m.cells[i][j];
      Json cell{{"status", !c.applicable ? "n/a" : (c.pass() ? "PASS" : "FAIL")}, {"cases", c.cases}};
      if (!c.first_failure.empty()) cell["first_failure"] = c.first_failure;
      cells[m.characters[j]] = std::move(cell);
    }
    rows.push_back(Json{{"identity", m.identities[i]}, {"cells", std::move(cells)}});
  }
  return Json{{"max_n", m.max_n},
              {"max_f", m.max_f},
              {"characters", m.characters},
              {"matrix", std::move(rows)},
              {"total_cases", m.total_cases()},
              {"total_failures", m.total_failures()},
              {"result", m.pass() ? "PASS" : "FAIL"}};
}

}  // namespace ptheta
