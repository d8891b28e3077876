// theta: command-line front end for the character theta-sum library.
//
// Every subcommand echoes its resolved configuration before the results.
// Exit status: 0 success or PASS, 1 FAIL, 2 usage or input error.

#include "ptheta/expansion.hpp"
#include "ptheta/identities.hpp"
#include "ptheta/json_io.hpp"
#include "ptheta/lseries.hpp"
#include "ptheta/theta_eval.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using namespace ptheta;

namespace {

enum class Format { json, csv, pretty };

struct RunConfig {
  std::string subcommand;
  std::string character = "3.2";
  std::string b = "1";
  int r = 1;
  int eps = 2;
  int N = 4;
  std::string theta = "0.01";
  std::string grid;
  std::string route;
  long prec = 256;
  long modulus = 0;
  int n = 0;
  bool numeric = false;
  int max_n = 20;
  long max_f = 9;
  bool json = false, csv = false, pretty = false;

  Format format() const { return csv ? Format::csv : pretty ? Format::pretty : Format::json; }
  PrecisionContext ctx() const { return {prec, 32}; }
  int digits() const { return static_cast<int>(std::ceil(static_cast<double>(prec) * 0.30103)); }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_name(Format f) { return f == Format::csv ? "csv" : f == Format::pretty ? "pretty" : "json"; }

// Only the fields the subcommand actually reads are echoed.
Json echo_config(const RunConfig& c) {
  Json j{{"subcommand", c.subcommand}};
  const auto& s = c.subcommand;
  if (s == "chars") j["modulus"] = c.modulus;
  if (s == "coeffs" || s == "eval" || s == "verify" || s == "lvalue") {
    j["character"] = c.character;
    j["b"] = c.b;
    j["r"] = c.r;
    j["eps"] = c.eps;
  }
  if (s == "coeffs" || s == "verify") j["N"] = c.N;
  if (s == "coeffs") j["route"] = c.route.empty() ? std::string("default") : c.route;
  if (s == "eval") j["theta"] = c.theta;
  if (s == "verify") j["grid"] = c.grid.empty() ? std::string("1e-2,10^-2.5,1e-3") : c.grid;
  if (s == "lvalue") {
    j["n"] = c.n;
    j["numeric"] = c.numeric;
  }
  if (s == "identities") {
    j["max_n"] = c.max_n;
    j["max_f"] = c.max_f;
  }
  if (s == "eval" || s == "verify" || (s == "lvalue" && c.numeric)) j["prec"] = c.prec;
  j["format"] = format_name(c.format());
  return j;
}

void print_config_comment(const RunConfig& c) { std::cout << "# config " << echo_config(c).dump() << '\n'; }

DirichletCharacter character(const RunConfig& c) { return DirichletCharacter::parse(c.character); }

Rational b_value(const RunConfig& c) {
  const Rational b = parse_rational(c.b);
  if (b < 0) throw UsageError("--b must be nonnegative");
  return b;
}

// Accepts decimal tokens ("1e-3", "0.01") and powers of ten ("10^-2.5").
BigFloat parse_theta(const std::string& tok, mpfr_prec_t prec) {
  if (tok.rfind("10^", 0) == 0) {
    const BigFloat e = BigFloat::from_string(tok.substr(3), prec);
    return exp(e * log(BigFloat::from_long(10, prec)));
  }
  return BigFloat::from_string(tok, prec);
}

std::vector<BigFloat> parse_grid(const std::string& list, mpfr_prec_t prec) {
  std::vector<BigFloat> g;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw UsageError("empty entry in --grid");
    g.push_back(parse_theta(tok, prec));
  }
  return g;
}

int cmd_chars(const RunConfig& c) {
  const auto chars = enumerate_characters(c.modulus);
  if (c.format() == Format::json) {
    Json list = Json::array();
    for (const auto& ch : chars)
      list.push_back(Json{{"label", ch.label()},
                          {"order", ch.order()},
                          {"conductor", ch.conductor()},
                          {"parity", ch.parity() == 1 ? "even" : "odd"},
                          {"primitive", ch.is_primitive()}});
    std::cout << Json{{"config", echo_config(c)}, {"characters", std::move(list)}}.dump(2) << '\n';
    return 0;
  }
  print_config_comment(c);
  if (c.format() == Format::csv) {
    std::cout << "label,order,conductor,parity,primitive\n";
    for (const auto& ch : chars)
      std::cout << ch.label() << ',' << ch.order() << ',' << ch.conductor() << ',' << (ch.parity() == 1 ? "even" : "odd")
                << ',' << (ch.is_primitive() ? "yes" : "no") << '\n';
    return 0;
  }
  std::cout << std::left << std::setw(8) << "label" << std::setw(7) << "order" << std::setw(11) << "conductor"
            << std::setw(8) << "parity" << "primitive\n";
  for (const auto& ch : chars)
    std::cout << std::setw(8) << ch.label() << std::setw(7) << ch.order() << std::setw(11) << ch.conductor()
              << std::setw(8) << (ch.parity() == 1 ? "even" : "odd") << (ch.is_primitive() ? "yes" : "no") << '\n';
  return 0;
}

int cmd_coeffs(const RunConfig& c) {
  const Route route = c.route.empty() ? (c.eps == 2 ? Route::bernoulli : Route::euler) : parse_route(c.route);
  const auto s = expansion_coefficients(character(c), b_value(c), c.r, c.eps, c.N, route);
  if (c.format() == Format::json) {
    std::cout << Json{{"config", echo_config(c)}, {"series", series_to_json(s)}}.dump(2) << '\n';
    return 0;
  }
  print_config_comment(c);
  if (c.format() == Format::csv) std::cout << "n,gamma\n";
  for (size_t n = 0; n < s.gammas.size(); ++n) {
    if (c.format() == Format::csv)
      std::cout << n << ",\"" << s.gammas[n].to_string() << "\"\n";
    else
      std::cout << "gamma_" << n << " = " << s.gammas[n].to_string() << '\n';
  }
  return 0;
}

int cmd_eval(const RunConfig& c) {
  const PrecisionContext ctx = c.ctx();
  const mpfr_prec_t wp = ctx.working();
  ThetaParams p{parse_theta(c.theta, wp), BigFloat::from_rational(b_value(c), wp), c.r, c.eps};
  const ThetaValue v = eval_G_eps_chi(character(c), p, ctx);
  if (c.format() == Format::json) {
    Json out{{"config", echo_config(c)}};
    const Json body = theta_value_to_json(v, c.digits());
    for (const auto& [k, val] : body.items()) out[k] = val;
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  print_config_comment(c);
  if (c.format() == Format::csv) {
    std::cout << "value_re,value_im,tail_bound,terms_used\n"
              << v.value.re.to_string(c.digits()) << ',' << v.value.im.to_string(c.digits()) << ','
              << v.tail_bound.to_string(6) << ',' << v.terms_used << '\n';
    return 0;
  }
  std::cout << "value      = " << v.value.re.to_string(c.digits()) << " + " << v.value.im.to_string(c.digits()) << " i\n"
            << "tail bound = " << v.tail_bound.to_string(6) << "\nterms used = " << v.terms_used << '\n';
  return 0;
}

int cmd_verify(const RunConfig& c) {
  const PrecisionContext ctx = c.ctx();
  const auto grid = c.grid.empty() ? default_theta_grid(ctx.working()) : parse_grid(c.grid, ctx.working());
  const auto rep = verify_expansion(character(c), b_value(c), c.r, c.eps, c.N, grid, ctx);
  const int code = rep.pass ? 0 : 1;
  if (c.format() == Format::json) {
    Json out{{"config", echo_config(c)}};
    const Json body = verification_to_json(rep, c.digits());
    for (const auto& [k, val] : body.items()) out[k] = val;
    std::cout << out.dump(2) << '\n';
    return code;
  }
  print_config_comment(c);
  if (c.format() == Format::csv) {
    std::cout << verification_to_csv(rep, c.digits());
    return code;
  }
  for (const auto& f : rep.fits)
    std::cout << "n=" << f.n << "  slope=" << std::fixed << std::setprecision(4) << f.slope << "  threshold=" << f.threshold
              << "  " << slope_status_name(f.status) << '\n';
  std::cout << (rep.pass ? "PASS" : "FAIL") << '\n';
  return code;
}

int cmd_lvalue(const RunConfig& c) {
  const auto chi = character(c);
  const Rational b = b_value(c);
  if (c.n < 0) throw UsageError("--n must be nonnegative");
  const bool strict = b > 0 && b < c.r;
  const CycRat exact = strict ? special_value(c.r, c.eps, c.n, b, chi) : special_value_extended(c.r, c.eps, c.n, b, chi);
  Json out{{"config", echo_config(c)}, {"mode", strict ? "strict" : "extended"}, {"exact", cycrat_to_json(exact)}};
  std::optional<BigFloat> disc;
  std::optional<BigComplex> num;
  if (c.numeric) {
    const PrecisionContext ctx = c.ctx();
    LSeriesSpec spec{c.r, c.eps, b, chi, BigFloat::from_long(-static_cast<long>(c.r) * c.n, ctx.working())};
    num = lseries_numeric(spec, ctx);
    disc = (*num - exact.embed(ctx.working())).abs();
    out["numeric"] = bigcomplex_to_json(*num, c.digits());
    out["discrepancy"] = bigfloat_to_json(*disc, 6);
  }
  if (c.format() == Format::json) {
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  print_config_comment(c);
  if (c.format() == Format::csv) {
    std::cout << "mode,exact" << (c.numeric ? ",numeric_re,numeric_im,discrepancy" : "") << '\n'
              << out["mode"].get<std::string>() << ",\"" << exact.to_string() << '"';
    if (c.numeric)
      std::cout << ',' << num->re.to_string(c.digits()) << ',' << num->im.to_string(c.digits()) << ','
                << disc->to_string(6);
    std::cout << '\n';
    return 0;
  }
  std::cout << "L(" << -c.r * c.n << ") = " << exact.to_string() << "  [" << out["mode"].get<std::string>() << "]\n";
  if (c.numeric)
    std::cout << "numeric     = " << num->re.to_string(c.digits()) << " + " << num->im.to_string(c.digits()) << " i\n"
              << "discrepancy = " << disc->to_string(6) << '\n';
  return 0;
}

int cmd_identities(const RunConfig& c) {
  const auto m = run_identity_suite(c.max_n, c.max_f);
  const int code = m.pass() ? 0 : 1;
  if (c.format() == Format::json) {
    std::cout << Json{{"config", echo_config(c)}, {"identities", identity_matrix_to_json(m)}}.dump(2) << '\n';
    return code;
  }
  print_config_comment(c);
  auto status = [](const IdentityCell& cell) { return !cell.applicable ? "n/a" : cell.pass() ? "PASS" : "FAIL"; };
  if (c.format() == Format::csv) {
    std::cout << "identity";
    for (const auto& ch : m.characters) std::cout << ',' << ch;
    std::cout << '\n';
    for (size_t i = 0; i < m.identities.size(); ++i) {
      std::cout << m.identities[i];
      for (const auto& cell : m.cells[i]) std::cout << ',' << status(cell);
      std::cout << '\n';
    }
    return code;
  }
  std::cout << std::left << std::setw(15) << "identity";
  for (const auto& ch : m.characters) std::cout << std::setw(7) << ch;
  std::cout << '\n';
  for (size_t i = 0; i < m.identities.size(); ++i) {
    std::cout << std::setw(15) << m.identities[i];
    for (const auto& cell : m.cells[i]) std::cout << std::setw(7) << status(cell);
    std::cout << '\n';
  }
  for (size_t i = 0; i < m.identities.size(); ++i)
    for (size_t j = 0; j < m.characters.size(); ++j)
      if (!m.cells[i][j].pass())
        std::cout << "first failure " << m.identities[i] << " " << m.characters[j] << ": " << m.cells[i][j].first_failure
                  << '\n';
  std::cout << m.total_cases() << " cases, " << m.total_failures() << " failures: " << (m.pass() ? "PASS" : "FAIL") << '\n';
  return code;
}

void add_format_flags(CLI::App* sub, RunConfig& c) {
  auto* j = sub->add_flag("--json", c.json, "JSON output (default)");
  auto* v = sub->add_flag("--csv", c.csv, "CSV output");
  auto* p = sub->add_flag("--pretty", c.pretty, "human-readable output");
  j->excludes(v)->excludes(p);
  v->excludes(p);
}

void add_char_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--char", c.character, "character label q.j (Conrey)")->capture_default_str();
  sub->add_option("--b", c.b, "shift b as p/q or a terminating decimal")->capture_default_str();
  sub->add_option("--r", c.r, "exponent r >= 1")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--eps", c.eps, "1 alternating, 2 plain")->capture_default_str()->check(CLI::IsMember({1, 2}));
}

void add_prec_flag(CLI::App* sub, RunConfig& c) {
  sub->add_option("--prec", c.prec, "precision in bits (default THETA_ASYM_PREC or 256)")
      ->capture_default_str()
      ->check(CLI::Range(24L, 1L << 20));
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  c.prec = default_precision_bits();

  CLI::App app{"Asymptotic expansions of character theta sums"};
  app.require_subcommand(1);

  auto* chars = app.add_subcommand("chars", "Dirichlet characters");
  auto* chars_list = chars->add_subcommand("list", "list characters of a modulus");
  chars->require_subcommand(1);
  chars_list->add_option("--modulus", c.modulus, "modulus q")->required()->check(CLI::PositiveNumber);
  add_format_flags(chars_list, c);

  auto* coeffs = app.add_subcommand("coeffs", "exact expansion coefficients gamma_0..gamma_N");
  add_char_flags(coeffs, c);
  coeffs->add_option("-N", c.N, "highest order")->capture_default_str()->check(CLI::NonNegativeNumber);
  coeffs->add_option("--route", c.route, "bernoulli, euler or closed-form");
  add_format_flags(coeffs, c);

  auto* eval = app.add_subcommand("eval", "evaluate the theta sum");
  add_char_flags(eval, c);
  eval->add_option("--theta", c.theta, "theta > 0 (decimal or 10^e)")->capture_default_str();
  add_prec_flag(eval, c);
  add_format_flags(eval, c);

  auto* verify = app.add_subcommand("verify", "fit remainder slopes on a theta grid");
  add_char_flags(verify, c);
  verify->add_option("-N", c.N, "highest order")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--grid", c.grid, "comma list, decreasing, e.g. 1e-2,10^-2.5,1e-3");
  add_prec_flag(verify, c);
  add_format_flags(verify, c);

  auto* lvalue = app.add_subcommand("lvalue", "L-series value at s = -r n");
  add_char_flags(lvalue, c);
  lvalue->add_option("--n", c.n, "index n >= 0")->capture_default_str();
  lvalue->add_flag("--numeric", c.numeric, "also evaluate through Hurwitz zeta");
  add_prec_flag(lvalue, c);
  add_format_flags(lvalue, c);

  auto* idents = app.add_subcommand("identities", "exact identity suite");
  idents->add_option("--max-n", c.max_n, "largest index")->capture_default_str()->check(CLI::NonNegativeNumber);
  idents->add_option("--max-f", c.max_f, "largest conductor")->capture_default_str()->check(CLI::Range(3L, 60L));
  add_format_flags(idents, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (chars->parsed()) {
      c.subcommand = "chars";
      return cmd_chars(c);
    }
    if (coeffs->parsed()) {
      c.subcommand = "coeffs";
      return cmd_coeffs(c);
    }
    if (eval->parsed()) {
      c.subcommand = "eval";
      return cmd_eval(c);
    }
    if (verify->parsed()) {
      c.subcommand = "verify";
      return cmd_verify(c);
    }
    if (lvalue->parsed()) {
      c.subcommand = "lvalue";
      return cmd_lvalue(c);
    }
    c.subcommand = "identities";
    return cmd_identities(c);
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
