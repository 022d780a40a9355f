#include "cli.hpp"

#include "lowlying/chebyshev.hpp"
#include "lowlying/constants.hpp"
#include "lowlying/explicit_formula.hpp"
#include "lowlying/petersson.hpp"
#include "lowlying/synthetic_form.hpp"
#include "lowlying/test_function.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <functional>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace lowlying::cli {

namespace {

using Json = nlohmann::ordered_json;

// A usage problem found after parsing (exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) { return Json(x).dump(); }

std::string rational_string(const Rational& q) { return q.get_str(); }

// Decimal or fraction text to an exact rational: "0.45" is 9/20, not the
// nearest double.
Rational parse_rational(const std::string& text) {
  static const std::regex fraction(R"(^[+-]?[0-9]+/[0-9]+$)");
  static const std::regex decimal(R"(^([+-]?)([0-9]*)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]{1,4}))?$)");
  std::smatch m;
  if (std::regex_match(text, fraction)) {
    Rational q(text, 10);
    if (sgn(q.get_den()) == 0) throw UsageError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  }
  if (std::regex_match(text, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    const std::string digits = m[2].str() + m[3].str();
    Rational q{Integer(digits, 10)};
    long exponent = (m[4].matched ? std::stol(m[4].str()) : 0) - static_cast<long>(m[3].length());
    Integer ten = 1;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    if (exponent >= 0) q *= ten;
    else q /= ten;
    if (m[1] == "-") q = -q;
    q.canonicalize();
    return q;
  }
  throw UsageError("cannot parse '" + text + "' as a decimal number or fraction p/q");
}

struct Globals {
  unsigned threads = 1;
  std::string output = "json";
};

Json base_config(const std::string& command, const Globals& g) {
  return Json{{"command", command}, {"threads", g.threads}, {"output", g.output}};
}

void require_json(const Globals& g, const std::string& command) {
  if (g.output != "json") throw UsageError(command + " is not tabular; only --output json is available");
}

std::string emit(const Json& doc) { return doc.dump(2) + "\n"; }

// ---- identities ----------------------------------------------------------

struct IdentityOptions {
  long kmax = 8;
  long miller_kmax = 40;
  long lin_max = 60;
  long ortho_max = 30;
  long linearize_max = 6;
};

struct IdentityCheck {
  std::string name;
  std::string range;
  long cases = 0;
  long failed = 0;
};

CliResult run_identities(const IdentityOptions& o, const Globals& g) {
  Json failures = Json::array();
  std::vector<IdentityCheck> checks;

  auto run_check = [&](const std::string& name, const std::string& range,
                       const std::function<void(const std::function<void(const std::string&, const std::string&)>&)>&
                           body) {
    IdentityCheck c{name, range};
    body([&](const std::string& label, const std::string& residual) {
      ++c.cases;
      if (!residual.empty()) {
        ++c.failed;
        failures.push_back(Json{{"check", name}, {"case", label}, {"residual", residual}});
      }
    });
    checks.push_back(c);
  };
  auto poly_residual = [](const ExactPoly& p) { return p.is_zero() ? std::string() : p.to_string(); };
  auto rational_residual = [](const Rational& q) { return sgn(q) == 0 ? std::string() : q.get_str(); };

  run_check("monomial_expansion", "0 <= l <= " + std::to_string(o.lin_max), [&](auto record) {
    for (long l = 0; l <= o.lin_max; ++l) {
      record("l=" + std::to_string(l), poly_residual(monomial_expansion(l) - cheb_poly(l)));
    }
  });
  run_check("orthonormality", "0 <= i, j <= " + std::to_string(o.ortho_max), [&](auto record) {
    std::vector<ExactPoly> x;
    for (long i = 0; i <= o.ortho_max; ++i) x.push_back(cheb_poly(i));
    for (long i = 0; i <= o.ortho_max; ++i) {
      for (long j = 0; j <= o.ortho_max; ++j) {
        const Rational d = inner_product(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]) -
                           Rational(i == j ? 1 : 0);
        record("i=" + std::to_string(i) + ",j=" + std::to_string(j), rational_residual(d));
      }
    }
  });
  run_check("linearization", "0 <= w, r <= " + std::to_string(o.linearize_max), [&](auto record) {
    for (long w = 0; w <= o.linearize_max; ++w) {
      for (long r = 0; r <= o.linearize_max; ++r) {
        const ExactPoly d = linearize_power(w, r).to_poly() - cheb_poly(r).pow(static_cast<unsigned>(w));
        record("w=" + std::to_string(w) + ",r=" + std::to_string(r), poly_residual(d));
      }
    }
  });
  run_check("S3", "1 <= n, r <= " + std::to_string(o.kmax), [&](auto record) {
    for (long n = 1; n <= o.kmax; ++n) {
      for (long r = 1; r <= o.kmax; ++r) {
        record("n=" + std::to_string(n) + ",r=" + std::to_string(r), poly_residual(verify_S3(n, r)));
      }
    }
  });
  run_check("pair_chain", "1 <= k0 <= " + std::to_string(o.kmax), [&](auto record) {
    for (long k0 = 1; k0 <= o.kmax; ++k0) record("k0=" + std::to_string(k0), poly_residual(pair_chain_identity(k0)));
  });
  run_check("odd", "1 <= K <= " + std::to_string(o.kmax), [&](auto record) {
    for (long K = 1; K <= o.kmax; ++K) record("K=" + std::to_string(K), poly_residual(odd_identity(K)));
  });
  run_check("vanishing_chain_sum", "2 <= k0 <= " + std::to_string(o.kmax), [&](auto record) {
    for (long k0 = 2; k0 <= o.kmax; ++k0) {
      record("k0=" + std::to_string(k0), rational_residual(vanishing_chain_sum(k0)));
    }
  });
  run_check("miller", "1 <= K <= " + std::to_string(o.miller_kmax), [&](auto record) {
    for (long K = 1; K <= o.miller_kmax; ++K) record("K=" + std::to_string(K), poly_residual(miller_identity_check(K)));
  });

  const int code = failures.empty() ? 0 : 2;
  if (g.output == "csv") {
    std::ostringstream out;
    out << "check,range,cases,failures\n";
    for (const auto& c : checks) out << c.name << ",\"" << c.range << "\"," << c.cases << ',' << c.failed << '\n';
    return {code, out.str(), ""};
  }

  Json config = base_config("identities", g);
  config["kmax"] = o.kmax;
  config["miller_kmax"] = o.miller_kmax;
  config["lin_max"] = o.lin_max;
  config["ortho_max"] = o.ortho_max;
  config["linearize_max"] = o.linearize_max;
  Json rows = Json::array();
  for (const auto& c : checks) {
    rows.push_back(Json{{"name", c.name}, {"range", c.range}, {"cases", c.cases}, {"failures", c.failed}});
  }
  const Json doc{{"suite", "identities"}, {"config", config}, {"checks", rows}, {"failures", failures}};
  return {code, emit(doc), ""};
}

// ---- constants and predict -----------------------------------------------

struct ConstantsOptions {
  long r = 1;
  long kappa = 12;
  std::uint64_t cutoff = ConstantCutoffs{}.c_pnt;
  std::uint64_t c_cutoff = ConstantCutoffs{}.c_sym;
};

Json constants_json(const ConstantsBundle& b) {
  return Json{
      {"r", b.r},
      {"kappa", b.kappa},
      {"c_pnt",
       {{"value", b.c_pnt.value},
        {"uncertainty", b.c_pnt.uncertainty},
        {"uncertainty_kind", "empirical: |value(cutoff) - value(reference_cutoff)|"},
        {"cutoff", b.c_pnt.cutoff},
        {"reference_cutoff", b.c_pnt.reference_cutoff}}},
      {"c",
       {{"value", b.c_sym.value},
        {"tail_bound", b.c_sym.tail_bound},
        {"tail_bound_kind", "rigorous"},
        {"cutoff", b.c_sym.cutoff}}},
      {"c_gamma", b.c_gamma},
      {"c_infty", b.c_infty},
      {"nu_max", rational_string(b.nu_max)},
      {"nu_max_value", b.nu_max.get_d()},
      {"theta0", "7/64"},
      {"provenance", "computed by this tool; no external reference values"},
  };
}

ConstantCutoffs cutoffs_of(const ConstantsOptions& o) {
  if (o.cutoff < 2 || o.c_cutoff < 2) throw UsageError("--cutoff and --c-cutoff must be >= 2");
  return {o.cutoff, o.c_cutoff};
}

CliResult run_constants(const ConstantsOptions& o, const Globals& g) {
  require_json(g, "constants");
  const ConstantsBundle b = compute_constants(o.r, o.kappa, cutoffs_of(o), g.threads);
  Json config = base_config("constants", g);
  config["r"] = o.r;
  config["kappa"] = o.kappa;
  config["cutoff"] = o.cutoff;
  config["c_cutoff"] = o.c_cutoff;
  Json doc{{"config", config}};
  const Json body = constants_json(b);
  for (const auto& [key, v] : body.items()) doc[key] = v;
  return {0, emit(doc), ""};
}

struct PredictOptions {
  ConstantsOptions constants;
  std::uint64_t q = 0;
  std::string nu;
  std::string phi = "fejer";
};

CliResult run_predict(const PredictOptions& o, const Globals& g) {
  require_json(g, "predict");
  const Rational nu = parse_rational(o.nu);
  if (sgn(nu) <= 0) throw UsageError("--nu must be positive");
  if (!is_prime(o.q)) throw UsageError("--q must be prime");
  const ConstantsBundle b = compute_constants(o.constants.r, o.constants.kappa, cutoffs_of(o.constants), g.threads);
  const ExpansionReport rep = theorem_b_expansion(o.constants.r, o.constants.kappa, o.q, TestFunction::fejer(nu),
                                                  PrimeConstants{b.c_pnt.value, b.c_sym.value});

  Json config = base_config("predict", g);
  config["r"] = o.constants.r;
  config["kappa"] = o.constants.kappa;
  config["q"] = o.q;
  config["nu"] = rational_string(nu);
  config["phi"] = o.phi;
  config["cutoff"] = o.constants.cutoff;
  config["c_cutoff"] = o.constants.c_cutoff;

  Json warnings = Json::array();
  if (!rep.admissible) warnings.push_back("nu >= nu_max: outside the hypothesis of the prediction; evaluated anyway");

  const Json doc{
      {"config", config},
      {"r", rep.r},
      {"kappa", rep.kappa},
      {"q", rep.q},
      {"main_term", rep.main_term},
      {"lower_coefficient", rep.lower_coefficient},
      {"lower_coefficient_alt", rep.lower_coefficient_alt},
      {"lower_term", rep.lower_term},
      {"prediction", rep.main_term + rep.lower_term},
      {"scale", rep.scale},
      {"nu", rational_string(rep.nu)},
      {"nu_max", rational_string(rep.nu_max)},
      {"admissible", rep.admissible},
      {"breakdown",
       {{"phi_hat_0", rep.breakdown.phi_hat_0},
        {"phi_0", rep.breakdown.phi_0},
        {"c_infty", rep.breakdown.c_infty},
        {"c_pnt_term", rep.breakdown.c_pnt_term},
        {"c_term", rep.breakdown.c_term}}},
      {"remainder", rep.remainder},
      {"constants", constants_json(b)},
      {"warnings", warnings},
  };
  return {0, emit(doc), ""};
}

// ---- pterms ----------------------------------------------------------------

struct PtermsOptions {
  std::uint64_t seed = SyntheticForm::kDefaultSeed;
  std::string dist = "sato-tate";
  long r = 1;
  long kappa = 12;
  std::uint64_t q = 0;
  std::string nu;
  int eps = 1;
};

CliResult run_pterms(const PtermsOptions& o, const Globals& g) {
  const Rational nu_exact = parse_rational(o.nu);
  if (sgn(nu_exact) <= 0) throw UsageError("--nu must be positive");
  if (!is_prime(o.q)) throw UsageError("--q must be prime");
  if (o.r < 1) throw UsageError("--r must be >= 1");
  const SyntheticForm form(o.kappa, o.q, o.eps, o.seed, parse_angle_distribution(o.dist));
  const TestFunction phi = TestFunction::fejer(nu_exact);

  const std::uint64_t c1 = prime_cutoff(o.q, o.r, phi.nu());
  const std::uint64_t c2 = prime_cutoff(o.q, o.r, phi.nu(), 2.0);
  const std::uint64_t c3 = prime_cutoff(o.q, o.r, phi.nu(), 3.0);
  const PrimeSieve sieve(std::max<std::uint64_t>(c1, 2));

  const double p1 = p1_term(form, phi, o.r, sieve);
  std::vector<double> p2;
  for (long m = 0; m < o.r; ++m) p2.push_back(p2_term(form, phi, o.r, m, sieve));
  const double p3 = p3_term(form, phi, o.r, sieve);

  if (g.output == "csv") {
    std::ostringstream out;
    out << "term,m,value,prime_cutoff\n";
    out << "P1,," << num(p1) << ',' << c1 << '\n';
    for (long m = 0; m < o.r; ++m) out << "P2," << m << ',' << num(p2[static_cast<std::size_t>(m)]) << ',' << c2 << '\n';
    out << "P3,," << num(p3) << ',' << c3 << '\n';
    return {0, out.str(), ""};
  }

  Json config = base_config("pterms", g);
  config["seed"] = o.seed;
  config["dist"] = o.dist;
  config["r"] = o.r;
  config["kappa"] = o.kappa;
  config["q"] = o.q;
  config["nu"] = rational_string(nu_exact);
  config["eps"] = o.eps;
  config["phi"] = "fejer";

  Json p2_rows = Json::array();
  for (long m = 0; m < o.r; ++m) p2_rows.push_back(Json{{"m", m}, {"value", p2[static_cast<std::size_t>(m)]}});
  const Json doc{
      {"config", config},
      {"form", Json::parse(nlohmann::json(form).dump())},
      {"cutoffs", {{"support", c1}, {"p1", c1}, {"p2", c2}, {"p3_primes", c3}}},
      {"p1", p1},
      {"p2", p2_rows},
      {"p3", p3},
  };
  return {0, emit(doc), ""};
}

// ---- petersson and tau-check ------------------------------------------------

struct PeterssonOptions {
  std::uint64_t m = 1;
  std::uint64_t k = 1;
  long kappa = 12;
  std::uint64_t cmax = 0;
};

std::uint64_t resolve_cmax(std::uint64_t requested, std::uint64_t m, std::uint64_t k) {
  return requested == 0 ? std::max(default_c_max(m), k) : requested;
}

Json term_json(const PeterssonTerm& t) {
  return Json{{"m", t.m},
              {"k", t.k},
              {"kappa", t.kappa},
              {"value", t.value},
              {"tail_estimate", t.tail_estimate},
              {"c_max", t.c_max},
              {"tail_rigorous", t.tail_rigorous},
              {"warnings", t.warnings}};
}

CliResult run_petersson(const PeterssonOptions& o, const Globals& g) {
  require_json(g, "petersson");
  if (o.m < 1 || o.k < 1) throw UsageError("--m and --k must be >= 1");
  const std::uint64_t cmax = resolve_cmax(o.cmax, o.m, o.k);
  const PeterssonTerm t = petersson_delta(o.m, o.k, o.kappa, cmax, g.threads);
  Json config = base_config("petersson", g);
  config["m"] = o.m;
  config["k"] = o.k;
  config["kappa"] = o.kappa;
  config["cmax"] = cmax;
  Json doc{{"config", config}};
  const Json body = term_json(t);
  for (const auto& [key, v] : body.items()) doc[key] = v;
  return {0, emit(doc), ""};
}

// tau(1..N) from q prod (1 - q^n)^24.
std::vector<Integer> tau_values(std::uint64_t N) {
  std::vector<Integer> series(N, 0);
  series[0] = 1;
  for (std::uint64_t n = 1; n < N; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (std::uint64_t i = N - 1; i >= n; --i) {
        series[i] -= series[i - n];
        if (i == n) break;
      }
    }
  }
  std::vector<Integer> tau(N + 1, 0);
  for (std::uint64_t m = 1; m <= N; ++m) tau[m] = series[m - 1];
  return tau;
}

struct TauOptions {
  long kappa = 12;
  std::vector<std::uint64_t> m_list{2, 3, 4, 5};
  std::uint64_t cmax = 0;
};

CliResult run_tau_check(const TauOptions& o, const Globals& g) {
  if (o.kappa != 12) throw UsageError("tau-check compares against Delta and needs --kappa 12");
  if (o.m_list.empty()) throw UsageError("--m-list must name at least one m");
  std::uint64_t largest = 1;
  for (auto m : o.m_list) {
    if (m < 1) throw UsageError("--m-list entries must be >= 1");
    largest = std::max(largest, m);
  }
  if (largest > 100'000) throw UsageError("--m-list entries must be <= 100000");
  const auto tau = tau_values(largest);
  const PeterssonTerm one = petersson_delta(1, 1, 12, resolve_cmax(o.cmax, 1, 1), g.threads);

  struct Row {
    std::uint64_t m;
    double value, target, diff, tail;
    bool within;
    std::uint64_t c_max;
  };
  std::vector<Row> rows;
  bool all = true;
  for (auto m : o.m_list) {
    const PeterssonTerm t = petersson_delta(m, 1, 12, resolve_cmax(o.cmax, m, 1), g.threads);
    const double ratio = t.value / one.value;
    const double target = tau[m].get_d() / std::pow(static_cast<double>(m), 5.5);
    const double tail =
        (t.tail_estimate + std::fabs(ratio) * one.tail_estimate) / (std::fabs(one.value) - one.tail_estimate);
    const double diff = std::fabs(ratio - target);
    const bool within = diff < std::max(1e-6, tail);
    all = all && within;
    rows.push_back({m, ratio, target, diff, tail, within, t.c_max});
  }

  if (g.output == "csv") {
    std::ostringstream out;
    out << "m,value,target,abs_diff,tail,within,c_max\n";
    for (const auto& r : rows) {
      out << r.m << ',' << num(r.value) << ',' << num(r.target) << ',' << num(r.diff) << ',' << num(r.tail) << ','
          << (r.within ? "true" : "false") << ',' << r.c_max << '\n';
    }
    return {0, out.str(), ""};
  }

  Json config = base_config("tau-check", g);
  config["kappa"] = o.kappa;
  config["m_list"] = o.m_list;
  config["cmax"] = o.cmax;
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back(Json{{"m", r.m},
                         {"value", r.value},
                         {"target", r.target},
                         {"abs_diff", r.diff},
                         {"tail", r.tail},
                         {"within", r.within},
                         {"c_max", r.c_max}});
  }
  const Json doc{{"config", config},
                 {"delta_1", term_json(one)},
                 {"tolerance_floor", 1e-6},
                 {"rows", table},
                 {"all_within", all}};
  return {0, emit(doc), ""};
}

} // namespace

CliResult run(const std::vector<std::string>& args) {
  CLI::App app{"Low-lying zeros of symmetric power L-functions: identities, constants, predictions and "
               "trace-formula checks.",
               "lowlying"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for prime and c-sums")->check(CLI::Range(1u, 256u));
  app.add_option("--output", g.output, "Output format (csv only for tabular commands)")
      ->check(CLI::IsMember({"json", "csv"}));

  IdentityOptions id;
  auto* identities = app.add_subcommand("identities", "Exact Chebyshev identity suite")->fallthrough();
  identities->add_option("--kmax", id.kmax, "Range for S3, chain, odd and vanishing identities")->check(CLI::Range(2L, 14L));
  identities->add_option("--miller-kmax", id.miller_kmax, "Range for the Miller identity")->check(CLI::Range(1L, 200L));
  identities->add_option("--lin-max", id.lin_max, "Range for the monomial expansion")->check(CLI::Range(0L, 400L));
  identities->add_option("--ortho-max", id.ortho_max, "Range for orthonormality")->check(CLI::Range(0L, 200L));
  identities->add_option("--linearize-max", id.linearize_max, "Range for linearization")->check(CLI::Range(0L, 12L));

  ConstantsOptions co;
  auto* constants = app.add_subcommand("constants", "C_PNT, C, C_Gamma, C_infty and nu_max")->fallthrough();
  constants->add_option("--r", co.r, "Symmetric power")->required()->check(CLI::Range(1L, 1000L));
  constants->add_option("--kappa", co.kappa, "Weight (even)")->required()->check(CLI::Range(2L, 100000L));
  constants->add_option("--cutoff", co.cutoff, "Prime cutoff for C_PNT");
  constants->add_option("--c-cutoff", co.c_cutoff, "Prime cutoff for C");

  PredictOptions po;
  auto* predict = app.add_subcommand("predict", "Predicted one-level density expansion")->fallthrough();
  predict->add_option("--r", po.constants.r, "Symmetric power")->required()->check(CLI::Range(1L, 1000L));
  predict->add_option("--kappa", po.constants.kappa, "Weight (even)")->required()->check(CLI::Range(2L, 100000L));
  predict->add_option("--q", po.q, "Prime level")->required();
  predict->add_option("--nu", po.nu, "Support radius (decimal or p/q)")->required();
  predict->add_option("--phi", po.phi, "Test function")->check(CLI::IsMember({"fejer"}));
  predict->add_option("--cutoff", po.constants.cutoff, "Prime cutoff for C_PNT");
  predict->add_option("--c-cutoff", po.constants.c_cutoff, "Prime cutoff for C");

  PtermsOptions pt;
  auto* pterms = app.add_subcommand("pterms", "Prime sums P1, P2, P3 on a synthetic form")->fallthrough();
  pterms->add_option("--seed", pt.seed, "Angle seed");
  pterms->add_option("--dist", pt.dist, "Angle distribution")->check(CLI::IsMember({"sato-tate", "uniform"}));
  pterms->add_option("--r", pt.r, "Symmetric power")->required()->check(CLI::Range(1L, 1000L));
  pterms->add_option("--kappa", pt.kappa, "Weight (even)")->required()->check(CLI::Range(2L, 100000L));
  pterms->add_option("--q", pt.q, "Prime level")->required();
  pterms->add_option("--nu", pt.nu, "Fejer support radius (decimal or p/q)")->required();
  pterms->add_option("--eps", pt.eps, "Sign eps_f(q)")->check(CLI::IsMember({-1, 1}));

  PeterssonOptions pe;
  auto* petersson = app.add_subcommand("petersson", "Truncated Petersson term Delta_k(m, 1)")->fallthrough();
  petersson->add_option("--m", pe.m, "Fourier index m")->required();
  petersson->add_option("--k", pe.k, "Divisibility condition k | c");
  petersson->add_option("--kappa", pe.kappa, "Weight (even)")->required()->check(CLI::Range(2L, 1000L));
  petersson->add_option("--cmax", pe.cmax, "Largest c (0: max(1000, ceil(8 pi sqrt m)))");

  TauOptions to;
  auto* tau = app.add_subcommand("tau-check", "Delta(m)/Delta(1) against tau(m) m^(-11/2)")->fallthrough();
  tau->add_option("--kappa", to.kappa, "Weight; only 12 is supported");
  tau->add_option("--m-list", to.m_list, "Comma-separated m values")->delimiter(',');
  tau->add_option("--cmax", to.cmax, "Largest c (0: per-m default)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 1, out.str(), err.str()};
  }

  try {
    if (identities->parsed()) return run_identities(id, g);
    if (constants->parsed()) return run_constants(co, g);
    if (predict->parsed()) return run_predict(po, g);
    if (pterms->parsed()) return run_pterms(pt, g);
    if (petersson->parsed()) return run_petersson(pe, g);
    if (tau->parsed()) return run_tau_check(to, g);
  } catch (const UsageError& e) {
    return {1, "", std::string("error: ") + e.what() + "\nRun with --help for more information.\n"};
  } catch (const std::exception& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
  return {1, "", "error: no command given\n"};
}

} // namespace lowlying::cli
