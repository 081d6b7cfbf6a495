// poik: PMF values, exact moment polynomials and tables, and the
// cross-verification harness for the Poisson distribution of order k.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orderk/combinatorics.hpp"
#include "orderk/distribution.hpp"
#include "orderk/moments.hpp"
#include "orderk/verification.hpp"

using nlohmann::json;
using namespace orderk;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

ExactRational parse_lambda(const std::string& text) {
  auto v = rational_from_string(text);
  if (v < 0) throw std::invalid_argument("lambda must be non-negative");
  return v;
}

json params_json(std::int64_t n, std::int64_t k, const std::string& lambda_text) {
  json p{{"k", k}};
  if (n >= 0) p["n"] = n;
  if (!lambda_text.empty())
    p["lambda"] = rational_to_string(parse_lambda(lambda_text));
  return p;
}

void emit(const std::string& command, const json& params, const json& payload) {
  json out{{"command", command}, {"params", params}, {"payload", payload}};
  std::cout << out.dump(2) << "\n";
}

MomentKind pick_kind(bool raw, bool fact, bool central) {
  int chosen = (raw ? 1 : 0) + (fact ? 1 : 0) + (central ? 1 : 0);
  if (chosen != 1)
    throw CLI::ValidationError("exactly one of --raw/--factorial/--central is required");
  return raw ? MomentKind::Raw : fact ? MomentKind::Factorial : MomentKind::Central;
}

std::string latex_poly(const LambdaPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& coeffs = p.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const ExactRational& c = coeffs[i];
    if (c == 0) continue;
    ExactRational mag = c < 0 ? ExactRational(-c) : c;
    if (!first) os << (c < 0 ? " -" : " +");
    else if (c < 0) os << "-";
    first = false;
    std::string cs = denominator(mag) == 1
                         ? numerator(mag).str()
                         : "\\frac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
    if (i == 0) {
      os << cs;
    } else {
      if (mag != 1) os << cs;
      os << "\\lambda";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string latex_symbol(MomentKind kind, std::int64_t n) {
  std::ostringstream os;
  switch (kind) {
    case MomentKind::Raw: os << "M_" << n; break;
    case MomentKind::Factorial: os << "M_{(" << n << ")}"; break;
    case MomentKind::Central: os << "\\tilde{M}_" << n; break;
  }
  return os.str();
}

struct VerifyOptions {
  std::int64_t k_max = 4;
  std::int64_t n_max = 8;
  std::vector<std::string> lambdas = {"1"};
  std::uint64_t mc_count = 0;
  std::uint64_t seed = 12345;
  double oracle_tol = 1e-8;
};

bool exact_check(std::vector<OracleReport>& reports, const std::string& label, bool ok) {
  reports.push_back(make_report(label, 1.0, ok ? 1.0 : 0.0, 0.0));
  return ok;
}

int run_verify(const VerifyOptions& opt) {
  std::vector<OracleReport> reports;
  bool all = true;

  for (std::int64_t k = 1; k <= opt.k_max; ++k) {
    MomentEngine engine(k);
    PmfPolyTable pmf_table(k);
    for (std::int64_t n = 0; n <= opt.n_max; ++n) {
      std::ostringstream at;
      at << " n=" << n << " k=" << k;
      all &= exact_check(reports, "pmf recurrence=sum" + at.str(),
                         pmf_table.q(n) == pmf_poly_sum(n, k).q);
      all &= exact_check(reports, "raw recurrence=sum" + at.str(),
                         engine.raw_recurrence(n).poly == engine.raw_sum(n).poly);
      all &= exact_check(reports, "factorial recurrence=sum" + at.str(),
                         engine.factorial_recurrence(n).poly == engine.factorial_sum(n).poly);
      const auto central_rec = engine.central_recurrence(n).poly;
      all &= exact_check(reports, "central recurrence=sum" + at.str(),
                         central_rec == engine.central_sum(n).poly);
      all &= exact_check(reports, "raw=stirling(factorial)" + at.str(),
                         engine.raw_from_factorial(n).poly == engine.raw_sum(n).poly);
      all &= exact_check(reports, "central=binomial(raw)" + at.str(),
                         engine.central_from_raw(n).poly == central_rec);
    }
  }

  for (const std::string& ltext : opt.lambdas) {
    const ExactRational lambda = parse_lambda(ltext);
    for (std::int64_t k = 1; k <= opt.k_max; ++k) {
      OrderKParams params(k, lambda);
      const std::int64_t cutoff = truncation_bound(params, opt.n_max);
      double mass = 0.0;
      for (std::int64_t x = 0; x <= cutoff; ++x) mass += pmf(x, params);
      std::ostringstream label;
      label << "normalization k=" << k << " lambda=" << ltext;
      auto rep = make_report(label.str(), 1.0, mass, 1e-10);
      rep.passed = mass >= 1.0 - 1e-10 && mass <= 1.0 + 1e-12;
      all &= rep.passed;
      reports.push_back(rep);

      MomentEngine engine(k);
      for (auto kind : {MomentKind::Raw, MomentKind::Factorial, MomentKind::Central}) {
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(opt.n_max, 8); ++n) {
          const double exact =
              engine.compute(kind, MomentMethod::Recurrence, n).poly.eval_double(
                  params.lambda_double());
          const double oracle = moment_by_truncated_pmf(kind, n, params, opt.oracle_tol);
          std::ostringstream l2;
          l2 << to_string(kind) << "-moment oracle n=" << n << " k=" << k
             << " lambda=" << ltext;
          auto r = make_report(l2.str(), exact, oracle, opt.oracle_tol);
          all &= r.passed;
          reports.push_back(r);
        }
      }

      if (opt.mc_count > 0) {
        auto batch = sample(params, opt.mc_count, opt.seed);
        const double mu = rational_to_double(mean(params));
        const double var = rational_to_double(variance(params));
        const double se_mean = std::sqrt(var / static_cast<double>(opt.mc_count));
        const double m1 = monte_carlo_moment(MomentKind::Raw, 1, batch, params);
        std::ostringstream l3;
        l3 << "mc mean k=" << k << " lambda=" << ltext << " count=" << opt.mc_count;
        auto r1 = make_report(l3.str(), mu, m1, 1.0);
        r1.tolerance = 5.0 * se_mean;
        r1.passed = r1.abs_error <= r1.tolerance;
        all &= r1.passed;
        reports.push_back(r1);

        const double m2c = monte_carlo_moment(MomentKind::Central, 2, batch, params);
        const double m4c = rational_to_double(
            central_moment_recurrence(4, k).poly(lambda));
        const double se_var =
            std::sqrt(std::max(0.0, m4c - var * var) / static_cast<double>(opt.mc_count));
        std::ostringstream l4;
        l4 << "mc variance k=" << k << " lambda=" << ltext << " count=" << opt.mc_count;
        auto r2 = make_report(l4.str(), var, m2c, 1.0);
        r2.tolerance = 5.0 * se_var;
        r2.passed = r2.abs_error <= r2.tolerance;
        all &= r2.passed;
        reports.push_back(r2);
      }
    }
  }

  json rows = json::array();
  for (const auto& r : reports) rows.push_back(json::parse(r.to_json_string()));
  json params{{"k_max", opt.k_max},
              {"n_max", opt.n_max},
              {"lambda", opt.lambdas},
              {"mc_count", opt.mc_count},
              {"seed", opt.seed},
              {"rng_algorithm", kRngAlgorithm}};
  emit("verify", params, json{{"reports", rows}, {"all_passed", all}});
  return all ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson distribution of order k: exact PMF weights, moments, verification"};
  app.require_subcommand(1);
  app.set_config("--config");
  double oracle_tol = 1e-8;
  std::int64_t table_cap = 30;
  std::string rng_algorithm = kRngAlgorithm;
  app.add_option("--oracle-tol", oracle_tol, "relative tolerance for floating oracles");
  app.add_option("--table-cap", table_cap, "largest n accepted by the table command");
  app.add_option("--rng-algorithm", rng_algorithm, "sampler algorithm id (must match build)");

  // pmf
  auto* pmf_cmd = app.add_subcommand("pmf", "probability mass function");
  std::int64_t pmf_n = 0, pmf_k = 1;
  std::string pmf_lambda;
  bool pmf_exact = false, pmf_float = false;
  pmf_cmd->add_option("-n,--n", pmf_n, "support point")->required();
  pmf_cmd->add_option("-k,--k", pmf_k, "order")->required();
  pmf_cmd->add_option("--lambda", pmf_lambda, "rate (decimal or p/q)");
  pmf_cmd->add_flag("--exact", pmf_exact, "emit Q_n coefficients and the exp factor");
  pmf_cmd->add_flag("--float", pmf_float, "emit the evaluated probability");

  // moment
  auto* mom_cmd = app.add_subcommand("moment", "one moment polynomial or value");
  std::int64_t mom_n = 0, mom_k = 1;
  std::string mom_lambda, mom_method = "recurrence";
  bool mom_raw = false, mom_fact = false, mom_central = false;
  mom_cmd->add_option("-n,--n", mom_n, "moment order")->required();
  mom_cmd->add_option("-k,--k", mom_k, "distribution order")->required();
  mom_cmd->add_option("--lambda", mom_lambda, "rate; absent -> polynomial output");
  mom_cmd->add_flag("--raw", mom_raw, "raw moments");
  mom_cmd->add_flag("--factorial", mom_fact, "factorial moments");
  mom_cmd->add_flag("--central", mom_central, "central moments");
  mom_cmd->add_option("--method", mom_method, "recurrence|sum|convert|all")
      ->check(CLI::IsMember({"recurrence", "sum", "convert", "all"}));

  // table
  auto* tab_cmd = app.add_subcommand("table", "moments 0..n-max in one format");
  std::int64_t tab_k = 1, tab_nmax = 8;
  std::string tab_format = "json";
  bool tab_raw = false, tab_fact = false, tab_central = false;
  tab_cmd->add_option("-k,--k", tab_k, "distribution order")->required();
  tab_cmd->add_option("--n-max", tab_nmax, "highest moment order");
  tab_cmd->add_flag("--raw", tab_raw, "raw moments");
  tab_cmd->add_flag("--factorial", tab_fact, "factorial moments");
  tab_cmd->add_flag("--central", tab_central, "central moments");
  tab_cmd->add_option("--format", tab_format, "json|csv|latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "run the cross-verification harness");
  VerifyOptions vopt;
  ver_cmd->add_option("--k-max", vopt.k_max, "highest order to check");
  ver_cmd->add_option("--n-max", vopt.n_max, "highest moment order to check");
  ver_cmd->add_option("--lambda", vopt.lambdas, "rate values (decimal or p/q)");
  ver_cmd->add_option("--mc-count", vopt.mc_count, "Monte Carlo draws (0 skips MC)");
  ver_cmd->add_option("--seed", vopt.seed, "sampler seed")->envname("POIK_SEED");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (rng_algorithm != kRngAlgorithm) {
      std::cerr << "error: unsupported rng algorithm '" << rng_algorithm
                << "' (this build provides " << kRngAlgorithm << ")\n";
      return kExitUsage;
    }

    if (*pmf_cmd) {
      if (pmf_n < 0 || pmf_k < 1) throw std::invalid_argument("need n >= 0 and k >= 1");
      if (pmf_exact && pmf_float)
        throw std::invalid_argument("--exact and --float are mutually exclusive");
      const bool want_float = pmf_float || (!pmf_exact && !pmf_lambda.empty());
      if (want_float) {
        if (pmf_lambda.empty()) throw std::invalid_argument("--float requires --lambda");
        OrderKParams params(pmf_k, parse_lambda(pmf_lambda));
        emit("pmf", params_json(pmf_n, pmf_k, pmf_lambda),
             json{{"value_float", pmf(pmf_n, params)}});
      } else {
        auto weight = pmf_poly_recurrence(pmf_n, pmf_k);
        std::ostringstream factor;
        factor << "exp(-" << pmf_k << "*lambda)";
        emit("pmf", params_json(pmf_n, pmf_k, pmf_lambda),
             json{{"coefficients", weight.q.to_strings()}, {"factor", factor.str()}});
      }
      return kExitOk;
    }

    if (*mom_cmd) {
      if (mom_n < 0 || mom_k < 1) throw std::invalid_argument("need n >= 0 and k >= 1");
      const MomentKind kind = pick_kind(mom_raw, mom_fact, mom_central);
      MomentEngine engine(mom_k);
      auto payload_for = [&](const LambdaPolynomial& poly) {
        json p{{"coefficients", poly.to_strings()}};
        if (!mom_lambda.empty())
          p["value"] = rational_to_string(poly(parse_lambda(mom_lambda)));
        return p;
      };
      json params = params_json(mom_n, mom_k, mom_lambda);
      params["kind"] = to_string(kind);
      if (mom_method == "all") {
        std::vector<MomentMethod> methods{MomentMethod::Recurrence,
                                          MomentMethod::CombinatorialSum};
        if (kind != MomentKind::Factorial) methods.push_back(MomentMethod::Conversion);
        json per_method;
        bool agree = true;
        LambdaPolynomial reference = engine.compute(kind, methods.front(), mom_n).poly;
        for (auto m : methods) {
          auto res = engine.compute(kind, m, mom_n);
          agree &= res.poly == reference;
          per_method[to_string(m)] = payload_for(res.poly);
        }
        emit("moment", params, json{{"methods", per_method}, {"agreement", agree}});
        return agree ? kExitOk : kExitVerification;
      }
      MomentMethod method = mom_method == "recurrence" ? MomentMethod::Recurrence
                            : mom_method == "sum"      ? MomentMethod::CombinatorialSum
                                                       : MomentMethod::Conversion;
      emit("moment", params, payload_for(engine.compute(kind, method, mom_n).poly));
      return kExitOk;
    }

    if (*tab_cmd) {
      if (tab_k < 1 || tab_nmax < 0) throw std::invalid_argument("need k >= 1 and n-max >= 0");
      if (tab_nmax > table_cap) throw std::invalid_argument("n-max exceeds the configured cap");
      const MomentKind kind = pick_kind(tab_raw, tab_fact, tab_central);
      MomentEngine engine(tab_k);
      std::vector<LambdaPolynomial> polys;
      for (std::int64_t n = 0; n <= tab_nmax; ++n)
        polys.push_back(engine.compute(kind, MomentMethod::Recurrence, n).poly);
      if (tab_format == "json") {
        json rows = json::array();
        for (std::int64_t n = 0; n <= tab_nmax; ++n)
          rows.push_back(json{{"n", n}, {"coefficients", polys[n].to_strings()}});
        json params{{"k", tab_k}, {"n_max", tab_nmax}, {"kind", to_string(kind)}};
        emit("table", params, json{{"rows", rows}});
      } else if (tab_format == "csv") {
        std::cout << "n,coefficients\n";
        for (std::int64_t n = 0; n <= tab_nmax; ++n) {
          std::cout << n << ",";
          const auto strs = polys[n].to_strings();
          for (std::size_t i = 0; i < strs.size(); ++i)
            std::cout << (i ? " " : "") << strs[i];
          std::cout << "\n";
        }
      } else {
        for (std::int64_t n = 0; n <= tab_nmax; ++n)
          std::cout << latex_symbol(kind, n) << " &= " << latex_poly(polys[n]) << " \\\\\n";
      }
      return kExitOk;
    }

    if (*ver_cmd) {
      vopt.oracle_tol = oracle_tol;
      return run_verify(vopt);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
