// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nablafrac/ab.hpp"
#include "nablafrac/errors.hpp"
#include "nablafrac/iterated.hpp"
#include "nablafrac/laplace.hpp"
#include "nablafrac/mittag_leffler.hpp"
#include "nablafrac/nabla_ops.hpp"
#include "nablafrac/signal.hpp"
#include "nablafrac/solver.hpp"
#include "nablafrac/special.hpp"
#include "nablafrac/verify.hpp"

namespace nf = nablafrac;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomainError = 2;

double default_tol() {
  if (const char* env = std::getenv("NABLAFRAC_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw std::domain_error("NABLAFRAC_TOL is not a number");
    }
  }
  return 1e-12;
}

nf::ABConfig make_config(double alpha, const std::string& b_norm) {
  if (b_norm == "one") return nf::ABConfig::unit_b(alpha);
  if (b_norm == "ab-standard") return nf::ABConfig::standard_b(alpha);
  throw std::domain_error("unknown --b-norm (use 'one' or 'ab-standard')");
}

struct ApplyArgs {
  std::string op, side = "left", b_norm = "one", in, out, meta;
  double alpha = 0.0;
  std::optional<double> mu;
  double tol = default_tol();
  std::int64_t k_max = 10000;
};

int run_apply(const ApplyArgs& args) {
  const nf::Signal f = nf::read_signal_csv(args.in);
  const nf::Truncation tr{args.tol, args.k_max};
  const nf::ABConfig cfg = make_config(args.alpha, args.b_norm);
  const bool left = args.side == "left";
  if (!left && args.side != "right") throw std::domain_error("--side must be left or right");

  nf::Signal result(0, {0.0});
  std::int64_t k_used = 0;
  double tail_bound = 0.0;
  if (args.op == "frac-sum") {
    if (!args.mu) throw std::domain_error("frac-sum needs --mu (the order)");
    const double mu = *args.mu;
    result = left ? nf::Signal::tabulate(f.origin() + 1, f.horizon(),
                                         [&](std::int64_t t) { return nf::left_frac_sum(f, mu, t); })
                  : nf::Signal::tabulate(f.origin(), f.horizon() - 1, [&](std::int64_t t) {
                      return nf::right_frac_sum(f, mu, t);
                    });
  } else if (args.op == "ab-sum") {
    result = left ? nf::ab_sum_left_grid(f, cfg) : nf::ab_sum_right_grid(f, cfg);
  } else if (args.op == "abc") {
    result = left ? nf::abc_left_grid(f, cfg, tr) : nf::abc_right_grid(f, cfg, tr);
  } else if (args.op == "abr") {
    result = left ? nf::abr_left_grid(f, cfg, tr) : nf::abr_right_grid(f, cfg, tr);
  } else if (args.op == "iterated") {
    if (!args.mu) throw std::domain_error("iterated needs --mu (the iteration exponent)");
    const nf::IterOrder ord{args.alpha, *args.mu};
    nf::IterResult r = left ? nf::iterated_left(f, ord, cfg, tr) : nf::iterated_right(f, ord, cfg, tr);
    result = std::move(r.values);
    k_used = r.k_used;
    tail_bound = r.tail_bound;
  } else {
    throw std::domain_error("unknown --op (frac-sum|ab-sum|abc|abr|iterated)");
  }

  nf::write_signal_csv(result, args.out);
  const std::string meta_path = args.meta.empty() ? args.out + ".meta.json" : args.meta;
  json meta{{"op", args.op},           {"side", args.side},
            {"alpha", args.alpha},     {"mu", args.mu ? json(*args.mu) : json()},
            {"b_norm", args.b_norm},   {"k_used", k_used},
            {"tail_bound", tail_bound}, {"origin", result.origin()},
            {"horizon", result.horizon()}};
  std::ofstream(meta_path) << meta.dump(2) << '\n';
  return 0;
}

int run_verify(const std::string& suite, const nf::VerifyOptions& opt) {
  std::vector<nf::CheckResult> results =
      suite == "all" ? nf::run_all_suites(opt) : nf::run_suite(suite, opt);
  json arr = json::array();
  bool all_pass = true;
  for (const nf::CheckResult& r : results) {
    arr.push_back({{"identity", r.identity},
                   {"params", r.params},
                   {"max_gap", r.max_gap},
                   {"tol", r.tol},
                   {"pass", r.pass}});
    all_pass = all_pass && r.pass;
  }
  std::cout << arr.dump(2) << '\n';
  return all_pass ? 0 : kExitVerifyFailed;
}

json solve_report(double alpha, double mu, double A, const std::vector<double>& b_coeffs,
                  std::int64_t n_terms, std::int64_t t_max, const std::string& b_norm,
                  double tol, const std::string& out_prefix, const std::string& format) {
  const nf::ABConfig cfg = make_config(alpha, b_norm);
  const nf::SeriesRHS rhs{b_coeffs, alpha};
  const nf::SeriesSolution sol = nf::solve_series(alpha, mu, A, rhs, cfg, n_terms);
  const nf::Truncation tr{tol, 10000};

  json grid = json::array();
  for (std::int64_t t = 0; t <= t_max; ++t) {
    const nf::SeriesEval ev = nf::evaluate_solution(sol, t);
    grid.push_back({{"t", t}, {"x", ev.value}, {"last_term", ev.last_term}});
  }
  const double resid = t_max >= 1 ? nf::residual_max(sol, rhs, cfg, 1, t_max, tr) : 0.0;

  if (!out_prefix.empty()) {
    if (format == "csv") {
      std::ofstream co(out_prefix + ".coeffs.csv");
      co << "s,c\n";
      for (std::size_t s = 0; s < sol.coeffs.size(); ++s) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", sol.coeffs[s]);
        co << s << ',' << buf << '\n';
      }
      std::ofstream go(out_prefix + ".grid.csv");
      go << "t,x,last_term\n";
      for (const auto& row : grid) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g",
                      static_cast<long long>(row["t"].get<std::int64_t>()),
                      row["x"].get<double>(), row["last_term"].get<double>());
        go << buf << '\n';
      }
    } else {
      std::ofstream(out_prefix + ".coeffs.json") << json(sol.coeffs).dump(2) << '\n';
      std::ofstream(out_prefix + ".grid.json") << grid.dump(2) << '\n';
    }
  }
  return json{{"alpha", alpha},
              {"mu", mu},
              {"A", A},
              {"n_terms", n_terms},
              {"c0", sol.coeffs[0]},
              {"coeffs", sol.coeffs},
              {"grid", grid},
              {"residual_max", resid},
              {"residual_range", {1, t_max}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete nabla fractional calculus with iterated AB operators"};
  app.require_subcommand(1);

  // apply
  ApplyArgs apply_args;
  CLI::App* apply = app.add_subcommand("apply", "apply an operator to a signal CSV");
  apply->add_option("--op", apply_args.op, "frac-sum|ab-sum|abc|abr|iterated")->required();
  apply->add_option("--side", apply_args.side, "left|right");
  apply->add_option("--alpha", apply_args.alpha, "kernel order in [0,1]");
  double mu_flag = 0.0;
  CLI::Option* mu_opt = apply->add_option("--mu", mu_flag, "order / iteration exponent");
  apply->add_option("--b-norm", apply_args.b_norm, "one|ab-standard");
  apply->add_option("--tol", apply_args.tol, "series tail tolerance");
  apply->add_option("--k-max", apply_args.k_max, "series term cap");
  apply->add_option("--in", apply_args.in, "input signal CSV")->required();
  apply->add_option("--out", apply_args.out, "output signal CSV")->required();
  apply->add_option("--meta", apply_args.meta, "metadata JSON path (default <out>.meta.json)");

  // ml
  double ml_alpha = 0.5, ml_beta = 1.0, ml_rho = 1.0, ml_lambda = 0.0, ml_tol = default_tol();
  std::int64_t ml_v = 0, ml_kmax = 10000;
  CLI::App* mlcmd = app.add_subcommand("ml", "evaluate a discrete Mittag-Leffler function");
  mlcmd->add_option("--alpha", ml_alpha)->required();
  mlcmd->add_option("--beta", ml_beta);
  mlcmd->add_option("--rho", ml_rho);
  mlcmd->add_option("--lambda", ml_lambda)->required();
  mlcmd->add_option("--v", ml_v, "grid point >= 0")->required();
  mlcmd->add_option("--tol", ml_tol);
  mlcmd->add_option("--k-max", ml_kmax);

  // laplace-check
  std::vector<double> lp_z{0.5, 0.8, 1.2};
  double lp_nu = 1.0, lp_mu = 1.0, lp_tol = 1e-8;
  std::string lp_f = "one";
  CLI::App* lp = app.add_subcommand("laplace-check", "verify transform rules numerically");
  lp->add_option("--z", lp_z, "transform points in (0,2)");
  lp->add_option("--nu", lp_nu, "fractional-sum order for the K(nabla^{-nu} f) rule");
  lp->add_option("--f", lp_f, "test signal: one|monomial");
  lp->add_option("--mu", lp_mu, "monomial exponent (f = t^(rising mu-1))");
  lp->add_option("--tol", lp_tol, "gap tolerance");

  // solve
  double sv_alpha = 0.0, sv_mu = 1.0, sv_A = 1.0, sv_tol = default_tol();
  std::vector<double> sv_b{1.0};
  std::int64_t sv_n = 25, sv_tmax = 6;
  std::string sv_bnorm = "one", sv_out, sv_format = "csv", sv_config;
  CLI::App* solve = app.add_subcommand("solve", "series solver for the iterated-AB equation");
  CLI::Option* o_alpha = solve->add_option("--alpha", sv_alpha, "kernel order in (0,1)");
  CLI::Option* o_mu = solve->add_option("--mu", sv_mu, "difference exponent > 0");
  CLI::Option* o_A = solve->add_option("--A", sv_A, "decay coefficient > 0");
  CLI::Option* o_b = solve->add_option("--b", sv_b, "rhs coefficients b_s");
  CLI::Option* o_n = solve->add_option("--n-terms", sv_n, "series terms to compute");
  CLI::Option* o_t = solve->add_option("--t-max", sv_tmax, "tabulation horizon");
  solve->add_option("--b-norm", sv_bnorm, "one|ab-standard");
  solve->add_option("--tol", sv_tol, "residual series tolerance");
  solve->add_option("--out", sv_out, "output path prefix");
  solve->add_option("--format", sv_format, "csv|json");
  solve->add_option("--config", sv_config, "JSON config with alpha, mu, A, b_coeffs, n_terms, t_max");

  // verify
  std::string vf_suite = "all";
  nf::VerifyOptions vf_opt;
  double vf_alpha = -1.0;
  CLI::App* verify = app.add_subcommand("verify", "run identity verification suites");
  verify->add_option("--suite", vf_suite, "suite name or 'all'");
  CLI::Option* vf_alpha_opt = verify->add_option("--alpha", vf_alpha, "restrict sweeps to one alpha");
  verify->add_option("--seed", vf_opt.seed, "seed for the deterministic signal generator");
  bool vf_list = false;
  verify->add_flag("--list", vf_list, "print suite names and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*apply) {
      if (mu_opt->count() > 0) apply_args.mu = mu_flag;
      return run_apply(apply_args);
    }
    if (*mlcmd) {
      const nf::SeriesValue v =
          nf::ml_eval(nf::MLParams{ml_alpha, ml_beta, ml_rho, ml_lambda}, ml_v,
                      nf::Truncation{ml_tol, ml_kmax});
      std::cout << json{{"value", v.value}, {"k_used", v.k_used}, {"tail_bound", v.tail_bound}}
                       .dump(2)
                << '\n';
      return 0;
    }
    if (*lp) {
      nf::Generator gen = nf::Generator::constant(1.0);
      if (lp_f == "monomial")
        gen = nf::Generator{[mu = lp_mu](std::int64_t t) { return nf::rising_function(t, mu - 1.0); },
                            std::max(0.0, lp_mu - 1.0)};
      else if (lp_f != "one")
        throw std::domain_error("--f must be one|monomial");
      json arr = json::array();
      bool all_pass = true;
      for (double z : lp_z) {
        for (const nf::RuleReport& r : nf::rule_checks(gen, 0, lp_nu, z, lp_tol)) {
          arr.push_back({{"rule", r.rule},
                         {"z", r.z},
                         {"lhs", r.lhs},
                         {"rhs", r.rhs},
                         {"gap", r.gap},
                         {"tol", r.tol},
                         {"pass", r.pass()}});
          all_pass = all_pass && r.pass();
        }
      }
      std::cout << arr.dump(2) << '\n';
      return all_pass ? 0 : kExitVerifyFailed;
    }
    if (*solve) {
      if (!sv_config.empty()) {
        std::ifstream in(sv_config);
        if (!in) throw std::runtime_error("cannot open config: " + sv_config);
        json cfg = json::parse(in);
        if (!o_alpha->count() && cfg.contains("alpha")) sv_alpha = cfg["alpha"].get<double>();
        if (!o_mu->count() && cfg.contains("mu")) sv_mu = cfg["mu"].get<double>();
        if (!o_A->count() && cfg.contains("A")) sv_A = cfg["A"].get<double>();
        if (!o_b->count() && cfg.contains("b_coeffs"))
          sv_b = cfg["b_coeffs"].get<std::vector<double>>();
        if (!o_n->count() && cfg.contains("n_terms")) sv_n = cfg["n_terms"].get<std::int64_t>();
        if (!o_t->count() && cfg.contains("t_max")) sv_tmax = cfg["t_max"].get<std::int64_t>();
      }
      std::cout << solve_report(sv_alpha, sv_mu, sv_A, sv_b, sv_n, sv_tmax, sv_bnorm, sv_tol,
                                sv_out, sv_format)
                       .dump(2)
                << '\n';
      return 0;
    }
    if (*verify) {
      if (vf_list) {
        for (const std::string& name : nf::suite_names()) std::cout << name << '\n';
        return 0;
      }
      if (vf_alpha_opt->count() > 0) vf_opt.alpha = vf_alpha;
      return run_verify(vf_suite, vf_opt);
    }
  } catch (const std::domain_error& e) {
    std::cerr << json{{"error", {{"kind", "domain"}, {"what", e.what()}}}}.dump() << '\n';
    return kExitDomainError;
  } catch (const std::out_of_range& e) {
    std::cerr << json{{"error", {{"kind", "range"}, {"what", e.what()}}}}.dump() << '\n';
    return kExitDomainError;
  } catch (const nf::ConvergenceError& e) {
    std::cerr << json{{"error", {{"kind", "convergence"}, {"what", e.what()}}}}.dump() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "runtime"}, {"what", e.what()}}}}.dump() << '\n';
    return kExitDomainError;
  }
  return 0;
}
