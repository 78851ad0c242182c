// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "nablafrac/ab.hpp"
#include "nablafrac/iterated.hpp"
#include "nablafrac/laplace.hpp"
#include "nablafrac/mittag_leffler.hpp"
#include "nablafrac/nabla_ops.hpp"
#include "nablafrac/signal.hpp"
#include "nablafrac/solver.hpp"
#include "nablafrac/special.hpp"
#include "helpers.hpp"

using namespace nablafrac;

namespace {

int g_failures = 0;

void run(const char* number, const std::string& name, double tol, double (*fn)()) {
  try {
    const double gap = fn();
    const bool pass = gap <= tol;
    std::printf("[%3s] %s %s (max gap %.3g, tol %.3g)\n", number, pass ? "PASS" : "FAIL",
                name.c_str(), gap, tol);
    if (!pass) ++g_failures;
  } catch (const std::exception& e) {
    std::printf("[%3s] FAIL %s (exception: %s)\n", number, name.c_str(), e.what());
    ++g_failures;
  }
}

// 1. classical semigroup: exact in rational arithmetic, 1e-10 in float
double crit_classical_semigroup() {
  nftest::SplitMix rng(101);
  const RationalSignal fq = nftest::random_rational_signal(rng, 0, 15);
  const Signal fd = to_double(fq);
  const Rational orders[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  double worst = 0.0;
  for (const Rational& aq : orders)
    for (const Rational& mq : orders) {
      const RationalSignal inner = RationalSignal::tabulate(0, 15, [&](std::int64_t s) {
        return s == 0 ? Rational(0) : left_frac_sum(fq, mq, s);
      });
      const RationalSignal inner_r = RationalSignal::tabulate(
          0, 14, [&](std::int64_t s) { return right_frac_sum_to(fq, 15, mq, s); });
      for (std::int64_t t = 1; t <= 15; ++t)
        if (left_frac_sum_from(inner, 0, aq, t) != left_frac_sum(fq, aq + mq, t)) worst = 1.0;
      for (std::int64_t t = 0; t <= 14; ++t)
        if (right_frac_sum_to(inner_r, 15, aq, t) != right_frac_sum_to(fq, 15, aq + mq, t))
          worst = 1.0;

      const double ad = to_double(aq), md = to_double(mq);
      const Signal inner_d = Signal::tabulate(0, 15, [&](std::int64_t s) {
        return s == 0 ? 0.0 : left_frac_sum(fd, md, s);
      });
      const Signal inner_rd = Signal::tabulate(
          0, 14, [&](std::int64_t s) { return right_frac_sum_to(fd, 15, md, s); });
      for (std::int64_t t = 1; t <= 15; ++t)
        worst = std::max(worst, std::abs(left_frac_sum_from(inner_d, 0, ad, t) -
                                         left_frac_sum(fd, ad + md, t)));
      for (std::int64_t t = 0; t <= 14; ++t)
        worst = std::max(worst, std::abs(right_frac_sum_to(inner_rd, 15, ad, t) -
                                         right_frac_sum_to(fd, 15, ad + md, t)));
    }
  return worst;
}

// 2. power rules, left and right
double crit_power_rules() {
  const std::int64_t b = 20;
  double worst = 0.0;
  for (double alpha : {0.3, 0.5})
    for (double beta : {0.0, 0.5, 1.0}) {
      const double ratio = std::tgamma(beta + 1.0) / std::tgamma(beta + 1.0 + alpha);
      const Signal f =
          Signal::tabulate(0, b, [&](std::int64_t s) { return rising_function(s, beta); });
      const Signal g =
          Signal::tabulate(0, b, [&](std::int64_t s) { return rising_function(b - s, beta); });
      for (std::int64_t t = 1; t <= b; ++t)
        worst = std::max(worst, nftest::rel_gap(left_frac_sum(f, alpha, t),
                                                ratio * rising_function(t, alpha + beta)));
      for (std::int64_t t = 0; t <= b - 1; ++t)
        worst = std::max(worst, nftest::rel_gap(right_frac_sum(g, alpha, t),
                                                ratio * rising_function(b - t, alpha + beta)));
    }
  return worst;
}

// 3. Lemma TQ: ABR vs its fractional-sum series
double crit_tq() {
  nftest::SplitMix rng(103);
  const Truncation tight{1e-11, 100000};
  double worst = 0.0;
  for (double alpha : {0.1, 0.3, 0.45}) {
    const ABConfig cfg = ABConfig::unit_b(alpha);
    for (int rep = 0; rep < 20; ++rep) {
      const Signal f = nftest::random_signal(rng, 0, 15);
      const Signal grid = abr_left_grid(f, cfg, tight);
      for (std::int64_t t = 1; t <= 15; ++t)
        worst = std::max(worst, std::abs(grid(t) - abr_series(f, cfg, t, tight).value));
    }
  }
  return worst;
}

// 4. inverse relations: six identities on interior points of 32-point grids
double crit_inverse_relations() {
  nftest::SplitMix rng(104);
  double worst = 0.0;
  for (double alpha : {0.1, 0.3}) {
    const ABConfig cfg = ABConfig::unit_b(alpha);
    const Signal f = nftest::random_signal(rng, 0, 31);
    for (const RelationCheck& rc : inverse_relations_check(f, cfg))
      worst = std::max(worst, rc.max_gap);
  }
  return worst;
}

// 5. iterated (a,-n) = n-fold ABR (float) and (1/4,n) = n-fold AB sum (exact)
double crit_iterated_abr() {
  nftest::SplitMix rng(105);
  const Truncation tight{1e-11, 100000};
  double worst = 0.0;
  for (double alpha : {0.1, 0.3}) {
    const ABConfig cfg = ABConfig::unit_b(alpha);
    const Signal f = nftest::random_signal(rng, 0, 11);
    for (std::int64_t n = 1; n <= 3; ++n) {
      const IterResult it = iterated_left(f, {alpha, double(-n)}, cfg, tight);
      Signal fold = f;
      for (std::int64_t i = 0; i < n; ++i) fold = abr_left_grid_from(fold, 0, cfg, tight);
      for (std::int64_t t = 1; t <= 11; ++t)
        worst = std::max(worst, std::abs(it.values(t) - fold(t)));
      const IterResult itr = iterated_right(f, {alpha, double(-n)}, cfg, tight);
      Signal fold_r = f;
      for (std::int64_t i = 0; i < n; ++i) fold_r = abr_right_grid_to(fold_r, 11, cfg, tight);
      for (std::int64_t t = 0; t <= 10; ++t)
        worst = std::max(worst, std::abs(itr.values(t) - fold_r(t)));
    }
  }
  const RationalSignal fq = nftest::random_rational_signal(rng, 0, 12);
  const Rational aq(1, 4), bq(1);
  for (std::int64_t n = 1; n <= 3; ++n) {
    const RationalSignal it = iterated_left_int_from(fq, 0, aq, n, bq);
    RationalSignal fold = fq;
    for (std::int64_t i = 0; i < n; ++i)
      fold = RationalSignal::tabulate(
          1, 12, [&](std::int64_t t) { return ab_sum_left_from(fold, std::int64_t{0}, aq, bq, t); });
    for (std::int64_t t = 1; t <= 12; ++t)
      if (it(t) != fold(t)) worst = std::max(worst, 1.0);
  }
  return worst;
}

// 6. the new semigroup: 5x5 (mu,nu) sweep, composed vs direct
double crit_semigroup() {
  nftest::SplitMix rng(106);
  const Truncation tight{1e-9, 100000};
  const double mus[] = {-1.5, -0.75, 0.0, 0.75, 1.5};
  double worst = 0.0;
  for (double alpha : {0.1, 0.25, 0.4}) {
    const ABConfig cfg = ABConfig::unit_b(alpha);
    const Signal f = nftest::random_signal(rng, 0, 15);
    for (double mu : mus)
      for (double nu : mus) {
        const Signal composed =
            semigroup_compose_left(f, {alpha, mu}, {alpha, nu}, cfg, tight).values;
        const Signal direct = iterated_left(f, {alpha, mu + nu}, cfg, tight).values;
        for (std::int64_t t = 1; t <= 15; ++t)
          worst = std::max(worst, std::abs(composed(t) - direct(t)));
      }
  }
  return worst;
}

// 7a/7b. integration by parts
double crit_ibp_integer() {
  nftest::SplitMix rng(107);
  const Truncation tight{1e-11, 100000};
  const ABConfig cfg = ABConfig::unit_b(0.4);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const Signal f = nftest::random_signal(rng, 0, 9);
    const Signal g = nftest::random_signal(rng, 0, 9);
    for (double mu : {1.0, 2.0})
      worst = std::max(worst, integration_by_parts_gap(f, g, {0.4, mu}, cfg, tight));
  }
  return worst;
}

double crit_ibp_fractional() {
  nftest::SplitMix rng(108);
  const Truncation tight{1e-11, 100000};
  const ABConfig cfg = ABConfig::unit_b(0.3);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const Signal f = nftest::random_signal(rng, 0, 9);
    const Signal g = nftest::random_signal(rng, 0, 9);
    worst = std::max(worst, integration_by_parts_gap(f, g, {0.3, 1.3}, cfg, tight));
  }
  return worst;
}

// 8. Laplace pairs: numeric transform within its own reported bound <= 1e-8
double crit_laplace_pairs() {
  double worst = 0.0;
  auto check_pair = [&](const Generator& gen, double closed, double z) {
    const TransformPoint tp = numeric_transform(gen, 0, z, 1e-9);
    const double gap = std::abs(tp.value - closed);
    // both legs of the criterion: gap <= reported bound and bound <= 1e-8
    worst = std::max(worst, gap - (tp.tail_bound + 1e-11));
    worst = std::max(worst, tp.tail_bound - 1e-8);
    worst = std::max(worst, gap - 1e-8);
  };
  for (double z : {0.5, 0.8, 1.2}) {
    for (double mu : {0.5, 1.0, 2.0})
      check_pair({[mu](std::int64_t t) { return rising_function(t, mu - 1.0); },
                  std::max(0.0, mu - 1.0)},
                 closed_monomial(mu, z), z);
    for (double mu : {1.0, 2.0})
      check_pair({[mu](std::int64_t t) {
                    return rising_function(t, mu - 1.0) * std::pow(2.0, double(-t));
                  },
                  0.0},
                 closed_exp_monomial(mu, 2.0, z), z);
    for (double alpha : {0.3, 0.5})
      for (double lambda : {-3.0 / 7.0, 0.2}) {
        check_pair({[alpha, lambda](std::int64_t t) {
                      return ml(MLParams{alpha, 1.0, 1.0, lambda}, t);
                    },
                    4.0},
                   closed_ml(alpha, lambda, MLTransform::OneParam, z), z);
        check_pair({[alpha, lambda](std::int64_t t) {
                      return ml(MLParams{alpha, alpha, 1.0, lambda}, t);
                    },
                    4.0},
                   closed_ml(alpha, lambda, MLTransform::TwoParamAlpha, z), z);
      }
    for (double nu : {0.5, 1.0})
      for (const RuleReport& r : rule_checks(Generator::constant(1.0), 0, nu, z, 1e-8))
        worst = std::max(worst, r.gap - 1e-8);
  }
  return std::max(worst, 0.0);
}

// 9. transform of the iterated operator equals the symbol
double crit_transform_symbol() {
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const Truncation tight{1e-10, 100000};
  const Signal ones = Signal::constant(0, 48, 1.0);
  const double z = 0.9;
  const double kf = numeric_transform(Generator::constant(1.0), 0, z, 1e-11).value;
  double worst = 0.0;
  for (double mu : {1.0, 1.5, -1.0}) {
    const Signal itf = iterated_left(ones, {0.3, mu}, cfg, tight).values;
    const double kit = numeric_transform(Generator::from_signal(itf, 2.0), 0, z, 1e-11).value;
    worst = std::max(worst, std::abs(kit / kf - laplace_symbol({0.3, mu}, cfg, z)));
  }
  return worst;
}

// 10a. series solver: leading coefficient
double crit_solver_c0() {
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const SeriesSolution sol = solve_series(0.3, 1.0, 1.0, SeriesRHS{{1.0}, 0.3}, cfg, 25);
  return std::abs(sol.coeffs[0] - 0.4117647058823529);
}

// 10b. series solver: equation residual and the mu=1 ABR cross-check
double crit_solver_residual() {
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const Truncation tight{1e-11, 100000};
  const SeriesRHS rhs{{1.0}, 0.3};
  const SeriesSolution sol = solve_series(0.3, 1.0, 1.0, rhs, cfg, 25);
  double worst = residual_max(sol, rhs, cfg, 1, 6, tight);
  const Signal x =
      Signal::tabulate(0, 6, [&](std::int64_t t) { return evaluate_solution(sol, t).value; });
  for (std::int64_t t = 1; t <= 6; ++t)
    worst = std::max(worst, std::abs(abr_left(x, cfg, t, tight) + x(t) - 1.0));
  return worst;
}

// 11a. Mittag-Leffler closed form at alpha = 1 (relative)
double crit_ml_closed_form() {
  double worst = 0.0;
  for (double lambda : {-0.7, -0.3, 0.3, 0.7})
    for (std::int64_t v = 0; v <= 30; ++v) {
      const double want = std::pow(1.0 - lambda, double(-v));
      worst = std::max(worst,
                       std::abs(ml(MLParams{1.0, 1.0, 1.0, lambda}, v) - want) / std::abs(want));
    }
  return worst;
}

// 11b. forward identities of the Mittag-Leffler family
double crit_ml_identities() {
  double worst = 0.0;
  for (std::int64_t v = 1; v <= 20; ++v)
    for (const IdentityGap& id : ml_forward_identities(MLParams{0.4, 2.0, 1.0, 0.3}, v, 0.6))
      worst = std::max(worst, id.gap());
  return worst;
}

}  // namespace

int main() {
  std::printf("acceptance criteria\n");
  run("1", "classical semigroup of fractional sums (exact rational + float)", 1e-10,
      crit_classical_semigroup);
  run("2", "power rules for rising monomials", 1e-10, crit_power_rules);
  run("3", "ABR difference = fractional-sum series representation", 1e-9, crit_tq);
  run("4", "inverse relations between AB differences and sums", 1e-8, crit_inverse_relations);
  run("5", "iterated (a,-n) = n-fold ABR; (a,n) = n-fold AB sum (exact)", 1e-8,
      crit_iterated_abr);
  run("6", "semigroup of iterated operators over the (mu,nu) sweep", 1e-7, crit_semigroup);
  run("7a", "integration by parts, integer orders", 1e-9, crit_ibp_integer);
  run("7b", "integration by parts, mu = 1.3", 1e-7, crit_ibp_fractional);
  run("8", "discrete Laplace pairs within reported tail bounds", 0.0, crit_laplace_pairs);
  run("9", "transform of iterated operator equals its symbol", 1e-6, crit_transform_symbol);
  run("10a", "series solver leading coefficient", 1e-7, crit_solver_c0);
  run("10b", "series solver residual and ABR cross-check", 1e-6, crit_solver_residual);
  run("11a", "Mittag-Leffler closed form at alpha = 1", 1e-10, crit_ml_closed_form);
  run("11b", "Mittag-Leffler forward identities", 1e-10, crit_ml_identities);
  if (g_failures > 0) {
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
