// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#include "nablafrac/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "nablafrac/ab.hpp"
#include "nablafrac/iterated.hpp"
#include "nablafrac/laplace.hpp"
#include "nablafrac/mittag_leffler.hpp"
#include "nablafrac/nabla_ops.hpp"
#include "nablafrac/signal.hpp"
#include "nablafrac/solver.hpp"
#include "nablafrac/special.hpp"

namespace nablafrac {

namespace {

// splitmix64: tiny, self-contained, byte-identical across platforms.
struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double sym() { return static_cast<double>(next() >> 11) * 0x1.0p-52 - 1.0; }  // [-1,1)
  std::int64_t ranged(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

Signal random_signal(SplitMix& rng, std::int64_t a, std::int64_t b) {
  return Signal::tabulate(a, b, [&](std::int64_t) { return rng.sym(); });
}

RationalSignal random_rational_signal(SplitMix& rng, std::int64_t a, std::int64_t b) {
  return RationalSignal::tabulate(
      a, b, [&](std::int64_t) { return Rational(rng.ranged(-9, 9), rng.ranged(1, 9)); });
}

double rel_gap(double got, double want) {
  return std::abs(got - want) / std::max({std::abs(got), std::abs(want), 1.0});
}

std::string dstr(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

void push(std::vector<CheckResult>& out, std::string identity, std::string params, double gap,
          double tol) {
  out.push_back({std::move(identity), std::move(params), gap, tol, gap <= tol});
}

std::vector<double> alphas_or(const VerifyOptions& opt, std::vector<double> defaults) {
  if (opt.alpha) return {*opt.alpha};
  return defaults;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_special(const VerifyOptions&) {
  std::vector<CheckResult> out;
  {
    double worst = 0.0;
    for (double mu : {0.3, 1.7, 2.5, -0.7})
      for (std::int64_t z = 1; z <= 50; ++z)
        worst = std::max(worst, rel_gap(rising_function(z, mu + 1.0),
                                        (static_cast<double>(z) + mu) * rising_function(z, mu)));
    push(out, "rising recurrence z^(mu+1) = (z+mu) z^(mu)", "z<=50, mu in {0.3,1.7,2.5,-0.7}",
         worst, 1e-12);
  }
  {
    double worst = 0.0;
    for (double mu : {0.3, 1.7, 2.5})
      for (std::int64_t z = 1; z <= 50; ++z) {
        const double lhs = rising_function(z, mu) - rising_function(z - 1, mu);
        const double rhs = mu * rising_function(z, mu - 1.0);
        worst = std::max(worst, rel_gap(lhs, rhs));
      }
    push(out, "nabla z^(mu) = mu z^(mu-1)", "z<=50, mu in {0.3,1.7,2.5}", worst, 1e-12);
  }
  {
    const std::pair<Rational, double> nus[] = {
        {Rational(1, 3), 1.0 / 3.0}, {Rational(-5, 2), -2.5}, {Rational(7, 4), 1.75}};
    double worst = 0.0;
    for (const auto& [nu_q, nu_d] : nus)
      for (std::int64_t n = 1; n <= 200; ++n)
        worst = std::max(worst, rel_gap(kernel(n, nu_d), to_double(kernel(n, nu_q))));
    push(out, "kernel float path = exact rational path", "n<=200, nu in {1/3,-5/2,7/4}", worst,
         1e-13);
  }
  {
    double worst = 0.0;
    for (double mu : {0.3, 2.5, -1.7})
      for (std::int64_t k = 1; k <= 20; ++k)
        worst = std::max(worst, rel_gap(gen_binomial(mu, k), gen_binomial(mu - 1.0, k) +
                                                                 gen_binomial(mu - 1.0, k - 1)));
    push(out, "Pascal binom(mu,k) = binom(mu-1,k) + binom(mu-1,k-1)",
         "k<=20, mu in {0.3,2.5,-1.7}", worst, 1e-13);
  }
  {
    const Rational mu(5, 3), nu(-7, 4);
    double worst = 0.0;
    for (std::int64_t m = 0; m <= 12; ++m) {
      Rational sum(0);
      for (std::int64_t k = 0; k <= m; ++k) sum += gen_binomial(mu, k) * gen_binomial(nu, m - k);
      if (sum != gen_binomial(mu + nu, m)) worst = 1.0;
    }
    push(out, "Vandermonde sum binom(mu,k) binom(nu,m-k) = binom(mu+nu,m) [exact]",
         "m<=12, mu=5/3, nu=-7/4", worst, 0.0);
  }
  return out;
}

std::vector<CheckResult> suite_ml(const VerifyOptions&) {
  std::vector<CheckResult> out;
  {
    double worst = 0.0;
    for (double lambda : {-0.7, -0.3, 0.3, 0.7})
      for (std::int64_t v = 0; v <= 30; ++v) {
        const double got = ml(MLParams{1.0, 1.0, 1.0, lambda}, v);
        const double want = std::pow(1.0 - lambda, static_cast<double>(-v));
        worst = std::max(worst, std::abs(got - want) / std::abs(want));
      }
    push(out, "alpha=1 closed form E(lambda,v) = (1-lambda)^(-v)", "v<=30, |lambda|<=0.7", worst,
         1e-10);
  }
  {
    double worst = 0.0;
    for (std::int64_t v : {0, 1, 5, 12}) {
      const double e1 = ml(MLParams{0.4, 1.0, 1.0, 0.3}, v);
      const double e2 = ml(MLParams{.alpha = 0.4, .lambda = 0.3}, v);
      if (e1 != e2) worst = 1.0;
    }
    push(out, "one/two/three-parameter reductions share the code path", "alpha=0.4, lambda=0.3",
         worst, 0.0);
  }
  {
    // direct series vs exact resummation (independent routes for rho = 1)
    double worst = 0.0;
    for (double alpha : {0.4, 0.8})
      for (double lambda : {-0.3, 0.3})
        for (std::int64_t v = 1; v <= 12; ++v) {
          const MLParams p{alpha, 1.3, 1.0, lambda};
          worst = std::max(worst, std::abs(ml_eval_series(p, v).value - ml(p, v)));
        }
    push(out, "series route = resummed route", "alpha in {0.4,0.8}, lambda = +/-0.3, v<=12",
         worst, 1e-10);
  }
  {
    double worst_excess = 0.0;
    for (const MLParams& p : {MLParams{0.4, 1.0, 1.5, 0.45}, MLParams{0.3, 2.0, 2.0, -0.4}}) {
      const SeriesValue coarse = ml_eval(p, 12, Truncation{1e-8, 10000});
      const SeriesValue fine = ml_eval(p, 12, Truncation{1e-13, 100000});
      const double drift = std::abs(coarse.value - fine.value);
      worst_excess = std::max(worst_excess, drift - coarse.tail_bound);
    }
    push(out, "reported tail bound covers the true remainder (series path)",
         "rho in {1.5,2}, v=12", std::max(0.0, worst_excess), 0.0);
  }
  {
    double worst = 0.0;
    const MLParams p{0.4, 2.0, 1.5, 0.3};
    for (std::int64_t v = 1; v <= 20; ++v)
      for (const IdentityGap& id : ml_forward_identities(p, v, 0.6))
        worst = std::max(worst, id.gap());
    push(out, "difference/summation identities of E", "alpha=0.4, beta=2, rho=1.5, lambda=0.3",
         worst, 1e-10);
  }
  return out;
}

std::vector<CheckResult> suite_classical_semigroup(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  SplitMix rng(opt.seed);
  const RationalSignal fq = random_rational_signal(rng, 0, 15);
  const Signal fd = to_double(fq);
  const Rational orders_q[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};

  bool exact_ok = true;
  double worst_float = 0.0;
  for (const Rational& aq : orders_q) {
    for (const Rational& mq : orders_q) {
      // left: exact
      const RationalSignal inner = RationalSignal::tabulate(0, 15, [&](std::int64_t s) {
        return s == 0 ? Rational(0) : left_frac_sum(fq, mq, s);
      });
      for (std::int64_t t = 1; t <= 15; ++t)
        if (left_frac_sum_from(inner, 0, aq, t) != left_frac_sum(fq, aq + mq, t)) exact_ok = false;
      // right: exact
      const RationalSignal inner_r = RationalSignal::tabulate(0, 14, [&](std::int64_t s) {
        return right_frac_sum_to(fq, 15, mq, s);
      });
      for (std::int64_t t = 0; t <= 14; ++t)
        if (right_frac_sum_to(inner_r, 15, aq, t) != right_frac_sum_to(fq, 15, aq + mq, t))
          exact_ok = false;
      // float
      const double ad = to_double(aq), md = to_double(mq);
      const Signal inner_d = Signal::tabulate(0, 15, [&](std::int64_t s) {
        return s == 0 ? 0.0 : left_frac_sum(fd, md, s);
      });
      const Signal inner_rd = Signal::tabulate(0, 14, [&](std::int64_t s) {
        return right_frac_sum_to(fd, 15, md, s);
      });
      for (std::int64_t t = 1; t <= 15; ++t)
        worst_float = std::max(worst_float, std::abs(left_frac_sum_from(inner_d, 0, ad, t) -
                                                     left_frac_sum(fd, ad + md, t)));
      for (std::int64_t t = 0; t <= 14; ++t)
        worst_float = std::max(worst_float, std::abs(right_frac_sum_to(inner_rd, 15, ad, t) -
                                                     right_frac_sum_to(fd, 15, ad + md, t)));
    }
  }
  push(out, "nabla^{-a} nabla^{-m} = nabla^{-(a+m)} [exact rational, left+right]",
       "orders {1/4,1/2,3/4}, grid 16", exact_ok ? 0.0 : 1.0, 0.0);
  push(out, "nabla^{-a} nabla^{-m} = nabla^{-(a+m)} [float, left+right]",
       "orders {1/4,1/2,3/4}, grid 16", worst_float, 1e-10);
  return out;
}

std::vector<CheckResult> suite_power_rule(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const std::int64_t b = 20;
  double worst = 0.0;
  for (double alpha : alphas_or(opt, {0.3, 0.5})) {
    for (double beta : {0.0, 0.5, 1.0}) {
      const double ratio = std::tgamma(beta + 1.0) / std::tgamma(beta + 1.0 + alpha);
      const Signal f = Signal::tabulate(0, b, [&](std::int64_t s) {
        return rising_function(s, beta);
      });
      for (std::int64_t t = 1; t <= b; ++t)
        worst = std::max(worst, rel_gap(left_frac_sum(f, alpha, t),
                                        ratio * rising_function(t, alpha + beta)));
      const Signal g = Signal::tabulate(0, b, [&](std::int64_t s) {
        return rising_function(b - s, beta);
      });
      for (std::int64_t t = 0; t <= b - 1; ++t)
        worst = std::max(worst, rel_gap(right_frac_sum(g, alpha, t),
                                        ratio * rising_function(b - t, alpha + beta)));
    }
  }
  push(out, "power rule nabla^{-a} (t-a)^(b) = G(b+1)/G(b+1+a) (t-a)^(a+b) [left+right]",
       "beta in {0,0.5,1}, t-a<=20", worst, 1e-10);
  {
    // order 1 sum is the plain running sum, exactly
    SplitMix rng(opt.seed + 1);
    const Signal f = random_signal(rng, 0, 20);
    double gap = 0.0;
    double running = 0.0;
    for (std::int64_t t = 1; t <= 20; ++t) {
      running += f(t);
      gap = std::max(gap, std::abs(left_frac_sum(f, 1.0, t) - running));
    }
    push(out, "order-1 fractional sum = running sum", "grid 21", gap, 1e-13);
  }
  return out;
}

std::vector<CheckResult> suite_abr_series(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  SplitMix rng(opt.seed);
  const Truncation tight{1e-11, 100000};
  double worst = 0.0;
  for (double alpha : alphas_or(opt, {0.1, 0.3, 0.45})) {
    const ABConfig cfg = ABConfig::unit_b(alpha);
    for (int rep = 0; rep < 20; ++rep) {
      const Signal f = random_signal(rng, 0, 15);
      const Signal abr = abr_left_grid(f, cfg, tight);
      for (std::int64_t t = 1; t <= 15; ++t)
        worst = std::max(worst, std::abs(abr(t) - abr_series(f, cfg, t, tight).value));
    }
  }
  push(out, "ABR_left = (B/(1-a)) [f + sum lambda^k nabla^{-ka} f]",
       "alpha in {0.1,0.3,0.45}, 20 random 16-point signals", worst, 1e-9);
  return out;
}

std::vector<CheckResult> suite_inverse_relations(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  SplitMix rng(opt.seed);
  std::map<std::string, double> worst;
  for (double alpha : alphas_or(opt, {0.1, 0.2, 0.3, 0.45})) {
    const Signal f = random_signal(rng, 0, 31);
    for (const ABConfig& cfg : {ABConfig::unit_b(alpha), ABConfig::standard_b(alpha)}) {
      for (const RelationCheck& rc : inverse_relations_check(f, cfg))
        worst[rc.name] = std::max(worst[rc.name], rc.max_gap);
    }
  }
  for (const auto& [name, gap] : worst)
    push(out, name, "alpha in {0.1,0.2,0.3,0.45}, B in {1, ab-standard}, grid 32", gap, 1e-8);
  return out;
}

std::vector<CheckResult> suite_iterated_abr(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  SplitMix rng(opt.seed);
  const Truncation tight{1e-11, 100000};
  {
    double worst_l = 0.0, worst_r = 0.0;
    for (double alpha : alphas_or(opt, {0.1, 0.3})) {
      const ABConfig cfg = ABConfig::unit_b(alpha);
      const Signal f = random_signal(rng, 0, 11);
      for (std::int64_t n = 1; n <= 3; ++n) {
        const Signal it = iterated_left(f, {alpha, static_cast<double>(-n)}, cfg, tight).values;
        Signal folded = f;
        for (std::int64_t i = 0; i < n; ++i) folded = abr_left_grid_from(folded, 0, cfg, tight);
        for (std::int64_t t = 1; t <= 11; ++t)
          worst_l = std::max(worst_l, std::abs(it(t) - folded(t)));
        const Signal itr = iterated_right(f, {alpha, static_cast<double>(-n)}, cfg, tight).values;
        Signal folded_r = f;
        for (std::int64_t i = 0; i < n; ++i) folded_r = abr_right_grid_to(folded_r, 11, cfg, tight);
        for (std::int64_t t = 0; t <= 10; ++t)
          worst_r = std::max(worst_r, std::abs(itr(t) - folded_r(t)));
      }
    }
    push(out, "iterated (a,-n) = n-fold ABR left", "n in {1,2,3}, alpha in {0.1,0.3}, grid 12",
         worst_l, 1e-8);
    push(out, "iterated (a,-n) = n-fold ABR right", "n in {1,2,3}, alpha in {0.1,0.3}, grid 12",
         worst_r, 1e-8);
  }
  {
    // exact: iterated (1/4, n) = n-fold AB sum, rational arithmetic
    const Rational aq(1, 4), bq(1);
    const RationalSignal fq = random_rational_signal(rng, 0, 12);
    bool ok = true;
    for (std::int64_t n = 1; n <= 3; ++n) {
      const RationalSignal it = iterated_left_int_from(fq, 0, aq, n, bq);
      RationalSignal fold = fq;
      for (std::int64_t i = 0; i < n; ++i)
        fold = RationalSignal::tabulate(1, 12, [&](std::int64_t t) {
          return ab_sum_left_from(fold, 0, aq, bq, t);
        });
      for (std::int64_t t = 1; t <= 12; ++t)
        if (it(t) != fold(t)) ok = false;
      const RationalSignal itr = iterated_right_int_to(fq, 12, aq, n, bq);
      RationalSignal fold_r = fq;
      for (std::int64_t i = 0; i < n; ++i)
        fold_r = RationalSignal::tabulate(0, 11, [&](std::int64_t t) {
          return ab_sum_right_to(fold_r, 12, aq, bq, t);
        });
      for (std::int64_t t = 0; t <= 11; ++t)
        if (itr(t) != fold_r(t)) ok = false;
    }
    push(out, "iterated (a,n) = n-fold AB sum [exact rational, left+right]",
         "n in {1,2,3}, alpha=1/4, grid 13", ok ? 0.0 : 1.0, 0.0);
  }
  {
    // mu = 0 identity, mu = 1 AB sum, alpha = 0 identity
    const Signal f = random_signal(rng, 0, 9);
    const ABConfig cfg = ABConfig::unit_b(0.35);
    double gap = 0.0;
    const Signal id = iterated_left(f, {0.35, 0.0}, cfg).values;
    for (std::int64_t t = 1; t <= 9; ++t) gap = std::max(gap, std::abs(id(t) - f(t)));
    const Signal once = iterated_left(f, {0.35, 1.0}, cfg).values;
    for (std::int64_t t = 1; t <= 9; ++t)
      gap = std::max(gap, std::abs(once(t) - ab_sum_left(f, cfg, t)));
    const Signal zero = iterated_left(f, {0.0, 1.7}, ABConfig::unit_b(0.0)).values;
    for (std::int64_t t = 1; t <= 9; ++t) gap = std::max(gap, std::abs(zero(t) - f(t)));
    push(out, "iterated special cases: mu=0 identity, mu=1 AB sum, alpha=0 identity",
         "grid 10", gap, 1e-13);
  }
  return out;
}

std::vector<CheckResult> suite_iterated_semigroup(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  SplitMix rng(opt.seed);
  const Truncation tight{1e-9, 100000};
  const double mus[] = {-1.5, -0.75, 0.0, 0.75, 1.5};
  double worst_l = 0.0, worst_r = 0.0;
  for (double alpha : alphas_or(opt, {0.1, 0.25, 0.4})) {
    const ABConfig cfg = ABConfig::unit_b(alpha);
    const Signal f = random_signal(rng, 0, 15);
    for (double mu : mus) {
      for (double nu : mus) {
        const Signal composed = semigroup_compose_left(f, {alpha, mu}, {alpha, nu}, cfg, tight).values;
        const Signal direct = iterated_left(f, {alpha, mu + nu}, cfg, tight).values;
        for (std::int64_t t = 1; t <= 15; ++t)
          worst_l = std::max(worst_l, std::abs(composed(t) - direct(t)));
        const Signal composed_r =
            semigroup_compose_right(f, {alpha, mu}, {alpha, nu}, cfg, tight).values;
        const Signal direct_r = iterated_right(f, {alpha, mu + nu}, cfg, tight).values;
        for (std::int64_t t = 0; t <= 14; ++t)
          worst_r = std::max(worst_r, std::abs(composed_r(t) - direct_r(t)));
      }
    }
  }
  push(out, "semigroup in mu: compose(mu) o compose(nu) = compose(mu+nu) [left]",
       "5x5 (mu,nu) in [-1.5,1.5], alpha in {0.1,0.25,0.4}, grid 16", worst_l, 1e-7);
  push(out, "semigroup in mu: compose(mu) o compose(nu) = compose(mu+nu) [right]",
       "5x5 (mu,nu) in [-1.5,1.5], alpha in {0.1,0.25,0.4}, grid 16", worst_r, 1e-7);
  {
    // exact semigroup at integer orders (Vandermonde in rational arithmetic)
    const Rational aq(1, 4), bq(1);
    const RationalSignal fq = random_rational_signal(rng, 0, 10);
    bool ok = true;
    for (std::int64_t mu = 0; mu <= 2; ++mu)
      for (std::int64_t nu = 0; nu <= 2; ++nu) {
        const RationalSignal inner = iterated_left_int_from(fq, 0, aq, nu, bq);
        const RationalSignal composed = iterated_left_int_from(inner, 0, aq, mu, bq);
        const RationalSignal direct = iterated_left_int_from(fq, 0, aq, mu + nu, bq);
        for (std::int64_t t = 1; t <= 10; ++t)
          if (composed(t) != direct(t)) ok = false;
      }
    push(out, "semigroup at integer orders [exact rational]", "mu,nu in {0,1,2}, alpha=1/4",
         ok ? 0.0 : 1.0, 0.0);
  }
  return out;
}

std::vector<CheckResult> suite_iterated_forms(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  SplitMix rng(opt.seed);
  const Truncation tight{1e-12, 100000};
  {
    double worst = 0.0;
    for (double alpha : alphas_or(opt, {0.15, 0.3})) {
      const ABConfig cfg = ABConfig::unit_b(alpha);
      const Signal f = random_signal(rng, 0, 11);
      for (double mu : {1.5, -0.8, 2.0}) {
        const Signal lhs = iterated_left(f, {alpha, mu}, cfg, tight).values;
        const Signal rhs = iterated_kernel_left(f, {alpha, mu}, cfg, tight).values;
        for (std::int64_t t = 1; t <= 11; ++t)
          worst = std::max(worst, std::abs(lhs(t) - rhs(t)));
      }
    }
    push(out, "binomial-of-operators form = kernel form",
         "alpha in {0.15,0.3}, mu in {1.5,-0.8,2}, grid 12", worst, 1e-10);
  }
  {
    double worst = 0.0;
    for (double alpha : alphas_or(opt, {0.15, 0.3})) {
      const ABConfig cfg = ABConfig::unit_b(alpha);
      for (double mu : {1.5, -0.8, 2.0}) {
        for (double gamma : {1.0, 1.8}) {
          const Signal f = Signal::tabulate(0, 12, [&](std::int64_t s) {
            return rising_function(s, gamma - 1.0);
          });
          const Signal lhs = iterated_left(f, {alpha, mu}, cfg, tight).values;
          for (std::int64_t t = 1; t <= 12; ++t)
            worst = std::max(
                worst, std::abs(lhs(t) - monomial_image_left({alpha, mu}, cfg, gamma, t, tight)));
        }
      }
    }
    push(out, "monomial image matches the applied operator",
         "gamma in {1,1.8}, mu in {1.5,-0.8,2}", worst, 1e-9);
  }
  return out;
}

std::vector<CheckResult> suite_ibp(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  SplitMix rng(opt.seed);
  const Truncation tight{1e-11, 100000};
  {
    double worst = 0.0;
    const double alpha = opt.alpha.value_or(0.4);
    const ABConfig cfg = ABConfig::unit_b(alpha);
    for (int rep = 0; rep < 20; ++rep) {
      const Signal f = random_signal(rng, 0, 9);
      const Signal g = random_signal(rng, 0, 9);
      for (double mu : {0.0, 1.0, 2.0})
        worst = std::max(worst, integration_by_parts_gap(f, g, {alpha, mu}, cfg, tight));
    }
    push(out, "integration by parts, integer mu", "mu in {0,1,2}, alpha=" + dstr(alpha), worst,
         1e-9);
  }
  {
    double worst = 0.0;
    for (double alpha : alphas_or(opt, {0.1, 0.3})) {
      const ABConfig cfg = ABConfig::unit_b(alpha);
      for (int rep = 0; rep < 20; ++rep) {
        const Signal f = random_signal(rng, 0, 9);
        const Signal g = random_signal(rng, 0, 9);
        worst = std::max(worst, integration_by_parts_gap(f, g, {alpha, 1.3}, cfg, tight));
      }
    }
    push(out, "integration by parts, mu = 1.3", "alpha in {0.1,0.3}, 20 random pairs, grid 10",
         worst, 1e-7);
  }
  return out;
}

std::vector<CheckResult> suite_laplace_pairs(const VerifyOptions&) {
  std::vector<CheckResult> out;
  const double zs[] = {0.5, 0.8, 1.2};
  const double tol_tp = 1e-9;
  {
    double worst = 0.0;
    for (double z : zs)
      for (double mu : {0.5, 1.0, 2.0}) {
        const Generator gen{[mu](std::int64_t t) { return rising_function(t, mu - 1.0); },
                            std::max(0.0, mu - 1.0)};
        const TransformPoint tp = numeric_transform(gen, 0, z, tol_tp);
        worst = std::max(worst, std::abs(tp.value - closed_monomial(mu, z)));
      }
    push(out, "K(t^(mu-1)) = Gamma(mu)/z^mu", "z in {0.5,0.8,1.2}, mu in {0.5,1,2}", worst, 1e-8);
  }
  {
    double worst = 0.0;
    for (double z : zs)
      for (double mu : {1.0, 2.0}) {
        const Generator gen{[mu](std::int64_t t) {
                              return rising_function(t, mu - 1.0) * std::pow(2.0, -static_cast<double>(t));
                            },
                            0.0};
        const TransformPoint tp = numeric_transform(gen, 0, z, tol_tp);
        worst = std::max(worst, std::abs(tp.value - closed_exp_monomial(mu, 2.0, z)));
      }
    push(out, "K(t^(mu-1) b^{-t}) = b^(mu-1) Gamma(mu)/(z+b-1)^mu", "b=2, mu in {1,2}", worst,
         1e-8);
  }
  {
    double worst = 0.0;
    for (double z : zs)
      for (double alpha : {0.3, 0.5})
        for (double lambda : {-3.0 / 7.0, 0.2}) {
          const Generator g1{[alpha, lambda](std::int64_t t) {
                               return ml(MLParams{alpha, 1.0, 1.0, lambda}, t);
                             },
                             4.0};
          const TransformPoint t1 = numeric_transform(g1, 0, z, tol_tp);
          worst = std::max(worst,
                           std::abs(t1.value - closed_ml(alpha, lambda, MLTransform::OneParam, z)));
          const Generator g2{[alpha, lambda](std::int64_t t) {
                               return ml(MLParams{alpha, alpha, 1.0, lambda}, t);
                             },
                             4.0};
          const TransformPoint t2 = numeric_transform(g2, 0, z, tol_tp);
          worst = std::max(
              worst, std::abs(t2.value - closed_ml(alpha, lambda, MLTransform::TwoParamAlpha, z)));
        }
    push(out, "K(E_a) = z^(a-1)/(z^a-lambda), K(E_{a,a}) = 1/(z^a-lambda)",
         "alpha in {0.3,0.5}, lambda in {-3/7,0.2}", worst, 1e-8);
  }
  {
    double worst = 0.0;
    for (double z : zs)
      for (double nu : {0.5, 1.0})
        for (const RuleReport& r : rule_checks(Generator::constant(1.0), 0, nu, z, 1e-8))
          worst = std::max(worst, r.gap);
    push(out, "transform rules: frac-sum, nabla, convolution", "f=1, nu in {0.5,1}", worst, 1e-8);
  }
  return out;
}

std::vector<CheckResult> suite_laplace_symbol(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const double alpha = opt.alpha.value_or(0.3);
  const ABConfig cfg = ABConfig::unit_b(alpha);
  const Truncation tight{1e-10, 100000};
  const Signal ones = Signal::constant(0, 48, 1.0);
  const Generator f1 = Generator::constant(1.0);
  double worst = 0.0;
  for (double z : {0.6, 0.9, 1.3}) {
    const double kf = numeric_transform(f1, 0, z, 1e-11).value;
    for (double mu : {1.0, 1.5, -1.0}) {
      const Signal itf = iterated_left(ones, {alpha, mu}, cfg, tight).values;
      const Generator gen = Generator::from_signal(itf, 2.0);
      const double kit = numeric_transform(gen, 0, z, 1e-11).value;
      worst = std::max(worst, std::abs(kit / kf - laplace_symbol({alpha, mu}, cfg, z)));
    }
  }
  push(out, "K(iterated f)/K(f) = ((1-a)/B + (a/B) z^{-a})^mu",
       "f=1, alpha=" + dstr(alpha) + ", mu in {1,1.5,-1}, z in {0.6,0.9,1.3}", worst, 1e-6);
  return out;
}

std::vector<CheckResult> suite_solver(const VerifyOptions&) {
  std::vector<CheckResult> out;
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const Truncation tight{1e-11, 100000};
  {
    const SeriesRHS rhs{{1.0}, 0.3};
    const SeriesSolution sol = solve_series(0.3, 1.0, 1.0, rhs, cfg, 25);
    push(out, "c_0 = b_0/(A + (B/(1-a))^mu)", "alpha=0.3, mu=1, A=1, b=(1)",
         std::abs(sol.coeffs[0] - 0.7 / 1.7), 1e-15);
    push(out, "equation residual, mu=1", "n_terms=25, t in {1..6}",
         residual_max(sol, rhs, cfg, 1, 6, tight), 1e-6);
    // mu=1 is the ABR equation: check against abr_left directly
    const Signal x = Signal::tabulate(0, 6, [&](std::int64_t t) {
      return evaluate_solution(sol, t).value;
    });
    double worst = 0.0;
    for (std::int64_t t = 1; t <= 6; ++t)
      worst = std::max(worst,
                       std::abs(abr_left(x, cfg, t, tight) + sol.A * x(t) - rhs_value(rhs, t)));
    push(out, "mu=1 solution solves the ABR equation", "alpha=0.3, A=1, b=(1)", worst, 1e-6);
  }
  {
    const ABConfig cfg2 = ABConfig::unit_b(0.25);
    const SeriesRHS rhs{{1.0, 0.5}, 0.25};
    const SeriesSolution sol = solve_series(0.25, 1.5, 2.0, rhs, cfg2, 30);
    push(out, "equation residual, mu=1.5", "alpha=0.25, A=2, b=(1,0.5), n_terms=30, t in {1..5}",
         residual_max(sol, rhs, cfg2, 1, 5, tight), 1e-5);
  }
  {
    // coefficient identity: substituting {c_s} into the m-th coefficient
    // equation reproduces -A c_m + b_m
    const SeriesRHS rhs{{1.0, -0.3, 0.2}, 0.3};
    const double mu = 1.4, A = 1.5, alpha = 0.3;
    const SeriesSolution sol = solve_series(alpha, mu, A, rhs, cfg, 12);
    double worst = 0.0;
    for (std::int64_t m = 0; m <= 10; ++m) {
      detail::Accumulator<double> acc;
      for (std::int64_t k = 0; k <= m; ++k) {
        const double w = gen_binomial(-mu, k) * std::pow(0.3 / 0.7, static_cast<double>(k)) /
                         std::pow(0.7, mu) *
                         std::exp(std::lgamma((static_cast<double>(m - k)) * alpha + 1.0) -
                                  std::lgamma(static_cast<double>(m) * alpha + 1.0));
        acc.add(sol.coeffs[static_cast<std::size_t>(m - k)] * w);
      }
      const double bm = m < 3 ? rhs.coeffs[static_cast<std::size_t>(m)] : 0.0;
      worst = std::max(worst, rel_gap(acc.value(), -A * sol.coeffs[static_cast<std::size_t>(m)] + bm));
    }
    push(out, "coefficient recursion reproduces the equation coefficients", "m<=10", worst, 1e-10);
  }
  {
    // residual shrinks as n_terms grows
    const SeriesRHS rhs{{1.0}, 0.3};
    double prev = 1e9;
    bool monotone = true;
    for (std::int64_t n : {8, 12, 16, 20}) {
      const SeriesSolution sol = solve_series(0.3, 1.0, 1.0, rhs, cfg, n);
      const double r = residual_max(sol, rhs, cfg, 1, 4, tight);
      if (r > prev) monotone = false;
      prev = r;
    }
    push(out, "residual shrinks with n_terms", "n in {8,12,16,20}, t in {1..4}",
         monotone ? 0.0 : 1.0, 0.0);
  }
  {
    const SeriesRHS rhs{{0.0, 0.0}, 0.3};
    const SeriesSolution sol = solve_series(0.3, 1.2, 1.0, rhs, cfg, 20);
    double worst = 0.0;
    for (std::int64_t t = 0; t <= 8; ++t)
      worst = std::max(worst, std::abs(evaluate_solution(sol, t).value));
    push(out, "b = 0 gives the zero solution", "", worst, 0.0);
  }
  return out;
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"special-fn", suite_special},
      {"mittag-leffler", suite_ml},
      {"classical-semigroup", suite_classical_semigroup},
      {"power-rule", suite_power_rule},
      {"abr-series", suite_abr_series},
      {"inverse-relations", suite_inverse_relations},
      {"iterated-abr", suite_iterated_abr},
      {"iterated-semigroup", suite_iterated_semigroup},
      {"iterated-forms", suite_iterated_forms},
      {"integration-by-parts", suite_ibp},
      {"laplace-pairs", suite_laplace_pairs},
      {"laplace-symbol", suite_laplace_symbol},
      {"solver", suite_solver},
  };
  return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt) {
  // short aliases for the two semigroup suites
  const std::string resolved = name == "semigroup"             ? "iterated-semigroup"
                               : name == "frac-sum-semigroup" ? "classical-semigroup"
                                                               : name;
  for (const auto& [n, fn] : registry())
    if (n == resolved) return fn(opt);
  throw std::invalid_argument("unknown verify suite: " + name);
}

std::vector<CheckResult> run_all_suites(const VerifyOptions& opt) {
  std::vector<CheckResult> all;
  for (const auto& [name, fn] : registry()) {
    auto part = fn(opt);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace nablafrac
