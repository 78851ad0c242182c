#include "doctest.h"

#include <cmath>

#include "nablafrac/ab.hpp"
#include "nablafrac/mittag_leffler.hpp"
#include "helpers.hpp"

using namespace nablafrac;

namespace {

// oracle: E_alpha(lambda, v) by direct series with a fixed cap
double brute_e(double alpha, double lambda, std::int64_t v, std::int64_t terms = 400) {
  if (v == 0) return 1.0;
  double acc = 0.0, lp = 1.0;
  for (std::int64_t k = 0; k < terms; ++k) {
    acc += lp * kernel(v, double(k) * alpha + 1.0);
    lp *= lambda;
  }
  return acc;
}

}  // namespace

TEST_CASE("ABConfig validation") {
  CHECK(ABConfig::unit_b(0.3).b() == 1.0);
  CHECK(ABConfig::standard_b(0.0).b() == 1.0);
  CHECK(ABConfig::standard_b(0.3).b() ==
        doctest::Approx(1.0 - 0.3 + 0.3 / std::tgamma(0.3)).epsilon(1e-14));
  CHECK(ABConfig::unit_b(0.3).lambda() == doctest::Approx(-3.0 / 7.0).epsilon(1e-15));
  CHECK_THROWS_AS(ABConfig::unit_b(1.2).require_order_range(), std::domain_error);
  CHECK_THROWS_AS(ABConfig::unit_b(0.5).require_series_domain(), std::domain_error);
}

TEST_CASE("abc_left on constants and ramps") {
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const Signal c = Signal::constant(0, 8, 2.5);
  for (std::int64_t t = 1; t <= 8; ++t) CHECK(abc_left(c, cfg, t) == doctest::Approx(0.0));

  // single nabla term at t=1: (1/(1-a)) E(lambda,1), with E(lambda,1) = 1-a
  const Signal ramp = Signal::tabulate(0, 5, [](std::int64_t t) { return double(t); });
  const double e1 = brute_e(0.3, cfg.lambda(), 1);
  CHECK(e1 == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(abc_left(ramp, cfg, 1) == doctest::Approx(e1 / 0.7).epsilon(1e-11));

  // alpha -> 0 with B = 1: telescoping to f(t) - f(a)
  const ABConfig cfg0 = ABConfig::unit_b(0.0);
  nftest::SplitMix rng(21);
  const Signal f = nftest::random_signal(rng, 0, 8);
  for (std::int64_t t = 1; t <= 8; ++t)
    CHECK(abc_left(f, cfg0, t) == doctest::Approx(f(t) - f(0)).epsilon(1e-13));
}

TEST_CASE("abr_left via the tabulated inner sum") {
  const ABConfig cfg0 = ABConfig::unit_b(0.0);
  const Signal ones = Signal::constant(0, 8, 1.0);
  for (std::int64_t t = 1; t <= 8; ++t) CHECK(abr_left(ones, cfg0, t) == doctest::Approx(1.0));

  // unit pulse at a+1, t=a+1: value B(alpha) E(lambda,1)/(1-alpha) = B(alpha),
  // by the oracle series E(lambda,1) = 1/(1-lambda) = 1-alpha
  for (double alpha : {0.1, 0.3, 0.45}) {
    const ABConfig cfg = ABConfig::unit_b(alpha);
    const Signal pulse = Signal::tabulate(0, 6, [](std::int64_t t) { return t == 1 ? 1.0 : 0.0; });
    const double want = cfg.b() / (1.0 - alpha) * brute_e(alpha, cfg.lambda(), 1);
    CHECK(abr_left(pulse, cfg, 1) == doctest::Approx(want).epsilon(1e-11));
    CHECK(abr_left(pulse, cfg, 1) == doctest::Approx(cfg.b()).epsilon(1e-11));
  }
}

TEST_CASE("abr_left equals abr_series (fractional-sum representation)") {
  nftest::SplitMix rng(22);
  const Truncation tight{1e-11, 100000};
  for (double alpha : {0.1, 0.3, 0.45}) {
    const ABConfig cfg = ABConfig::unit_b(alpha);
    for (int rep = 0; rep < 20; ++rep) {
      const Signal f = nftest::random_signal(rng, 0, 15);
      const Signal grid = abr_left_grid(f, cfg, tight);
      for (std::int64_t t = 1; t <= 15; ++t) {
        const SeriesValue sv = abr_series(f, cfg, t, tight);
        CHECK(std::abs(grid(t) - sv.value) <= 1e-9);
        CHECK(abr_left(f, cfg, t, tight) == doctest::Approx(grid(t)).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("abr_series near alpha = 0 scales f") {
  const ABConfig cfg = ABConfig::unit_b(1e-9);
  const Signal f = Signal::tabulate(0, 5, [](std::int64_t t) { return double(t * t); });
  for (std::int64_t t = 1; t <= 5; ++t)
    CHECK(abr_series(f, cfg, t).value ==
          doctest::Approx(cfg.b() / (1.0 - cfg.alpha) * f(t)).epsilon(1e-7));
}

TEST_CASE("abr_series at the first grid point sums the geometric column") {
  // t-a = 1: every nabla^{-ka} collapses to kernel(1, ka) = 1, so the value
  // is (B/(1-a)) sum lambda^k = (B/(1-a)) (1-a) = B
  for (double alpha : {0.1, 0.3, 0.45}) {
    const ABConfig cfg = ABConfig::unit_b(alpha);
    const Signal ones = Signal::constant(0, 4, 1.0);
    CHECK(abr_series(ones, cfg, 1, Truncation{1e-13, 100000}).value ==
          doctest::Approx(cfg.b()).epsilon(1e-11));
  }
}

TEST_CASE("right operators mirror the left ones (Q-operator symmetry)") {
  nftest::SplitMix rng(23);
  const std::int64_t a = 0, b = 9;
  const Signal g = nftest::random_signal(rng, a, b);
  const Signal reflected =
      Signal::tabulate(a, b, [&](std::int64_t s) { return g(a + b - s); });
  const ABConfig cfg = ABConfig::unit_b(0.3);
  for (std::int64_t t = a; t <= b - 1; ++t) {
    CHECK(abc_right(reflected, cfg, t) == doctest::Approx(abc_left(g, cfg, a + b - t)).epsilon(1e-11));
    CHECK(abr_right(reflected, cfg, t) == doctest::Approx(abr_left(g, cfg, a + b - t)).epsilon(1e-11));
  }
  const Signal c = Signal::constant(0, 9, 4.0);
  for (std::int64_t t = 0; t <= 8; ++t) CHECK(abc_right(c, cfg, t) == doctest::Approx(0.0));
  // pulse mirror of the abr_left case
  const Signal pulse = Signal::tabulate(0, 6, [](std::int64_t t) { return t == 5 ? 1.0 : 0.0; });
  CHECK(abr_right(pulse, cfg, 5) == doctest::Approx(cfg.b()).epsilon(1e-11));
}

TEST_CASE("AB sums") {
  const Signal ones = Signal::constant(0, 4, 1.0);
  // alpha = 0 collapses to f, alpha = 1 to the plain running sum
  const ABConfig zero = ABConfig::unit_b(0.0);
  const ABConfig one = ABConfig::unit_b(1.0);
  for (std::int64_t t = 1; t <= 4; ++t) {
    CHECK(ab_sum_left(ones, zero, t) == doctest::Approx(1.0));
    CHECK(ab_sum_left(ones, one, t) == doctest::Approx(double(t)));
  }
  const ABConfig half = ABConfig::unit_b(0.5);
  CHECK(ab_sum_left(ones, half, 2) == doctest::Approx(1.25).epsilon(1e-14));
  // right mirrors
  const Signal ones2 = Signal::constant(0, 2, 1.0);
  CHECK(ab_sum_right(ones2, zero, 1) == doctest::Approx(1.0));
  CHECK(ab_sum_right(ones2, one, 0) == doctest::Approx(2.0));
  CHECK(ab_sum_right(ones2, half, 0) == doctest::Approx(1.25).epsilon(1e-14));
  // exact rational path agrees bit for bit with the formula
  const RationalSignal onesq = RationalSignal::constant(0, 2, Rational(1));
  CHECK(ab_sum_left_from(onesq, 0, Rational(1, 2), Rational(1), 2) == Rational(5, 4));
  CHECK(ab_sum_right_to(onesq, 2, Rational(1, 2), Rational(1), 0) == Rational(5, 4));
}

TEST_CASE("inverse relations and the ABC/ABR correction") {
  nftest::SplitMix rng(24);
  for (double alpha : {0.1, 0.3}) {
    for (const ABConfig& cfg : {ABConfig::unit_b(alpha), ABConfig::standard_b(alpha)}) {
      const Signal f = nftest::random_signal(rng, 0, 11);
      for (const RelationCheck& rc : inverse_relations_check(f, cfg))
        CHECK_MESSAGE(rc.max_gap <= 1e-8, rc.name, " alpha=", alpha);
    }
  }
  // constants: ABC = 0, so ABR must equal the correction term exactly
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const Signal c = Signal::constant(0, 9, 1.75);
  for (std::int64_t t = 1; t <= 9; ++t) {
    const double corr =
        c(0) * cfg.b() / (1.0 - cfg.alpha) * brute_e(cfg.alpha, cfg.lambda(), t - 0);
    CHECK(abr_left(c, cfg, t) == doctest::Approx(corr).epsilon(1e-10));
  }
  // alpha = 0 boundary: the kernels collapse and all relations hold exactly
  {
    nftest::SplitMix rng2(26);
    const Signal f = nftest::random_signal(rng2, 0, 11);
    for (const RelationCheck& rc : inverse_relations_check(f, ABConfig::unit_b(0.0)))
      CHECK_MESSAGE(rc.max_gap <= 1e-13, rc.name);
  }
}

TEST_CASE("series operators reject alpha >= 1/2") {
  const Signal f = Signal::constant(0, 5, 1.0);
  CHECK_THROWS_AS(abc_left(f, ABConfig::unit_b(0.5), 2), std::domain_error);
  CHECK_THROWS_AS(abr_series(f, ABConfig::unit_b(0.6), 2), std::domain_error);
  // AB sums accept the whole range
  CHECK_NOTHROW(ab_sum_left(f, ABConfig::unit_b(1.0), 3));
}

TEST_CASE("all six operators are linear") {
  nftest::SplitMix rng(25);
  const ABConfig cfg = ABConfig::unit_b(0.25);
  const Signal f = nftest::random_signal(rng, 0, 9);
  const Signal g = nftest::random_signal(rng, 0, 9);
  const Signal mix =
      Signal::tabulate(0, 9, [&](std::int64_t t) { return 1.5 * f(t) - 0.5 * g(t); });
  for (std::int64_t t = 2; t <= 8; ++t) {
    CHECK(abc_left(mix, cfg, t) ==
          doctest::Approx(1.5 * abc_left(f, cfg, t) - 0.5 * abc_left(g, cfg, t)).epsilon(1e-11));
    CHECK(abr_right(mix, cfg, t) ==
          doctest::Approx(1.5 * abr_right(f, cfg, t) - 0.5 * abr_right(g, cfg, t)).epsilon(1e-11));
    CHECK(ab_sum_left(mix, cfg, t) ==
          doctest::Approx(1.5 * ab_sum_left(f, cfg, t) - 0.5 * ab_sum_left(g, cfg, t))
              .epsilon(1e-12));
  }
}
