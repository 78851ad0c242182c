#include "doctest.h"

#include <cmath>

#include "nablafrac/solver.hpp"
#include "nablafrac/iterated.hpp"
#include "nablafrac/special.hpp"
#include "helpers.hpp"

using namespace nablafrac;

TEST_CASE("leading coefficient and the hand-unrolled first step") {
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const SeriesRHS rhs{{1.0}, 0.3};
  const SeriesSolution sol = solve_series(0.3, 1.0, 1.0, rhs, cfg, 25);
  CHECK(sol.coeffs[0] == doctest::Approx(0.7 / 1.7).epsilon(1e-15));
  CHECK(sol.coeffs[0] == doctest::Approx(0.4117647058823529).epsilon(1e-14));
  // c_1 = -c_0 binom(-1,1) B alpha Gamma(1) / ((1-a)^2 Gamma(1.3)) / denom,
  // frozen from 30-digit evaluation
  CHECK(sol.coeffs[1] == doctest::Approx(0.11566531230594829).epsilon(1e-13));
  const double by_hand =
      (0.0 - (1.0 / std::tgamma(1.3)) * sol.coeffs[0] * (-1.0) * 0.3 / (0.7 * 0.7)) /
      (1.0 + 1.0 / 0.7);
  CHECK(sol.coeffs[1] == doctest::Approx(by_hand).epsilon(1e-14));
}

TEST_CASE("zero rhs gives the zero solution") {
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const SeriesRHS rhs{{0.0, 0.0, 0.0}, 0.3};
  const SeriesSolution sol = solve_series(0.3, 1.2, 1.0, rhs, cfg, 20);
  for (double c : sol.coeffs) CHECK(c == 0.0);
  for (std::int64_t t = 0; t <= 8; ++t) CHECK(evaluate_solution(sol, t).value == 0.0);
  CHECK(residual_max(sol, rhs, cfg, 1, 6) == 0.0);
}

TEST_CASE("series evaluation") {
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const SeriesRHS rhs{{1.0}, 0.3};
  const SeriesSolution sol = solve_series(0.3, 1.0, 1.0, rhs, cfg, 25);
  // all rising powers vanish at t = 0 except the s = 0 term
  CHECK(evaluate_solution(sol, 0).value == doctest::Approx(sol.coeffs[0]).epsilon(1e-15));
  // direct oracle summation at small t
  for (std::int64_t t : {1, 2, 3}) {
    double brute = 0.0;
    for (std::size_t s = 0; s < sol.coeffs.size(); ++s)
      brute += sol.coeffs[s] * rising_function(t, 0.3 * double(s));
    CHECK(evaluate_solution(sol, t).value == doctest::Approx(brute).epsilon(1e-13));
  }
  CHECK(rhs_value(rhs, 5) == doctest::Approx(1.0));
}

TEST_CASE("residual of the truncated solution") {
  const Truncation tight{1e-11, 100000};
  {
    const ABConfig cfg = ABConfig::unit_b(0.3);
    const SeriesRHS rhs{{1.0}, 0.3};
    const SeriesSolution sol = solve_series(0.3, 1.0, 1.0, rhs, cfg, 25);
    CHECK(residual_max(sol, rhs, cfg, 1, 6, tight) <= 1e-6);
  }
  {
    const ABConfig cfg = ABConfig::unit_b(0.25);
    const SeriesRHS rhs{{1.0, 0.5}, 0.25};
    const SeriesSolution sol = solve_series(0.25, 1.5, 2.0, rhs, cfg, 30);
    CHECK(residual_max(sol, rhs, cfg, 1, 5, tight) <= 1e-5);
  }
}

TEST_CASE("mu = 1 reduces to the ABR difference equation") {
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const SeriesRHS rhs{{1.0}, 0.3};
  const SeriesSolution sol = solve_series(0.3, 1.0, 1.0, rhs, cfg, 25);
  const Signal x =
      Signal::tabulate(0, 6, [&](std::int64_t t) { return evaluate_solution(sol, t).value; });
  const Truncation tight{1e-11, 100000};
  for (std::int64_t t = 1; t <= 6; ++t)
    CHECK(std::abs(abr_left(x, cfg, t, tight) + 1.0 * x(t) - 1.0) <= 1e-6);
}

TEST_CASE("computed coefficients satisfy the m-th coefficient identity") {
  const double alpha = 0.3, mu = 1.4, A = 1.5;
  const ABConfig cfg = ABConfig::unit_b(alpha);
  const SeriesRHS rhs{{1.0, -0.3, 0.2}, alpha};
  const SeriesSolution sol = solve_series(alpha, mu, A, rhs, cfg, 12);
  for (std::int64_t m = 0; m <= 10; ++m) {
    double lhs = 0.0;
    for (std::int64_t k = 0; k <= m; ++k) {
      const double w = gen_binomial(-mu, k) * std::pow(alpha / (1 - alpha), double(k)) /
                       std::pow(1 - alpha, mu) *
                       std::exp(std::lgamma(double(m - k) * alpha + 1.0) -
                                std::lgamma(double(m) * alpha + 1.0));
      lhs += sol.coeffs[std::size_t(m - k)] * w;
    }
    const double bm = m < 3 ? rhs.coeffs[std::size_t(m)] : 0.0;
    CHECK(nftest::rel_gap(lhs, -A * sol.coeffs[std::size_t(m)] + bm) <= 1e-10);
  }
}

TEST_CASE("residual shrinks as more terms are kept") {
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const SeriesRHS rhs{{1.0}, 0.3};
  const Truncation tight{1e-11, 100000};
  double prev = 1e100;
  for (std::int64_t n : {8, 12, 16, 20}) {
    const SeriesSolution sol = solve_series(0.3, 1.0, 1.0, rhs, cfg, n);
    const double r = residual_max(sol, rhs, cfg, 1, 4, tight);
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("solution coefficients are linear in the rhs") {
  const ABConfig cfg = ABConfig::unit_b(0.35);
  const SeriesRHS r1{{1.0, 0.2}, 0.35};
  const SeriesRHS r2{{-0.5, 0.0, 0.7}, 0.35};
  const SeriesRHS mix{{2 * 1.0 + 3 * -0.5, 2 * 0.2 + 3 * 0.0, 2 * 0.0 + 3 * 0.7}, 0.35};
  const SeriesSolution s1 = solve_series(0.35, 1.2, 1.0, r1, cfg, 15);
  const SeriesSolution s2 = solve_series(0.35, 1.2, 1.0, r2, cfg, 15);
  const SeriesSolution sm = solve_series(0.35, 1.2, 1.0, mix, cfg, 15);
  for (std::size_t s = 0; s < 15; ++s)
    CHECK(sm.coeffs[s] == doctest::Approx(2 * s1.coeffs[s] + 3 * s2.coeffs[s]).epsilon(1e-12));
}

TEST_CASE("domain validation") {
  const ABConfig cfg = ABConfig::unit_b(0.3);
  const SeriesRHS rhs{{1.0}, 0.3};
  CHECK_THROWS_AS(solve_series(1.0, 1.0, 1.0, SeriesRHS{{1.0}, 1.0}, ABConfig::unit_b(1.0), 5),
                  std::domain_error);
  CHECK_THROWS_AS(solve_series(0.3, -1.0, 1.0, rhs, cfg, 5), std::domain_error);
  CHECK_THROWS_AS(solve_series(0.3, 1.0, -1.0, rhs, cfg, 5), std::domain_error);
  CHECK_THROWS_AS(solve_series(0.3, 1.0, 1.0, SeriesRHS{{1.0}, 0.4}, cfg, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate_solution(SeriesSolution{{1.0}, 0.3, 1.0, 1.0}, -1), std::domain_error);
}
