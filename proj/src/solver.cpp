// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#include "nablafrac/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "nablafrac/iterated.hpp"
#include "nablafrac/nabla_ops.hpp"
#include "nablafrac/special.hpp"

namespace nablafrac {

namespace {

double series_eval(const std::vector<double>& coeffs, double alpha, std::int64_t t,
                   double* last_term) {
  detail::Accumulator<double> acc;
  double last = 0.0;
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    const double term =
        coeffs[s] * rising_function(t, alpha * static_cast<double>(s));
    acc.add(term);
    last = term;
  }
  if (last_term) *last_term = std::abs(last);
  return acc.value();
}

}  // namespace

SeriesSolution solve_series(double alpha, double mu, double A, const SeriesRHS& rhs,
                            const ABConfig& cfg, std::int64_t n_terms) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("solve_series: alpha must lie in (0,1)");
  if (!(mu > 0.0)) throw std::domain_error("solve_series: mu must be > 0");
  if (!(A > 0.0)) throw std::domain_error("solve_series: A must be > 0");
  if (n_terms < 1) throw std::domain_error("solve_series: need at least one term");
  if (rhs.alpha != alpha)
    throw std::invalid_argument("solve_series: rhs expansion uses a different alpha");
  const double b_norm = cfg.b_func(alpha);
  if (!(b_norm > 0.0)) throw std::domain_error("solve_series: B(alpha) must be > 0");

  const double denom = A + std::pow(b_norm / (1.0 - alpha), mu);
  if (denom == 0.0 || !std::isfinite(denom))
    throw std::domain_error("solve_series: A + (B/(1-alpha))^mu is singular");

  auto b_at = [&](std::int64_t m) {
    return m < static_cast<std::int64_t>(rhs.coeffs.size())
               ? rhs.coeffs[static_cast<std::size_t>(m)]
               : 0.0;
  };

  std::vector<double> c(static_cast<std::size_t>(n_terms), 0.0);
  c[0] = b_at(0) / denom;
  const double b_pow_mu = std::pow(b_norm, mu);
  const double one_minus_pow_mu = std::pow(1.0 - alpha, mu);
  const double ratio = alpha / (1.0 - alpha);
  for (std::int64_t m = 1; m < n_terms; ++m) {
    const double lg_m = std::lgamma(static_cast<double>(m) * alpha + 1.0);
    detail::Accumulator<double> acc;
    for (std::int64_t k = 1; k <= m; ++k) {
      const double lg_mk = std::lgamma(static_cast<double>(m - k) * alpha + 1.0);
      const double w = gen_binomial(-mu, k) * b_pow_mu / one_minus_pow_mu *
                       std::pow(ratio, static_cast<double>(k)) * std::exp(lg_mk - lg_m);
      acc.add(c[static_cast<std::size_t>(m - k)] * w);
    }
    c[static_cast<std::size_t>(m)] = (b_at(m) - acc.value()) / denom;
  }
  return {std::move(c), alpha, mu, A};
}

SeriesEval evaluate_solution(const SeriesSolution& sol, std::int64_t t) {
  if (t < 0) throw std::domain_error("evaluate_solution: t must be >= 0");
  SeriesEval out;
  out.value = series_eval(sol.coeffs, sol.alpha, t, &out.last_term);
  return out;
}

double rhs_value(const SeriesRHS& rhs, std::int64_t t) {
  if (t < 0) throw std::domain_error("rhs_value: t must be >= 0");
  return series_eval(rhs.coeffs, rhs.alpha, t, nullptr);
}

double residual_max(const SeriesSolution& sol, const SeriesRHS& rhs, const ABConfig& cfg,
                    std::int64_t t_lo, std::int64_t t_hi, const Truncation& tr) {
  if (t_lo < 1 || t_hi < t_lo) throw std::domain_error("residual_max: need 1 <= t_lo <= t_hi");
  const Signal x = Signal::tabulate(0, t_hi, [&](std::int64_t t) {
    return evaluate_solution(sol, t).value;
  });
  const IterOrder ord{sol.alpha, -sol.mu};
  const Signal lhs = iterated_left(x, ord, cfg, tr).values;
  double worst = 0.0;
  for (std::int64_t t = t_lo; t <= t_hi; ++t)
    worst = std::max(worst, std::abs(lhs(t) + sol.A * x(t) - rhs_value(rhs, t)));
  return worst;
}

}  // namespace nablafrac
