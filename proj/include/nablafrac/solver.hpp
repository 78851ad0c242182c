// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#ifndef NABLAFRAC_SOLVER_HPP_
#define NABLAFRAC_SOLVER_HPP_

#include <cstdint>
#include <vector>

#include "nablafrac/ab.hpp"
#include "nablafrac/mittag_leffler.hpp"

namespace nablafrac {

/// Right-hand side b(t) = sum_s b_s t^(rising alpha*s) of the difference
/// equation below, given by its coefficient list.
struct SeriesRHS {
  std::vector<double> coeffs;
  double alpha = 0.0;
};

/// Truncated series solution x(t) = sum_s c_s t^(rising alpha*s) of
///   nabla^{(-alpha,-mu)} x(t) = -A x(t) + b(t)   on N_0.
struct SeriesSolution {
  std::vector<double> coeffs;
  double alpha = 0.0;
  double mu = 0.0;
  double A = 0.0;
};

/// Solve the equation by the coefficient recursion
///   c_0 = b_0 / (A + (B/(1-alpha))^mu)
///   c_m = [ b_m - (1/Gamma(m alpha + 1)) sum_{k=1}^{m} c_{m-k} binom(-mu,k)
///           B^mu alpha^k Gamma((m-k) alpha + 1) / (1-alpha)^(mu+k) ]
///         / (A + (B/(1-alpha))^mu),
/// computed in ascending m. Requires alpha in (0,1), mu > 0, A > 0.
SeriesSolution solve_series(double alpha, double mu, double A, const SeriesRHS& rhs,
                            const ABConfig& cfg, std::int64_t n_terms);

/// A series evaluation plus the magnitude of the last retained term, the
/// caller's handle on where the truncated series can be trusted (the series
/// has no known convergence region in t; small last_term relative to the
/// value is the working criterion).
struct SeriesEval {
  double value = 0.0;
  double last_term = 0.0;
};

SeriesEval evaluate_solution(const SeriesSolution& sol, std::int64_t t);

double rhs_value(const SeriesRHS& rhs, std::int64_t t);

/// max over t in {t_lo..t_hi} of |nabla^{(-alpha,-mu)} x(t) + A x(t) - b(t)|
/// with x tabulated from the truncated solution.
double residual_max(const SeriesSolution& sol, const SeriesRHS& rhs, const ABConfig& cfg,
                    std::int64_t t_lo, std::int64_t t_hi, const Truncation& tr = {});

}  // namespace nablafrac

#endif  // NABLAFRAC_SOLVER_HPP_
