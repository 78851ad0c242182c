// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#ifndef NABLAFRAC_MITTAG_LEFFLER_HPP_
#define NABLAFRAC_MITTAG_LEFFLER_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace nablafrac {

/// Parameters of the nabla discrete Mittag-Leffler function
///   E^rho_{alpha,beta}(lambda, v) =
///     sum_k (rho)_k lambda^k v^(rising k*alpha+beta-1) / (k! Gamma(k*alpha+beta)).
/// One- and two-parameter forms are beta = rho = 1 and rho = 1; all three run
/// through the same code path. The series converges for |lambda| < 1.
struct MLParams {
  double alpha;
  double beta = 1.0;
  double rho = 1.0;
  double lambda = 0.0;
};

/// Adaptive series truncation control shared by every infinite-series
/// operator in the library.
struct Truncation {
  double tol = 1e-12;
  std::int64_t k_max = 10000;
};

/// A truncated series value together with how it was obtained.
struct SeriesValue {
  double value = 0.0;
  std::int64_t k_used = 0;
  double tail_bound = 0.0;
};

/// Evaluate E^rho_{alpha,beta}(lambda, v) at grid point v >= 0.
///
/// For rho = 1 (and beta > 0) the k-series resums exactly into a finite
/// grid recurrence, which is what makes negative lambda computable: the raw
/// alternating series peaks many orders of magnitude above its value. The
/// result is then exact up to roundoff (tail_bound 0, k_used = v).
///
/// Otherwise terms are summed directly as
/// (rho)_k lambda^k / k! * kernel(v, k*alpha+beta); the loop stops at the
/// first k >= 8 where the guarded geometric tail bound |term_k| * q/(1-q)
/// drops below tol, with q = |lambda| * C and
/// C = ((k+1)/k)^(v-1) * max(1, (rho+k)/(k+1)) compensating the polynomial
/// growth of the kernel factor. Throws ConvergenceError past k_max.
///
/// At v = 0 the value is 1 for beta = 1 (the k = 0 identity term under the
/// 0^(rising 0) = 1 convention) and 0 otherwise.
SeriesValue ml_eval(const MLParams& p, std::int64_t v, const Truncation& tr = {});

/// The direct k-series regardless of rho; the cross-validation route for the
/// resummed path (only usable where the series is well conditioned).
SeriesValue ml_eval_series(const MLParams& p, std::int64_t v, const Truncation& tr = {});

/// Convenience: the value alone.
double ml(const MLParams& p, std::int64_t v, const Truncation& tr = {});

/// Both sides of one evaluated identity.
struct IdentityGap {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap() const;
};

/// Evaluate the four difference/summation identities of the discrete
/// Mittag-Leffler family at grid point v >= 1 (origin a = 0):
///   nabla_v E_alpha(lambda, v)            = lambda E_{alpha,alpha}(lambda, v)
///   nabla_v E^rho_{alpha,beta}(lambda, v) = E^rho_{alpha,beta-1}(lambda, v)
///   sum_{t=1}^{v} E_{alpha,beta}(lambda, t) = E_{alpha,beta+1}(lambda, v)
///   nabla^{-gamma} E^rho_{alpha,beta}(lambda, .) (v) = E^rho_{alpha,beta+gamma}(lambda, v)
std::vector<IdentityGap> ml_forward_identities(const MLParams& p, std::int64_t v,
                                               double gamma = 1.0, const Truncation& tr = {});

}  // namespace nablafrac

#endif  // NABLAFRAC_MITTAG_LEFFLER_HPP_
