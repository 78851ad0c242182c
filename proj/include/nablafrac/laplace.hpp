// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#ifndef NABLAFRAC_LAPLACE_HPP_
#define NABLAFRAC_LAPLACE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nablafrac/signal.hpp"

namespace nablafrac {

/// A signal evaluable beyond any stored horizon, as the infinite transform
/// sum requires, together with a polynomial growth envelope: |f(s)| is
/// assumed to grow no faster than (s-a)^degree at the observed scale, which
/// is what makes the truncation tail bound finite.
struct Generator {
  std::function<double(std::int64_t)> f;  // defined for t >= a
  double degree = 0.0;

  static Generator constant(double value);
  static Generator from_signal(const Signal& s, double degree = 0.0);  // zero beyond horizon

  /// nabla^{-nu} of this generator summed from a (degree rises by nu).
  Generator frac_sum_from(std::int64_t a, double nu) const;
  /// backward difference (degree kept as a safe envelope).
  Generator nabla_from(std::int64_t a) const;
  /// nabla convolution with g from origin a.
  Generator convolve_from(std::int64_t a, const Generator& g) const;
};

/// One evaluated transform point of K_a f(z) = sum_{t>a} (1-z)^(t-a-1) f(t).
struct TransformPoint {
  double z = 0.0;
  double value = 0.0;
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;
};

/// Truncated evaluation of the nabla discrete Laplace transform; sums until
/// the geometric tail bound (guarded by the generator's growth envelope)
/// falls below tol. Requires |1-z| < 1. Throws ConvergenceError if the
/// horizon cap is hit first.
TransformPoint numeric_transform(const Generator& gen, std::int64_t a, double z,
                                 double tol = 1e-10, std::int64_t horizon_cap = 1000000);

/// K_a((t-a)^(rising mu-1))(z) = Gamma(mu)/z^mu.
double closed_monomial(double mu, double z);

/// K(t^(rising mu-1) b^(-t))(z) = b^(mu-1) Gamma(mu)/(z+b-1)^mu, |1-z| < b.
double closed_exp_monomial(double mu, double base, double z);

enum class MLTransform {
  OneParam,       // K_a E_alpha(lambda, t-a)       = z^(alpha-1)/(z^alpha - lambda)
  TwoParamAlpha,  // K_a E_{alpha,alpha}(lambda, t-a) = 1/(z^alpha - lambda)
};

double closed_ml(double alpha, double lambda, MLTransform which, double z);

struct RuleReport {
  std::string rule;
  double z = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double tol = 0.0;
  bool pass() const { return gap <= tol; }
};

/// Evaluate the three operational transform rules on a generator:
///   K(nabla^{-nu} f) = z^{-nu} K(f)
///   K(nabla f)       = z K(f) - f(a)
///   K(f * f)         = K(f)^2
std::vector<RuleReport> rule_checks(const Generator& fgen, std::int64_t a, double nu, double z,
                                    double tol = 1e-8);

}  // namespace nablafrac

#endif  // NABLAFRAC_LAPLACE_HPP_
