// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#ifndef NABLAFRAC_ITERATED_HPP_
#define NABLAFRAC_ITERATED_HPP_

#include <cmath>
#include <cstdint>

#include "nablafrac/ab.hpp"
#include "nablafrac/mittag_leffler.hpp"
#include "nablafrac/nabla_ops.hpp"
#include "nablafrac/signal.hpp"
#include "nablafrac/special.hpp"

namespace nablafrac {

/// Order (alpha, mu) of the iterated AB fractional difference-sum
///   nabla^{(-alpha,mu)} f = sum_k binom(mu,k) (1-alpha)^(mu-k) alpha^k
///                           B(alpha)^(-mu) nabla^{-k alpha} f.
/// Positive mu is sum-like, negative mu difference-like; mu in {0,1,-1}
/// recovers the identity, the AB sum, and the ABR difference. Unless mu is a
/// nonnegative integer (finite binomial) the series is infinite and needs
/// alpha < 1/2 to converge.
struct IterOrder {
  double alpha = 0.0;
  double mu = 0.0;

  bool finite_binomial() const {
    return mu >= 0.0 && mu == std::floor(mu);
  }
};

/// Grid values of an iterated operator plus the series bookkeeping.
struct IterResult {
  Signal values;
  std::int64_t k_used = 0;
  double tail_bound = 0.0;
};

// The order is taken from ord; cfg contributes the B normalization (its own
// alpha field is ignored here). Left results live on {a+1, ..., b}, right
// results on {a, ..., b-1}. The _from/_to variants fix the summation
// origin/horizon explicitly so compositions can consume result signals.

IterResult iterated_left(const Signal& f, const IterOrder& ord, const ABConfig& cfg,
                         const Truncation& tr = {});
IterResult iterated_left_from(const Signal& f, std::int64_t a, const IterOrder& ord,
                              const ABConfig& cfg, const Truncation& tr = {});
IterResult iterated_right(const Signal& f, const IterOrder& ord, const ABConfig& cfg,
                          const Truncation& tr = {});
IterResult iterated_right_to(const Signal& f, std::int64_t b, const IterOrder& ord,
                             const ABConfig& cfg, const Truncation& tr = {});

/// The equivalent kernel representation
///   sum_{s=a+1}^{t} f(s) [ ((1-alpha)/B)^mu delta_{t,s} +
///        sum_{k>=1} binom(mu,k)(1-alpha)^(mu-k) alpha^k B^(-mu) kernel(t-s+1, k alpha) ],
/// an independent summation order used to cross-validate iterated_left.
IterResult iterated_kernel_left(const Signal& f, const IterOrder& ord, const ABConfig& cfg,
                                const Truncation& tr = {});

/// Closed series for the image of the rising monomial (t-a)^(rising gamma-1):
///   sum_k binom(mu,k)(1-alpha)^(mu-k) alpha^k B^(-mu)
///         Gamma(gamma)/Gamma(gamma+k alpha) (t-a)^(rising gamma+k alpha-1).
double monomial_image_left(const IterOrder& ord, const ABConfig& cfg, double gamma,
                           std::int64_t t_minus_a, const Truncation& tr = {});
/// Mirror image for (b-t)^(rising gamma-1); same coefficients by reflection.
double monomial_image_right(const IterOrder& ord, const ABConfig& cfg, double gamma,
                            std::int64_t b_minus_t, const Truncation& tr = {});

/// Apply iterated(ord2) then iterated(ord1); by the semigroup law in mu the
/// result matches iterated with order (alpha, mu1+mu2). Orders must share
/// alpha.
IterResult semigroup_compose_left(const Signal& f, const IterOrder& ord1, const IterOrder& ord2,
                                  const ABConfig& cfg, const Truncation& tr = {});
IterResult semigroup_compose_right(const Signal& f, const IterOrder& ord1, const IterOrder& ord2,
                                   const ABConfig& cfg, const Truncation& tr = {});

/// | sum_{s=a+1}^{b-1} g(s) (iterated_left f)(s)
///   - sum_{s=a+1}^{b-1} f(s) (iterated_right g)(s) |
/// for signals sharing the grid {a, ..., b}.
double integration_by_parts_gap(const Signal& f, const Signal& g, const IterOrder& ord,
                                const ABConfig& cfg, const Truncation& tr = {});

/// Laplace-domain symbol of the iterated operator:
///   ((1-alpha)/B + (alpha/B) z^(-alpha))^mu,  z in (0, 2).
double laplace_symbol(const IterOrder& ord, const ABConfig& cfg, double z);

namespace detail {
inline double scalar_ipow(double x, std::int64_t e) {
  return std::pow(x, static_cast<double>(e));
}
inline Rational scalar_ipow(const Rational& x, std::int64_t e) { return rational_pow(x, e); }
}  // namespace detail

/// Finite-binomial path for nonnegative integer mu, generic over the scalar
/// type; with T = Rational this is the exact oracle for the integer-order
/// identities (n-fold AB sum, semigroup at integer orders).
template <typename T>
BasicSignal<T> iterated_left_int_from(const BasicSignal<T>& f, std::int64_t a,
                                      const std::type_identity_t<T>& alpha, std::int64_t mu,
                                      const std::type_identity_t<T>& b_norm) {
  if (mu < 0) throw std::domain_error("iterated_left_int: mu must be a nonnegative integer");
  if (!(alpha >= T(0)) || !(alpha <= T(1)))
    throw std::domain_error("iterated_left_int: alpha outside [0,1]");
  const std::int64_t b = f.horizon();
  if (a + 1 > b) throw std::invalid_argument("iterated_left_int: empty output grid");
  const T mu_t = T(mu);
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(b - a));
  for (std::int64_t t = a + 1; t <= b; ++t) {
    T acc = detail::scalar_ipow(T(1) - alpha, mu) * detail::scalar_ipow(b_norm, -mu) * f(t);
    if (alpha != T(0)) {
      for (std::int64_t k = 1; k <= mu; ++k) {
        const T coef = gen_binomial(mu_t, k) * detail::scalar_ipow(T(1) - alpha, mu - k) *
                       detail::scalar_ipow(alpha, k) * detail::scalar_ipow(b_norm, -mu);
        acc += coef * left_frac_sum_from(f, a, T(alpha * T(k)), t);
      }
    }
    out.push_back(acc);
  }
  return BasicSignal<T>(a + 1, std::move(out));
}

template <typename T>
BasicSignal<T> iterated_right_int_to(const BasicSignal<T>& f, std::int64_t b,
                                     const std::type_identity_t<T>& alpha, std::int64_t mu,
                                     const std::type_identity_t<T>& b_norm) {
  if (mu < 0) throw std::domain_error("iterated_right_int: mu must be a nonnegative integer");
  if (!(alpha >= T(0)) || !(alpha <= T(1)))
    throw std::domain_error("iterated_right_int: alpha outside [0,1]");
  const std::int64_t a = f.origin();
  if (a > b - 1) throw std::invalid_argument("iterated_right_int: empty output grid");
  const T mu_t = T(mu);
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(b - a));
  for (std::int64_t t = a; t <= b - 1; ++t) {
    T acc = detail::scalar_ipow(T(1) - alpha, mu) * detail::scalar_ipow(b_norm, -mu) * f(t);
    if (alpha != T(0)) {
      for (std::int64_t k = 1; k <= mu; ++k) {
        const T coef = gen_binomial(mu_t, k) * detail::scalar_ipow(T(1) - alpha, mu - k) *
                       detail::scalar_ipow(alpha, k) * detail::scalar_ipow(b_norm, -mu);
        acc += coef * right_frac_sum_to(f, b, T(alpha * T(k)), t);
      }
    }
    out.push_back(acc);
  }
  return BasicSignal<T>(a, std::move(out));
}

}  // namespace nablafrac

#endif  // NABLAFRAC_ITERATED_HPP_
