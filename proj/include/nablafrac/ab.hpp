// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#ifndef NABLAFRAC_AB_HPP_
#define NABLAFRAC_AB_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nablafrac/mittag_leffler.hpp"
#include "nablafrac/nabla_ops.hpp"
#include "nablafrac/signal.hpp"

namespace nablafrac {

/// Shared configuration of the AB operator family: the order alpha in [0,1]
/// and the normalization B(alpha) > 0. The normalization is not pinned down
/// by the theory (every identity holds for any positive B); the default is
/// B = 1, with B(alpha) = 1 - alpha + alpha/Gamma(alpha) as the common
/// alternative. lambda = -alpha/(1-alpha) is the Mittag-Leffler argument of
/// all kernels; series-based operators need |lambda| < 1, i.e. alpha < 1/2.
struct ABConfig {
  double alpha = 0.0;
  std::function<double(double)> b_func = [](double) { return 1.0; };

  double b() const { return b_func(alpha); }
  double lambda() const { return -alpha / (1.0 - alpha); }

  static ABConfig unit_b(double alpha);
  static ABConfig standard_b(double alpha);

  void require_order_range() const;   // 0 <= alpha <= 1, B(alpha) > 0
  void require_series_domain() const; // additionally alpha < 1/2
};

// AB fractional differences of Caputo (ABC) and Riemann-Liouville (ABR)
// type, left and right. Point evaluators take the grid point t; _grid
// variants evaluate the whole admissible range at once (left ops live on
// {a+1, ..., b}, right ops on {a, ..., b-1}). The _from/_to variants take an
// explicit summation origin/horizon so operator compositions can run on
// result signals whose storage starts at a+1 (or ends at b-1).

double abc_left(const Signal& f, const ABConfig& cfg, std::int64_t t, const Truncation& tr = {});
double abr_left(const Signal& f, const ABConfig& cfg, std::int64_t t, const Truncation& tr = {});
double abc_right(const Signal& f, const ABConfig& cfg, std::int64_t t, const Truncation& tr = {});
double abr_right(const Signal& f, const ABConfig& cfg, std::int64_t t, const Truncation& tr = {});

Signal abc_left_grid(const Signal& f, const ABConfig& cfg, const Truncation& tr = {});
Signal abr_left_grid(const Signal& f, const ABConfig& cfg, const Truncation& tr = {});
Signal abc_right_grid(const Signal& f, const ABConfig& cfg, const Truncation& tr = {});
Signal abr_right_grid(const Signal& f, const ABConfig& cfg, const Truncation& tr = {});

Signal abr_left_grid_from(const Signal& f, std::int64_t a, const ABConfig& cfg,
                          const Truncation& tr = {});
Signal abr_right_grid_to(const Signal& f, std::int64_t b, const ABConfig& cfg,
                         const Truncation& tr = {});

/// AB fractional sums, the two-term inverses of the ABR differences:
/// left:  ((1-alpha)/B) f(t) + (alpha/B) nabla^{-alpha} f(t).
/// Finite formulas, valid for the whole range alpha in [0,1]. Generic over
/// the scalar type so the exact-rational oracle can run the same code.
template <typename T>
T ab_sum_left_from(const BasicSignal<T>& f, std::int64_t a,
                   const std::type_identity_t<T>& alpha, const std::type_identity_t<T>& b_norm,
                   std::int64_t t) {
  if (t < a + 1 || t > f.horizon())
    throw std::out_of_range("ab_sum_left: t outside {a+1, ..., b}");
  const T first = (T(1) - alpha) / b_norm * f(t);
  if (alpha == T(0)) return first;
  return first + alpha / b_norm * left_frac_sum_from(f, a, alpha, t);
}

template <typename T>
T ab_sum_right_to(const BasicSignal<T>& f, std::int64_t b,
                  const std::type_identity_t<T>& alpha, const std::type_identity_t<T>& b_norm,
                  std::int64_t t) {
  if (t < f.origin() || t > b - 1)
    throw std::out_of_range("ab_sum_right: t outside {a, ..., b-1}");
  const T first = (T(1) - alpha) / b_norm * f(t);
  if (alpha == T(0)) return first;
  return first + alpha / b_norm * right_frac_sum_to(f, b, alpha, t);
}

double ab_sum_left(const Signal& f, const ABConfig& cfg, std::int64_t t);
double ab_sum_right(const Signal& f, const ABConfig& cfg, std::int64_t t);
Signal ab_sum_left_grid(const Signal& f, const ABConfig& cfg);
Signal ab_sum_right_grid(const Signal& f, const ABConfig& cfg);

/// ABR left difference through its fractional-sum series representation
///   (B/(1-alpha)) [ f(t) + sum_{k>=1} lambda^k nabla^{-k alpha} f(t) ],
/// an independent code path from abr_left used for cross-validation.
SeriesValue abr_series(const Signal& f, const ABConfig& cfg, std::int64_t t,
                       const Truncation& tr = {});

struct RelationCheck {
  std::string name;
  double max_gap = 0.0;
};

/// Evaluate the six relations tying the AB differences and sums together
/// (ABR o AB-sum = id, AB-sum o ABR = id, left and right; ABC = ABR minus
/// the boundary Mittag-Leffler correction, left and right). Composed
/// identities are measured on interior grid points.
std::vector<RelationCheck> inverse_relations_check(const Signal& f, const ABConfig& cfg,
                                                   const Truncation& tr = {});

}  // namespace nablafrac

#endif  // NABLAFRAC_AB_HPP_
