// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#ifndef NABLAFRAC_NABLA_OPS_HPP_
#define NABLAFRAC_NABLA_OPS_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "nablafrac/signal.hpp"
#include "nablafrac/special.hpp"

namespace nablafrac {

namespace detail {

// Neumaier-compensated accumulation for the float path; plain sums otherwise.
// Sums run in ascending s so results are reproducible across platforms.
template <typename T>
struct Accumulator {
  T sum{};
  void add(const T& x) { sum += x; }
  T value() const { return sum; }
};

template <>
struct Accumulator<double> {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

template <typename T>
void require_positive_order(const T& mu, const char* who) {
  if (!(mu > T(0))) throw std::domain_error(std::string(who) + ": order must be > 0");
}

}  // namespace detail

/// Left nabla fractional sum of order mu > 0, summed from the explicit
/// origin a: (1/Gamma(mu)) sum_{s=a+1}^{t} (t-s+1)^(rising mu-1) f(s).
/// The stored signal must cover {a+1, ..., t}; f(a) is never read.
template <typename T>
T left_frac_sum_from(const BasicSignal<T>& f, std::int64_t a,
                     const std::type_identity_t<T>& mu, std::int64_t t) {
  detail::require_positive_order(mu, "left_frac_sum");
  if (t < a + 1 || t > f.horizon())
    throw std::out_of_range("left_frac_sum: t outside {a+1, ..., b}");
  if (a + 1 < f.origin()) throw std::out_of_range("left_frac_sum: grid does not reach a+1");
  detail::Accumulator<T> acc;
  for (std::int64_t s = a + 1; s <= t; ++s) acc.add(kernel(t - s + 1, mu) * f(s));
  return acc.value();
}

template <typename T>
T left_frac_sum(const BasicSignal<T>& f, const std::type_identity_t<T>& mu, std::int64_t t) {
  return left_frac_sum_from(f, f.origin(), mu, t);
}

/// Right nabla fractional sum of order mu > 0 finishing at the explicit
/// horizon b: (1/Gamma(mu)) sum_{s=t}^{b-1} (s-t+1)^(rising mu-1) f(s).
/// The stored signal must cover {t, ..., b-1}; f(b) is never read.
template <typename T>
T right_frac_sum_to(const BasicSignal<T>& f, std::int64_t b,
                    const std::type_identity_t<T>& mu, std::int64_t t) {
  detail::require_positive_order(mu, "right_frac_sum");
  if (t < f.origin() || t > b - 1)
    throw std::out_of_range("right_frac_sum: t outside {a, ..., b-1}");
  if (b - 1 > f.horizon()) throw std::out_of_range("right_frac_sum: grid does not reach b-1");
  detail::Accumulator<T> acc;
  for (std::int64_t s = t; s <= b - 1; ++s) acc.add(kernel(s - t + 1, mu) * f(s));
  return acc.value();
}

template <typename T>
T right_frac_sum(const BasicSignal<T>& f, const std::type_identity_t<T>& mu, std::int64_t t) {
  return right_frac_sum_to(f, f.horizon(), mu, t);
}

/// Nabla discrete convolution (f*g)(v) = sum_{s=a+1}^{v} g(v-s+1+a) f(s),
/// defined on {a+1, ..., b}. Both signals must share the origin.
template <typename T>
BasicSignal<T> convolve(const BasicSignal<T>& f, const BasicSignal<T>& g) {
  if (f.origin() != g.origin())
    throw std::invalid_argument("convolve: signals must share their origin");
  if (g.horizon() < f.horizon())
    throw std::invalid_argument("convolve: g too short for f's horizon");
  const std::int64_t a = f.origin(), b = f.horizon();
  if (b < a + 1) throw std::invalid_argument("convolve: need at least two grid points");
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(b - a));
  for (std::int64_t v = a + 1; v <= b; ++v) {
    detail::Accumulator<T> acc;
    for (std::int64_t s = a + 1; s <= v; ++s) acc.add(g(v - s + 1 + a) * f(s));
    out.push_back(acc.value());
  }
  return BasicSignal<T>(a + 1, std::move(out));
}

/// Riemann-Liouville left fractional difference of order mu > 0, the
/// composition nabla^n of the left sum of order n-mu with n = ceil(mu).
/// Plumbing for the alpha -> 1 convention; defined for t >= a + n, with the
/// inner sum extended by its empty value 0 at t = a.
inline double rl_frac_diff_left(const Signal& f, double mu, std::int64_t t) {
  if (!(mu > 0)) throw std::domain_error("rl_frac_diff_left: order must be > 0");
  const auto n = static_cast<std::int64_t>(std::ceil(mu));
  const std::int64_t a = f.origin();
  if (t < a + n || t > f.horizon())
    throw std::out_of_range("rl_frac_diff_left: t outside {a+ceil(mu), ..., b}");
  std::vector<double> g;
  const double inner = static_cast<double>(n) - mu;
  if (inner == 0.0) {
    g.assign(f.values().begin(), f.values().end());
  } else {
    g.reserve(f.size());
    g.push_back(0.0);  // empty sum at t = a
    for (std::int64_t s = a + 1; s <= f.horizon(); ++s)
      g.push_back(left_frac_sum(f, inner, s));
  }
  for (std::int64_t round = 0; round < n; ++round) {
    for (std::size_t i = g.size() - 1; i >= 1; --i) g[i] -= g[i - 1];
    g.erase(g.begin());
  }
  // g now starts at a + n
  return g[static_cast<std::size_t>(t - a - n)];
}

}  // namespace nablafrac

#endif  // NABLAFRAC_NABLA_OPS_HPP_
