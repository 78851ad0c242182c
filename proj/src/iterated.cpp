// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#include "nablafrac/iterated.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nablafrac/errors.hpp"

namespace nablafrac {

namespace {

constexpr std::int64_t kMinTerms = 8;

void require_order(const IterOrder& ord, double b_norm) {
  if (!(ord.alpha >= 0.0 && ord.alpha <= 1.0))
    throw std::domain_error("iterated: alpha outside [0,1]");
  if (!(b_norm > 0.0)) throw std::domain_error("iterated: B(alpha) must be > 0");
  if (!std::isfinite(ord.mu)) throw std::domain_error("iterated: mu must be finite");
}

void require_series(const IterOrder& ord) {
  if (!(ord.alpha < 0.5))
    throw std::domain_error(
        "iterated: series path (mu not a nonnegative integer) needs alpha < 1/2");
}

// kernel(lag, nu) for lag = 1..L via the one-step recurrence.
void fill_kernel_column(std::vector<double>& w, double nu) {
  w[0] = 1.0;  // lag 1
  for (std::size_t lag = 1; lag < w.size(); ++lag)
    w[lag] = w[lag - 1] * (nu + static_cast<double>(lag) - 1.0) / static_cast<double>(lag);
}

// Adaptive driver for the binomial-of-operators form, left variant. Whole-grid
// evaluation: each k contributes c_k * nabla^{-k alpha} f at every output
// point, with the running |f|-weighted sums as the tail envelope.
IterResult iterated_series_left_impl(const Signal& f, std::int64_t a, const IterOrder& ord,
                                     double b_norm, const Truncation& tr) {
  const double alpha = ord.alpha, mu = ord.mu;
  const std::int64_t b = f.horizon();
  const auto len = static_cast<std::size_t>(b - a);
  std::vector<detail::Accumulator<double>> acc(len);

  double c = std::pow((1.0 - alpha) / b_norm, mu);
  for (std::size_t i = 0; i < len; ++i)
    acc[i].add(c * f(a + 1 + static_cast<std::int64_t>(i)));

  const double q_base = alpha / (1.0 - alpha);
  std::vector<double> w(len);
  for (std::int64_t k = 1; k <= tr.k_max; ++k) {
    c *= (mu - static_cast<double>(k - 1)) / static_cast<double>(k) * q_base;
    if (c == 0.0) {
      std::vector<double> out(len);
      for (std::size_t i = 0; i < len; ++i) out[i] = acc[i].value();
      return {Signal(a + 1, std::move(out)), k - 1, 0.0};
    }
    fill_kernel_column(w, static_cast<double>(k) * alpha);
    double env = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      const std::int64_t t = a + 1 + static_cast<std::int64_t>(i);
      detail::Accumulator<double> sum_k, abs_k;
      for (std::int64_t s = a + 1; s <= t; ++s) {
        const double wk = w[static_cast<std::size_t>(t - s)];
        sum_k.add(wk * f(s));
        abs_k.add(wk * std::abs(f(s)));
      }
      acc[i].add(c * sum_k.value());
      env = std::max(env, std::abs(c) * abs_k.value());
    }
    if (k >= kMinTerms) {
      const double growth = std::pow(static_cast<double>(k + 1) / static_cast<double>(k),
                                     static_cast<double>(len) - 1.0);
      const double coef_ratio =
          std::max(1.0, std::abs(mu - static_cast<double>(k)) / static_cast<double>(k + 1));
      const double q = q_base * coef_ratio * growth;
      if (q < 1.0) {
        const double bound = env * q / (1.0 - q);
        if (bound < tr.tol) {
          std::vector<double> out(len);
          for (std::size_t i = 0; i < len; ++i) out[i] = acc[i].value();
          return {Signal(a + 1, std::move(out)), k, bound};
        }
      }
    }
  }
  throw ConvergenceError("iterated_left: tail bound not met within k_max");
}

IterResult iterated_series_right_impl(const Signal& f, std::int64_t b, const IterOrder& ord,
                                      double b_norm, const Truncation& tr) {
  const double alpha = ord.alpha, mu = ord.mu;
  const std::int64_t a = f.origin();
  const auto len = static_cast<std::size_t>(b - a);
  std::vector<detail::Accumulator<double>> acc(len);

  double c = std::pow((1.0 - alpha) / b_norm, mu);
  for (std::size_t i = 0; i < len; ++i)
    acc[i].add(c * f(a + static_cast<std::int64_t>(i)));

  const double q_base = alpha / (1.0 - alpha);
  std::vector<double> w(len);
  for (std::int64_t k = 1; k <= tr.k_max; ++k) {
    c *= (mu - static_cast<double>(k - 1)) / static_cast<double>(k) * q_base;
    if (c == 0.0) {
      std::vector<double> out(len);
      for (std::size_t i = 0; i < len; ++i) out[i] = acc[i].value();
      return {Signal(a, std::move(out)), k - 1, 0.0};
    }
    fill_kernel_column(w, static_cast<double>(k) * alpha);
    double env = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      const std::int64_t t = a + static_cast<std::int64_t>(i);
      detail::Accumulator<double> sum_k, abs_k;
      for (std::int64_t s = t; s <= b - 1; ++s) {
        const double wk = w[static_cast<std::size_t>(s - t)];
        sum_k.add(wk * f(s));
        abs_k.add(wk * std::abs(f(s)));
      }
      acc[i].add(c * sum_k.value());
      env = std::max(env, std::abs(c) * abs_k.value());
    }
    if (k >= kMinTerms) {
      const double growth = std::pow(static_cast<double>(k + 1) / static_cast<double>(k),
                                     static_cast<double>(len) - 1.0);
      const double coef_ratio =
          std::max(1.0, std::abs(mu - static_cast<double>(k)) / static_cast<double>(k + 1));
      const double q = q_base * coef_ratio * growth;
      if (q < 1.0) {
        const double bound = env * q / (1.0 - q);
        if (bound < tr.tol) {
          std::vector<double> out(len);
          for (std::size_t i = 0; i < len; ++i) out[i] = acc[i].value();
          return {Signal(a, std::move(out)), k, bound};
        }
      }
    }
  }
  throw ConvergenceError("iterated_right: tail bound not met within k_max");
}

}  // namespace

IterResult iterated_left_from(const Signal& f, std::int64_t a, const IterOrder& ord,
                              const ABConfig& cfg, const Truncation& tr) {
  const double b_norm = cfg.b_func(ord.alpha);
  require_order(ord, b_norm);
  const std::int64_t b = f.horizon();
  if (f.origin() > a + 1) throw std::out_of_range("iterated_left: grid does not reach a+1");
  if (b < a + 1) throw std::invalid_argument("iterated_left: empty output grid");

  if (ord.alpha == 1.0) {
    // alpha -> 1 convention: nabla^{(-1,mu)} = nabla^{-mu} (plain fractional
    // sum / RL difference). Stated as a convention, not a theorem.
    if (ord.mu == 0.0)
      return {Signal::tabulate(a + 1, b, [&](std::int64_t t) { return f(t); }), 0, 0.0};
    if (ord.mu > 0.0)
      return {Signal::tabulate(a + 1, b,
                               [&](std::int64_t t) { return left_frac_sum_from(f, a, ord.mu, t); }),
              0, 0.0};
    if (f.origin() != a)
      throw std::domain_error("iterated_left: alpha=1 difference convention needs f stored from a");
    const auto n = static_cast<std::int64_t>(std::ceil(-ord.mu));
    return {Signal::tabulate(a + n, b,
                             [&](std::int64_t t) { return rl_frac_diff_left(f, -ord.mu, t); }),
            0, 0.0};
  }

  if (ord.finite_binomial()) {
    const auto mu_int = static_cast<std::int64_t>(std::llround(ord.mu));
    return {iterated_left_int_from(f, a, ord.alpha, mu_int, b_norm), mu_int, 0.0};
  }
  if (ord.alpha == 0.0) {
    // only the k = 0 term survives: ((1-0)/B(0))^mu f = f for B(0) = 1
    const double c0 = std::pow(1.0 / b_norm, ord.mu);
    return {Signal::tabulate(a + 1, b, [&](std::int64_t t) { return c0 * f(t); }), 0, 0.0};
  }
  require_series(ord);
  return iterated_series_left_impl(f, a, ord, b_norm, tr);
}

IterResult iterated_left(const Signal& f, const IterOrder& ord, const ABConfig& cfg,
                         const Truncation& tr) {
  return iterated_left_from(f, f.origin(), ord, cfg, tr);
}

IterResult iterated_right_to(const Signal& f, std::int64_t b, const IterOrder& ord,
                             const ABConfig& cfg, const Truncation& tr) {
  const double b_norm = cfg.b_func(ord.alpha);
  require_order(ord, b_norm);
  const std::int64_t a = f.origin();
  if (f.horizon() < b - 1) throw std::out_of_range("iterated_right: grid does not reach b-1");
  if (a > b - 1) throw std::invalid_argument("iterated_right: empty output grid");

  if (ord.alpha == 1.0) {
    if (ord.mu == 0.0)
      return {Signal::tabulate(a, b - 1, [&](std::int64_t t) { return f(t); }), 0, 0.0};
    if (ord.mu > 0.0)
      return {Signal::tabulate(a, b - 1,
                               [&](std::int64_t t) { return right_frac_sum_to(f, b, ord.mu, t); }),
              0, 0.0};
    throw std::domain_error("iterated_right: no alpha=1 convention for difference orders");
  }

  if (ord.finite_binomial()) {
    const auto mu_int = static_cast<std::int64_t>(std::llround(ord.mu));
    return {iterated_right_int_to(f, b, ord.alpha, mu_int, b_norm), mu_int, 0.0};
  }
  if (ord.alpha == 0.0) {
    const double c0 = std::pow(1.0 / b_norm, ord.mu);
    return {Signal::tabulate(a, b - 1, [&](std::int64_t t) { return c0 * f(t); }), 0, 0.0};
  }
  require_series(ord);
  return iterated_series_right_impl(f, b, ord, b_norm, tr);
}

IterResult iterated_right(const Signal& f, const IterOrder& ord, const ABConfig& cfg,
                          const Truncation& tr) {
  return iterated_right_to(f, f.horizon(), ord, cfg, tr);
}

IterResult iterated_kernel_left(const Signal& f, const IterOrder& ord, const ABConfig& cfg,
                                const Truncation& tr) {
  const double b_norm = cfg.b_func(ord.alpha);
  require_order(ord, b_norm);
  if (ord.alpha == 1.0)
    throw std::domain_error("iterated_kernel_left: alpha = 1 not representable in kernel form");
  if (!ord.finite_binomial()) require_series(ord);

  const std::int64_t a = f.origin(), b = f.horizon();
  if (b < a + 1) throw std::invalid_argument("iterated_kernel_left: empty output grid");
  const auto len = static_cast<std::size_t>(b - a);
  const double alpha = ord.alpha, mu = ord.mu;

  double abs_f_sum = 0.0;
  for (std::int64_t s = a + 1; s <= b; ++s) abs_f_sum += std::abs(f(s));

  // accumulate the lag weight w(lag) = sum_{k>=1} c_k kernel(lag, k alpha)
  std::vector<detail::Accumulator<double>> w_acc(len);
  std::vector<double> col(len);
  double c = std::pow((1.0 - alpha) / b_norm, mu);
  const double c_delta = c;
  const double q_base = alpha / (1.0 - alpha);
  std::int64_t k_used = 0;
  double tail = 0.0;
  bool converged = alpha == 0.0;
  for (std::int64_t k = 1; !converged && k <= tr.k_max; ++k) {
    c *= (mu - static_cast<double>(k - 1)) / static_cast<double>(k) * q_base;
    if (c == 0.0) {
      k_used = k - 1;
      converged = true;
      break;
    }
    fill_kernel_column(col, static_cast<double>(k) * alpha);
    double col_max = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      w_acc[i].add(c * col[i]);
      col_max = std::max(col_max, std::abs(c) * col[i]);
    }
    if (k >= kMinTerms) {
      const double growth = std::pow(static_cast<double>(k + 1) / static_cast<double>(k),
                                     static_cast<double>(len) - 1.0);
      const double coef_ratio =
          std::max(1.0, std::abs(mu - static_cast<double>(k)) / static_cast<double>(k + 1));
      const double q = q_base * coef_ratio * growth;
      if (q < 1.0) {
        const double bound = col_max * q / (1.0 - q) * abs_f_sum;
        if (bound < tr.tol) {
          k_used = k;
          tail = bound;
          converged = true;
        }
      }
    }
  }
  if (!converged) throw ConvergenceError("iterated_kernel_left: tail bound not met within k_max");

  std::vector<double> out;
  out.reserve(len);
  for (std::int64_t t = a + 1; t <= b; ++t) {
    detail::Accumulator<double> acc;
    acc.add(c_delta * f(t));  // delta term picks out s = t
    for (std::int64_t s = a + 1; s <= t; ++s)
      acc.add(f(s) * w_acc[static_cast<std::size_t>(t - s)].value());
    out.push_back(acc.value());
  }
  return {Signal(a + 1, std::move(out)), k_used, tail};
}

double monomial_image_left(const IterOrder& ord, const ABConfig& cfg, double gamma,
                           std::int64_t t_minus_a, const Truncation& tr) {
  const double b_norm = cfg.b_func(ord.alpha);
  require_order(ord, b_norm);
  if (!(gamma > 0.0)) throw std::domain_error("monomial_image: gamma must be > 0");
  if (t_minus_a < 1) throw std::out_of_range("monomial_image: t-a must be >= 1");
  if (ord.alpha == 1.0)
    throw std::domain_error("monomial_image: alpha = 1 not representable in series form");
  if (!ord.finite_binomial()) require_series(ord);

  const double alpha = ord.alpha, mu = ord.mu;
  const double gamma_fac = std::tgamma(gamma);
  const double q_base = alpha == 0.0 ? 0.0 : alpha / (1.0 - alpha);
  detail::Accumulator<double> acc;
  double c = std::pow((1.0 - alpha) / b_norm, mu);
  acc.add(c * gamma_fac * kernel(t_minus_a, gamma));
  for (std::int64_t k = 1; k <= tr.k_max; ++k) {
    c *= (mu - static_cast<double>(k - 1)) / static_cast<double>(k) * q_base;
    if (c == 0.0) return acc.value();
    const double term = c * gamma_fac * kernel(t_minus_a, gamma + static_cast<double>(k) * alpha);
    acc.add(term);
    if (k >= kMinTerms) {
      const double growth = std::pow(static_cast<double>(k + 1) / static_cast<double>(k),
                                     static_cast<double>(t_minus_a) - 1.0);
      const double coef_ratio =
          std::max(1.0, std::abs(mu - static_cast<double>(k)) / static_cast<double>(k + 1));
      const double q = q_base * coef_ratio * growth;
      if (q < 1.0 && std::abs(term) * q / (1.0 - q) < tr.tol) return acc.value();
    }
  }
  throw ConvergenceError("monomial_image: tail bound not met within k_max");
}

double monomial_image_right(const IterOrder& ord, const ABConfig& cfg, double gamma,
                            std::int64_t b_minus_t, const Truncation& tr) {
  // the right image of (b-t)^(rising gamma-1) has the same closed series with
  // b-t in place of t-a
  return monomial_image_left(ord, cfg, gamma, b_minus_t, tr);
}

IterResult semigroup_compose_left(const Signal& f, const IterOrder& ord1, const IterOrder& ord2,
                                  const ABConfig& cfg, const Truncation& tr) {
  if (ord1.alpha != ord2.alpha)
    throw std::invalid_argument("semigroup_compose: orders must share alpha");
  const std::int64_t a = f.origin();
  IterResult inner = iterated_left(f, ord2, cfg, tr);
  IterResult outer = iterated_left_from(inner.values, a, ord1, cfg, tr);
  return {std::move(outer.values), std::max(inner.k_used, outer.k_used),
          inner.tail_bound + outer.tail_bound};
}

IterResult semigroup_compose_right(const Signal& f, const IterOrder& ord1, const IterOrder& ord2,
                                   const ABConfig& cfg, const Truncation& tr) {
  if (ord1.alpha != ord2.alpha)
    throw std::invalid_argument("semigroup_compose: orders must share alpha");
  const std::int64_t b = f.horizon();
  IterResult inner = iterated_right(f, ord2, cfg, tr);
  IterResult outer = iterated_right_to(inner.values, b, ord1, cfg, tr);
  return {std::move(outer.values), std::max(inner.k_used, outer.k_used),
          inner.tail_bound + outer.tail_bound};
}

double integration_by_parts_gap(const Signal& f, const Signal& g, const IterOrder& ord,
                                const ABConfig& cfg, const Truncation& tr) {
  if (f.origin() != g.origin() || f.horizon() != g.horizon())
    throw std::invalid_argument("integration_by_parts: signals must share the grid");
  const std::int64_t a = f.origin(), b = f.horizon();
  if (b - a < 2) throw std::invalid_argument("integration_by_parts: grid too short");
  const Signal il = iterated_left(f, ord, cfg, tr).values;
  const Signal ir = iterated_right(g, ord, cfg, tr).values;
  detail::Accumulator<double> lhs, rhs;
  for (std::int64_t s = a + 1; s <= b - 1; ++s) {
    lhs.add(g(s) * il(s));
    rhs.add(f(s) * ir(s));
  }
  return std::abs(lhs.value() - rhs.value());
}

double laplace_symbol(const IterOrder& ord, const ABConfig& cfg, double z) {
  const double b_norm = cfg.b_func(ord.alpha);
  require_order(ord, b_norm);
  if (!(z > 0.0 && z < 2.0)) throw std::domain_error("laplace_symbol: z outside (0,2)");
  const double base =
      (1.0 - ord.alpha) / b_norm + ord.alpha / b_norm * std::pow(z, -ord.alpha);
  return std::pow(base, ord.mu);
}

}  // namespace nablafrac
