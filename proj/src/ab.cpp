// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#include "nablafrac/ab.hpp"

#include <cmath>
#include <stdexcept>

#include "nablafrac/errors.hpp"
#include "nablafrac/special.hpp"

namespace nablafrac {

namespace {

constexpr std::int64_t kMinTerms = 8;

// E_alpha(lambda, v) for v = 0..v_max. lambda = 0 short-circuits to 1 so the
// alpha = 0 boundary works without evaluating the series.
std::vector<double> e_table(const ABConfig& cfg, std::int64_t v_max, const Truncation& tr) {
  std::vector<double> e(static_cast<std::size_t>(v_max) + 1, 1.0);
  const double lambda = cfg.lambda();
  if (lambda == 0.0) return e;
  const MLParams p{cfg.alpha, 1.0, 1.0, lambda};
  for (std::int64_t v = 1; v <= v_max; ++v) e[static_cast<std::size_t>(v)] = ml(p, v, tr);
  return e;
}

void check_left_range(const Signal& f, std::int64_t a, std::int64_t t, const char* who) {
  if (f.origin() > a + 1) throw std::out_of_range(std::string(who) + ": grid does not reach a+1");
  if (t < a + 1 || t > f.horizon())
    throw std::out_of_range(std::string(who) + ": t outside {a+1, ..., b}");
}

void check_right_range(const Signal& f, std::int64_t b, std::int64_t t, const char* who) {
  if (f.horizon() < b - 1) throw std::out_of_range(std::string(who) + ": grid does not reach b-1");
  if (t < f.origin() || t > b - 1)
    throw std::out_of_range(std::string(who) + ": t outside {a, ..., b-1}");
}

// Inner kernel sum S(tau) = sum_{s=a+1}^{tau} f(s) E(lambda, tau-s+1), S(a) = 0.
double inner_left_sum(const Signal& f, std::int64_t a, std::int64_t tau,
                      const std::vector<double>& e) {
  detail::Accumulator<double> acc;
  for (std::int64_t s = a + 1; s <= tau; ++s)
    acc.add(f(s) * e[static_cast<std::size_t>(tau - s + 1)]);
  return acc.value();
}

// Mirror sum R(tau) = sum_{s=tau}^{b-1} f(s) E(lambda, s-tau+1), R(b) = 0.
double inner_right_sum(const Signal& f, std::int64_t b, std::int64_t tau,
                       const std::vector<double>& e) {
  detail::Accumulator<double> acc;
  for (std::int64_t s = tau; s <= b - 1; ++s)
    acc.add(f(s) * e[static_cast<std::size_t>(s - tau + 1)]);
  return acc.value();
}

}  // namespace

ABConfig ABConfig::unit_b(double alpha) { return ABConfig{alpha, [](double) { return 1.0; }}; }

ABConfig ABConfig::standard_b(double alpha) {
  return ABConfig{alpha, [](double a) {
                    return a == 0.0 ? 1.0 : 1.0 - a + a / std::tgamma(a);
                  }};
}

void ABConfig::require_order_range() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("ABConfig: alpha outside [0,1]");
  if (!(b() > 0.0)) throw std::domain_error("ABConfig: B(alpha) must be > 0");
}

void ABConfig::require_series_domain() const {
  require_order_range();
  if (!(alpha < 0.5))
    throw std::domain_error("AB series operators need alpha < 1/2 (kernel convergence)");
}

double abc_left(const Signal& f, const ABConfig& cfg, std::int64_t t, const Truncation& tr) {
  cfg.require_series_domain();
  const std::int64_t a = f.origin();
  check_left_range(f, a, t, "abc_left");
  const auto e = e_table(cfg, t - a, tr);
  detail::Accumulator<double> acc;
  for (std::int64_t s = a + 1; s <= t; ++s)
    acc.add((f(s) - f(s - 1)) * e[static_cast<std::size_t>(t - s + 1)]);
  return cfg.b() / (1.0 - cfg.alpha) * acc.value();
}

double abr_left(const Signal& f, const ABConfig& cfg, std::int64_t t, const Truncation& tr) {
  cfg.require_series_domain();
  const std::int64_t a = f.origin();
  check_left_range(f, a, t, "abr_left");
  const auto e = e_table(cfg, t - a, tr);
  const double st = inner_left_sum(f, a, t, e);
  const double st1 = t - 1 == a ? 0.0 : inner_left_sum(f, a, t - 1, e);
  return cfg.b() / (1.0 - cfg.alpha) * (st - st1);
}

double abc_right(const Signal& f, const ABConfig& cfg, std::int64_t t, const Truncation& tr) {
  cfg.require_series_domain();
  const std::int64_t b = f.horizon();
  check_right_range(f, b, t, "abc_right");
  const auto e = e_table(cfg, b - t, tr);
  detail::Accumulator<double> acc;
  for (std::int64_t s = t; s <= b - 1; ++s)
    acc.add((f(s) - f(s + 1)) * e[static_cast<std::size_t>(s - t + 1)]);
  return cfg.b() / (1.0 - cfg.alpha) * acc.value();
}

double abr_right(const Signal& f, const ABConfig& cfg, std::int64_t t, const Truncation& tr) {
  cfg.require_series_domain();
  const std::int64_t b = f.horizon();
  check_right_range(f, b, t, "abr_right");
  const auto e = e_table(cfg, b - t, tr);
  const double rt = inner_right_sum(f, b, t, e);
  const double rt1 = t + 1 == b ? 0.0 : inner_right_sum(f, b, t + 1, e);
  return cfg.b() / (1.0 - cfg.alpha) * (rt - rt1);
}

Signal abr_left_grid_from(const Signal& f, std::int64_t a, const ABConfig& cfg,
                          const Truncation& tr) {
  cfg.require_series_domain();
  const std::int64_t b = f.horizon();
  check_left_range(f, a, a + 1, "abr_left_grid");
  const auto e = e_table(cfg, b - a, tr);
  const double scale = cfg.b() / (1.0 - cfg.alpha);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(b - a));
  double prev = 0.0;  // S(a), empty sum
  for (std::int64_t t = a + 1; t <= b; ++t) {
    const double st = inner_left_sum(f, a, t, e);
    out.push_back(scale * (st - prev));
    prev = st;
  }
  return Signal(a + 1, std::move(out));
}

Signal abr_left_grid(const Signal& f, const ABConfig& cfg, const Truncation& tr) {
  return abr_left_grid_from(f, f.origin(), cfg, tr);
}

Signal abr_right_grid_to(const Signal& f, std::int64_t b, const ABConfig& cfg,
                         const Truncation& tr) {
  cfg.require_series_domain();
  const std::int64_t a = f.origin();
  check_right_range(f, b, a, "abr_right_grid");
  const auto e = e_table(cfg, b - a, tr);
  const double scale = cfg.b() / (1.0 - cfg.alpha);
  std::vector<double> out(static_cast<std::size_t>(b - a));
  double next = 0.0;  // R(b), empty sum
  for (std::int64_t t = b - 1; t >= a; --t) {
    const double rt = inner_right_sum(f, b, t, e);
    out[static_cast<std::size_t>(t - a)] = scale * (rt - next);
    next = rt;
  }
  return Signal(a, std::move(out));
}

Signal abr_right_grid(const Signal& f, const ABConfig& cfg, const Truncation& tr) {
  return abr_right_grid_to(f, f.horizon(), cfg, tr);
}

Signal abc_left_grid(const Signal& f, const ABConfig& cfg, const Truncation& tr) {
  cfg.require_series_domain();
  const std::int64_t a = f.origin(), b = f.horizon();
  if (b < a + 1) throw std::invalid_argument("abc_left_grid: need at least two points");
  const auto e = e_table(cfg, b - a, tr);
  const double scale = cfg.b() / (1.0 - cfg.alpha);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(b - a));
  for (std::int64_t t = a + 1; t <= b; ++t) {
    detail::Accumulator<double> acc;
    for (std::int64_t s = a + 1; s <= t; ++s)
      acc.add((f(s) - f(s - 1)) * e[static_cast<std::size_t>(t - s + 1)]);
    out.push_back(scale * acc.value());
  }
  return Signal(a + 1, std::move(out));
}

Signal abc_right_grid(const Signal& f, const ABConfig& cfg, const Truncation& tr) {
  cfg.require_series_domain();
  const std::int64_t a = f.origin(), b = f.horizon();
  if (b < a + 1) throw std::invalid_argument("abc_right_grid: need at least two points");
  const auto e = e_table(cfg, b - a, tr);
  const double scale = cfg.b() / (1.0 - cfg.alpha);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(b - a));
  for (std::int64_t t = a; t <= b - 1; ++t) {
    detail::Accumulator<double> acc;
    for (std::int64_t s = t; s <= b - 1; ++s)
      acc.add((f(s) - f(s + 1)) * e[static_cast<std::size_t>(s - t + 1)]);
    out.push_back(scale * acc.value());
  }
  return Signal(a, std::move(out));
}

double ab_sum_left(const Signal& f, const ABConfig& cfg, std::int64_t t) {
  cfg.require_order_range();
  return ab_sum_left_from(f, f.origin(), cfg.alpha, cfg.b(), t);
}

double ab_sum_right(const Signal& f, const ABConfig& cfg, std::int64_t t) {
  cfg.require_order_range();
  return ab_sum_right_to(f, f.horizon(), cfg.alpha, cfg.b(), t);
}

Signal ab_sum_left_grid(const Signal& f, const ABConfig& cfg) {
  cfg.require_order_range();
  const std::int64_t a = f.origin(), b = f.horizon();
  if (b < a + 1) throw std::invalid_argument("ab_sum_left_grid: need at least two points");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(b - a));
  for (std::int64_t t = a + 1; t <= b; ++t)
    out.push_back(ab_sum_left_from(f, a, cfg.alpha, cfg.b(), t));
  return Signal(a + 1, std::move(out));
}

Signal ab_sum_right_grid(const Signal& f, const ABConfig& cfg) {
  cfg.require_order_range();
  const std::int64_t a = f.origin(), b = f.horizon();
  if (b < a + 1) throw std::invalid_argument("ab_sum_right_grid: need at least two points");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(b - a));
  for (std::int64_t t = a; t <= b - 1; ++t)
    out.push_back(ab_sum_right_to(f, b, cfg.alpha, cfg.b(), t));
  return Signal(a, std::move(out));
}

SeriesValue abr_series(const Signal& f, const ABConfig& cfg, std::int64_t t,
                       const Truncation& tr) {
  cfg.require_series_domain();
  const std::int64_t a = f.origin();
  check_left_range(f, a, t, "abr_series");
  const double lambda = cfg.lambda();
  const double scale = cfg.b() / (1.0 - cfg.alpha);
  const double lag_max = static_cast<double>(t - a);

  detail::Accumulator<double> acc;
  acc.add(f(t));
  if (lambda == 0.0) return {scale * acc.value(), 0, 0.0};
  double lpow = 1.0;
  for (std::int64_t k = 1; k <= tr.k_max; ++k) {
    lpow *= lambda;
    const double knu = static_cast<double>(k) * cfg.alpha;
    detail::Accumulator<double> sum_k, abs_k;
    for (std::int64_t s = a + 1; s <= t; ++s) {
      const double w = kernel(t - s + 1, knu);  // positive for knu > 0
      sum_k.add(w * f(s));
      abs_k.add(w * std::abs(f(s)));
    }
    acc.add(lpow * sum_k.value());
    if (k >= kMinTerms) {
      const double growth = std::pow(static_cast<double>(k + 1) / static_cast<double>(k),
                                     lag_max - 1.0);
      const double q = std::abs(lambda) * growth;
      if (q < 1.0) {
        const double bound = std::abs(lpow) * abs_k.value() * q / (1.0 - q);
        if (bound < tr.tol) return {scale * acc.value(), k, scale * bound};
      }
    }
  }
  throw ConvergenceError("abr_series: tail bound not met within k_max");
}

std::vector<RelationCheck> inverse_relations_check(const Signal& f, const ABConfig& cfg,
                                                   const Truncation& tr) {
  cfg.require_series_domain();
  const std::int64_t a = f.origin(), b = f.horizon();
  if (b - a < 3) throw std::invalid_argument("inverse_relations_check: grid too short");
  std::vector<RelationCheck> out;
  const double scale = cfg.b() / (1.0 - cfg.alpha);
  const auto e = e_table(cfg, b - a, tr);

  auto interior_gap = [&](const Signal& lhs, std::int64_t lo, std::int64_t hi) {
    double g = 0.0;
    for (std::int64_t t = lo; t <= hi; ++t) g = std::max(g, std::abs(lhs(t) - f(t)));
    return g;
  };

  {
    const Signal composed = abr_left_grid_from(ab_sum_left_grid(f, cfg), a, cfg, tr);
    out.push_back({"ABR_left(ABsum_left f) = f", interior_gap(composed, a + 2, b - 1)});
  }
  {
    const Signal inner = abr_left_grid(f, cfg, tr);
    double g = 0.0;
    for (std::int64_t t = a + 2; t <= b - 1; ++t)
      g = std::max(g, std::abs(ab_sum_left_from(inner, a, cfg.alpha, cfg.b(), t) - f(t)));
    out.push_back({"ABsum_left(ABR_left f) = f", g});
  }
  {
    const Signal composed = abr_right_grid_to(ab_sum_right_grid(f, cfg), b, cfg, tr);
    out.push_back({"ABR_right(ABsum_right f) = f", interior_gap(composed, a + 1, b - 2)});
  }
  {
    const Signal inner = abr_right_grid(f, cfg, tr);
    double g = 0.0;
    for (std::int64_t t = a + 1; t <= b - 2; ++t)
      g = std::max(g, std::abs(ab_sum_right_to(inner, b, cfg.alpha, cfg.b(), t) - f(t)));
    out.push_back({"ABsum_right(ABR_right f) = f", g});
  }
  {
    const Signal abc = abc_left_grid(f, cfg, tr);
    const Signal abr = abr_left_grid(f, cfg, tr);
    double g = 0.0;
    for (std::int64_t t = a + 1; t <= b; ++t) {
      const double corr = f(a) * scale * e[static_cast<std::size_t>(t - a)];
      g = std::max(g, std::abs(abc(t) - (abr(t) - corr)));
    }
    out.push_back({"ABC_left = ABR_left - f(a) (B/(1-a)) E(lambda, t-a)", g});
  }
  {
    const Signal abc = abc_right_grid(f, cfg, tr);
    const Signal abr = abr_right_grid(f, cfg, tr);
    double g = 0.0;
    for (std::int64_t t = a; t <= b - 1; ++t) {
      const double corr = f(b) * scale * e[static_cast<std::size_t>(b - t)];
      g = std::max(g, std::abs(abc(t) - (abr(t) - corr)));
    }
    out.push_back({"ABC_right = ABR_right - f(b) (B/(1-a)) E(lambda, b-t)", g});
  }
  return out;
}

}  // namespace nablafrac
