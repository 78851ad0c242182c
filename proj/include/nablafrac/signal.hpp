// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#ifndef NABLAFRAC_SIGNAL_HPP_
#define NABLAFRAC_SIGNAL_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "nablafrac/rational.hpp"

namespace nablafrac {

/// A function tabulated on the integer grid {a, a+1, ..., b}. Values are
/// immutable after construction; all operators take signals by const
/// reference and return fresh ones.
template <typename T>
class BasicSignal {
public:
  BasicSignal(std::int64_t origin, std::vector<T> values)
      : origin_(origin), values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("Signal: empty grid");
    if constexpr (std::is_floating_point_v<T>) {
      for (const T& v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("Signal: non-finite value");
    }
  }

  static BasicSignal constant(std::int64_t a, std::int64_t b, const T& value) {
    if (b < a) throw std::invalid_argument("Signal: horizon before origin");
    return BasicSignal(a, std::vector<T>(static_cast<std::size_t>(b - a + 1), value));
  }

  template <typename Fn>
  static BasicSignal tabulate(std::int64_t a, std::int64_t b, Fn&& fn) {
    if (b < a) throw std::invalid_argument("Signal: horizon before origin");
    std::vector<T> vals;
    vals.reserve(static_cast<std::size_t>(b - a + 1));
    for (std::int64_t t = a; t <= b; ++t) vals.push_back(fn(t));
    return BasicSignal(a, std::move(vals));
  }

  std::int64_t origin() const { return origin_; }
  std::int64_t horizon() const { return origin_ + static_cast<std::int64_t>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }

  const T& operator()(std::int64_t t) const {
    if (t < origin() || t > horizon())
      throw std::out_of_range("Signal: t=" + std::to_string(t) + " outside [" +
                              std::to_string(origin()) + ", " + std::to_string(horizon()) + "]");
    return values_[static_cast<std::size_t>(t - origin_)];
  }

  const std::vector<T>& values() const { return values_; }

private:
  std::int64_t origin_;
  std::vector<T> values_;
};

using Signal = BasicSignal<double>;
using RationalSignal = BasicSignal<Rational>;

/// Backward difference: (nabla f)(t) = f(t) - f(t-1), defined on {a+1, ..., b}.
template <typename T>
BasicSignal<T> nabla(const BasicSignal<T>& f) {
  if (f.size() < 2) throw std::invalid_argument("nabla: need at least two grid points");
  std::vector<T> out;
  out.reserve(f.size() - 1);
  for (std::int64_t t = f.origin() + 1; t <= f.horizon(); ++t) out.push_back(f(t) - f(t - 1));
  return BasicSignal<T>(f.origin() + 1, std::move(out));
}

/// Forward difference: (delta f)(s) = f(s+1) - f(s), defined on {a, ..., b-1}.
template <typename T>
BasicSignal<T> delta(const BasicSignal<T>& f) {
  if (f.size() < 2) throw std::invalid_argument("delta: need at least two grid points");
  std::vector<T> out;
  out.reserve(f.size() - 1);
  for (std::int64_t s = f.origin(); s < f.horizon(); ++s) out.push_back(f(s + 1) - f(s));
  return BasicSignal<T>(f.origin(), std::move(out));
}

inline Signal to_double(const RationalSignal& f) {
  std::vector<double> vals;
  vals.reserve(f.size());
  for (const Rational& q : f.values()) vals.push_back(to_double(q));
  return Signal(f.origin(), std::move(vals));
}

// CSV format consumed and produced by the CLI: header "t,value", one grid
// point per row, consecutive integer t.
Signal read_signal_csv(const std::string& path);
void write_signal_csv(const Signal& f, const std::string& path);

}  // namespace nablafrac

#endif  // NABLAFRAC_SIGNAL_HPP_
