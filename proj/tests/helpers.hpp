// Shared test helpers: a deterministic signal generator and gap measures.
#ifndef NABLAFRAC_TESTS_HELPERS_HPP_
#define NABLAFRAC_TESTS_HELPERS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "nablafrac/rational.hpp"
#include "nablafrac/signal.hpp"

namespace nftest {

struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double sym() { return static_cast<double>(next() >> 11) * 0x1.0p-52 - 1.0; }
  std::int64_t ranged(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline nablafrac::Signal random_signal(SplitMix& rng, std::int64_t a, std::int64_t b) {
  return nablafrac::Signal::tabulate(a, b, [&](std::int64_t) { return rng.sym(); });
}

inline nablafrac::RationalSignal random_rational_signal(SplitMix& rng, std::int64_t a,
                                                        std::int64_t b) {
  return nablafrac::RationalSignal::tabulate(a, b, [&](std::int64_t) {
    return nablafrac::Rational(rng.ranged(-9, 9), rng.ranged(1, 9));
  });
}

inline double rel_gap(double got, double want) {
  return std::abs(got - want) / std::max({std::abs(got), std::abs(want), 1.0});
}

}  // namespace nftest

#endif  // NABLAFRAC_TESTS_HELPERS_HPP_
