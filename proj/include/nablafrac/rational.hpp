// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#ifndef NABLAFRAC_RATIONAL_HPP_
#define NABLAFRAC_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace nablafrac {

// Arbitrary-precision rational scalar used by the exact verification path.
// cpp_rational keeps the value canonical (lowest terms, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// x^e for integer e (negative exponents allowed when x != 0).
inline Rational rational_pow(const Rational& x, std::int64_t e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("rational_pow: 0 raised to a negative power");
    return Rational(1) / rational_pow(x, -e);
  }
  Rational r(1), base = x;
  std::int64_t n = e;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

}  // namespace nablafrac

#endif  // NABLAFRAC_RATIONAL_HPP_
