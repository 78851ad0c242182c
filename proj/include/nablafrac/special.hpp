// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#ifndef NABLAFRAC_SPECIAL_HPP_
#define NABLAFRAC_SPECIAL_HPP_

#include <cstdint>

#include "nablafrac/rational.hpp"

namespace nablafrac {

// Scalar primitives on the integer grid. Every gamma ratio is evaluated as a
// finite product, never as a quotient of two large gamma values; the float
// path switches to pairwise products for long factor chains so the results
// stay reproducible to ~1e-13 relative against the exact-rational variants.

/// z^(rising l) = z(z+1)...(z+l-1); equals 1 for l = 0.
double rising_factorial(double z, std::int64_t l);
Rational rising_factorial(const Rational& z, std::int64_t l);

/// z^(rising mu) = Gamma(z+mu)/Gamma(z) for grid values z >= 0.
///
/// Conventions: 0^(rising 0) = 1 (the identity term of every series) and
/// 0^(rising mu) = 0 otherwise. Throws std::domain_error when z+mu lands on
/// a pole of Gamma(z+mu).
double rising_function(std::int64_t z, double mu);

/// Exact variant; the value is rational only for integer exponents.
/// For fractional rational exponents use kernel(), which carries the whole
/// rational part of z^(rising mu)/Gamma(mu+1).
Rational rising_function(std::int64_t z, std::int64_t mu);

/// kernel(n, nu) = n^(rising nu-1)/Gamma(nu) = Gamma(n+nu-1)/(Gamma(n)Gamma(nu)),
/// the weight of every nabla fractional sum. Entire in nu: the product form
/// prod_{i=1}^{n-1} (nu+i-1)/i stays finite at nonpositive integer nu, where
/// the 1/Gamma(nu) factor cancels the pole. kernel(1, nu) = 1 for all nu.
double kernel(std::int64_t n, double nu);
Rational kernel(std::int64_t n, const Rational& nu);

/// Generalized binomial coefficient binom(mu, k) = mu(mu-1)...(mu-k+1)/k!.
double gen_binomial(double mu, std::int64_t k);
Rational gen_binomial(const Rational& mu, std::int64_t k);

/// Rising Pochhammer symbol (rho)_k = rho(rho+1)...(rho+k-1); (rho)_0 = 1.
double pochhammer(double rho, std::int64_t k);
Rational pochhammer(const Rational& rho, std::int64_t k);

/// Dirac delta on the integer grid: 1 if t = s, else 0. (On a general time
/// scale the t = s value would be 1/(t - rho(t)); on the integer grid that
/// backward step is 1, and this library only works on the integer grid.)
double dirac_delta(std::int64_t t, std::int64_t s);

}  // namespace nablafrac

#endif  // NABLAFRAC_SPECIAL_HPP_
