// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#include "nablafrac/special.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nablafrac {

namespace {

constexpr std::int64_t kPairwiseThreshold = 64;

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

// Product of a factor sequence; pairwise reduction once the chain is long
// enough that sequential rounding would show up at the 1e-13 level.
template <typename FactorFn>
double product_of(std::int64_t count, FactorFn&& factor) {
  if (count <= 0) return 1.0;
  if (count <= kPairwiseThreshold) {
    double p = 1.0;
    for (std::int64_t i = 0; i < count; ++i) p *= factor(i);
    return p;
  }
  std::vector<double> buf(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) buf[static_cast<std::size_t>(i)] = factor(i);
  std::size_t n = buf.size();
  while (n > 1) {
    std::size_t h = 0;
    for (std::size_t i = 0; i + 1 < n; i += 2) buf[h++] = buf[i] * buf[i + 1];
    if (n & 1) buf[h++] = buf[n - 1];
    n = h;
  }
  return buf[0];
}

}  // namespace

double rising_factorial(double z, std::int64_t l) {
  if (l < 0) throw std::domain_error("rising_factorial: negative length");
  return product_of(l, [z](std::int64_t i) { return z + static_cast<double>(i); });
}

Rational rising_factorial(const Rational& z, std::int64_t l) {
  if (l < 0) throw std::domain_error("rising_factorial: negative length");
  Rational p(1);
  for (std::int64_t i = 0; i < l; ++i) p *= z + Rational(i);
  return p;
}

double rising_function(std::int64_t z, double mu) {
  if (z < 0) throw std::domain_error("rising_function: grid value must be >= 0");
  if (!std::isfinite(mu)) throw std::domain_error("rising_function: exponent must be finite");
  if (mu == 0.0) return 1.0;  // series convention, see header
  if (z == 0) return 0.0;
  const double zm = static_cast<double>(z) + mu;
  if (is_integer(zm) && zm <= 0.0)
    throw std::domain_error("rising_function: Gamma(z+mu) pole");
  if (is_integer(mu)) {
    const auto m = static_cast<std::int64_t>(std::llround(mu));
    if (m > 0) return rising_factorial(static_cast<double>(z), m);
    // Gamma(z+m)/Gamma(z) = 1/((z+m)(z+m+1)...(z-1)), finite since z+m >= 1.
    return 1.0 / product_of(-m, [z, m](std::int64_t i) {
             return static_cast<double>(z + m + i);
           });
  }
  // Gamma(z+mu)/Gamma(z) = Gamma(mu+1) * prod_{i=1}^{z-1} (mu+i)/i
  return std::tgamma(mu + 1.0) *
         product_of(z - 1, [mu](std::int64_t i) {
           return (mu + static_cast<double>(i + 1)) / static_cast<double>(i + 1);
         });
}

Rational rising_function(std::int64_t z, std::int64_t mu) {
  if (z < 0) throw std::domain_error("rising_function: grid value must be >= 0");
  if (mu == 0) return Rational(1);
  if (z == 0) return Rational(0);
  if (z + mu <= 0) throw std::domain_error("rising_function: Gamma(z+mu) pole");
  if (mu > 0) return rising_factorial(Rational(z), mu);
  Rational p(1);
  for (std::int64_t i = 0; i < -mu; ++i) p *= Rational(z + mu + i);
  return Rational(1) / p;
}

double kernel(std::int64_t n, double nu) {
  if (n < 1) throw std::domain_error("kernel: n must be >= 1");
  return product_of(n - 1, [nu](std::int64_t i) {
    return (nu + static_cast<double>(i)) / static_cast<double>(i + 1);
  });
}

Rational kernel(std::int64_t n, const Rational& nu) {
  if (n < 1) throw std::domain_error("kernel: n must be >= 1");
  Rational p(1);
  for (std::int64_t i = 0; i < n - 1; ++i) p *= (nu + Rational(i)) / Rational(i + 1);
  return p;
}

double gen_binomial(double mu, std::int64_t k) {
  if (k < 0) throw std::domain_error("gen_binomial: negative k");
  return product_of(k, [mu](std::int64_t i) {
    return (mu - static_cast<double>(i)) / static_cast<double>(i + 1);
  });
}

Rational gen_binomial(const Rational& mu, std::int64_t k) {
  if (k < 0) throw std::domain_error("gen_binomial: negative k");
  Rational p(1);
  for (std::int64_t i = 0; i < k; ++i) p *= (mu - Rational(i)) / Rational(i + 1);
  return p;
}

double pochhammer(double rho, std::int64_t k) {
  if (k < 0) throw std::domain_error("pochhammer: negative k");
  return product_of(k, [rho](std::int64_t i) { return rho + static_cast<double>(i); });
}

Rational pochhammer(const Rational& rho, std::int64_t k) {
  if (k < 0) throw std::domain_error("pochhammer: negative k");
  Rational p(1);
  for (std::int64_t i = 0; i < k; ++i) p *= rho + Rational(i);
  return p;
}

double dirac_delta(std::int64_t t, std::int64_t s) { return t == s ? 1.0 : 0.0; }

}  // namespace nablafrac
