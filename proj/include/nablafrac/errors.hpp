// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#ifndef NABLAFRAC_ERRORS_HPP_
#define NABLAFRAC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nablafrac {

/// Thrown when an adaptive series fails to meet its tail bound before k_max.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nablafrac

#endif  // NABLAFRAC_ERRORS_HPP_
