// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#ifndef NABLAFRAC_VERIFY_HPP_
#define NABLAFRAC_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

namespace nablafrac {

/// One verified identity: what was checked, at which parameters, the worst
/// gap seen, and the tolerance it was held to.
struct CheckResult {
  std::string identity;
  std::string params;
  double max_gap = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  std::optional<double> alpha;  // restrict float sweeps to one alpha
  std::uint64_t seed = 20260809;
};

/// Names accepted by run_suite, in execution order of `verify --suite all`.
std::vector<std::string> suite_names();

/// Run one named suite of identity checks (see suite_names()). Throws
/// std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt = {});

/// Run every suite and concatenate the results.
std::vector<CheckResult> run_all_suites(const VerifyOptions& opt = {});

}  // namespace nablafrac

#endif  // NABLAFRAC_VERIFY_HPP_
