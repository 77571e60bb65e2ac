#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace jch::validation {

struct CheckResult {
  std::string module;
  std::string name;
  double max_error = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct Summary {
  std::vector<CheckResult> checks;
  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] std::vector<std::string> failed_names() const;
};

// Matrix-level checks are parameterized so faults can be injected in tests.
CheckResult check_unitarity(const Eigen::MatrixXcd& w, const std::string& label);
CheckResult check_krawtchouk_parity(const Eigen::MatrixXd& u);
CheckResult check_diagonalizes(const Eigen::MatrixXcd& w, const Eigen::MatrixXd& scaled_coupling,
                               const Eigen::VectorXd& expected_diag, const std::string& label);

// Runs the invariant suite for one module ("topology", "krawtchouk", "specfun",
// "dynamics", "regimes") or "all".  The seed feeds only the randomized draws.
Summary run_validation(const std::string& scope, std::uint64_t seed);

[[nodiscard]] bool scope_is_known(const std::string& scope);

}  // namespace jch::validation
