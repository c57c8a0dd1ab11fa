#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace histo {

struct CheckResult {
  std::string name;
  double value = 0.0;      // measured quantity (a deviation unless the name says otherwise)
  double tolerance = 0.0;  // pass threshold used for this check
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  [[nodiscard]] bool pass() const;
};

/// Suites: all, det, lagrange, fejer, rho, lebesgue. Throws std::invalid_argument
/// for an unknown suite name. Randomized checks draw from `seed`.
[[nodiscard]] VerifyReport run_verify(std::string_view suite, std::uint64_t seed = 0);

[[nodiscard]] nlohmann::json to_json(const VerifyReport& report);

}  // namespace histo
