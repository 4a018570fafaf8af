#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "martial/permutation.hpp"

namespace martial {

struct SuiteOptions {
  /// Suite-specific length bound; each suite documents what it limits.
  std::optional<int> maxLength;
  std::optional<Window> window;
  int jobs = 1;
};

struct VerificationReport {
  std::string suite;
  nlohmann::json parameters;
  bool passed = true;
  std::size_t checked = 0;
  /// Input echo and both sides of the first failing case; null on success.
  nlohmann::json counterexample;
  double seconds = 0;

  nlohmann::json toJson() const;
  std::string toText() const;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

/// Every suite with its default bounds, in the order `verify all` runs them.
const std::vector<SuiteInfo>& suites();

/// Runs one suite; throws ValidationError for an unknown name or bad bounds.
VerificationReport runSuite(const std::string& name, const SuiteOptions& options);

}  // namespace martial
