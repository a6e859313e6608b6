#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsym/check.hpp"

namespace qsym {

enum class Mode { Symbolic, Point };

/// Settings shared by every verification suite. Unset bounds fall back to
/// each suite's own default.
struct SuiteConfig {
  Mode mode = Mode::Symbolic;
  std::uint64_t seed = 1;
  int trials = 3;
  std::optional<int> max_n;
  std::optional<int> max_degree;
  std::optional<int> N;
  bool poison = false;
  /// Stop each suite at its first failed record.
  bool fail_fast = false;
  double q0 = 1.0001;
  double lambda0 = 2.3;
  double lambda0_prime = 3.7;
};

/// One checked identity and the coefficient mode it was checked in
/// ("symbolic", "point" or "float").
struct SuiteRecord {
  Report report;
  std::string mode;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteRecord> records;
  bool ok() const;
};

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite. With cfg.poison the first comparison of the suite is
/// corrupted in one coefficient. Throws std::invalid_argument for an
/// unknown name or an invalid configuration.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace qsym
