#pragma once

#include <string>
#include <vector>

#include "szeta/mp/precision.hpp"
#include "szeta/zeros/zeros.hpp"

// Invariant suites over every module.  Each item is named after the invariant
// it checks, so a failing line says what broke.

namespace szeta::verify {

enum class Suite { tables, identities, continuation, poles, lambda };

[[nodiscard]] std::string to_string(Suite s);
/// DomainError for unknown names.
[[nodiscard]] Suite parse_suite(const std::string& name);
[[nodiscard]] bool needs_zeros(Suite s);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  mp::PrecisionContext ctx;
  const zeros::ZeroSet* zeros = nullptr;  // poles and lambda only
  long n_max = 300;                      // lambda suite range
};

/// Runs one suite.  Exceptions from a check are caught and reported as a failure of that check.
[[nodiscard]] std::vector<CheckResult> run_suite(Suite s, const SuiteOptions& opt);

/// 50 on-line zeros at ordinates 5..54 plus the quadruple with beta = 0.9 at ordinate 5.
[[nodiscard]] zeros::ZeroSet toy_set();

}  // namespace szeta::verify
