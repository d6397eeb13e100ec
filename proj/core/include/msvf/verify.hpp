// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace msvf {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<std::string> artifacts;  // data lines (tables, convergence rows)

  bool pass() const;
  std::size_t failures() const;
};

/// Names accepted by run_verify: metric-props, pl, operators, bounds,
/// convexification (and "all").
const std::vector<std::string>& verify_suite_names();

SuiteReport run_verify_suite(const std::string& name, std::uint64_t seed);

/// Runs one suite or, for "all", every suite in order.
std::vector<SuiteReport> run_verify(const std::string& suite_or_all, std::uint64_t seed);

/// Deterministic machine-readable report: one "check=... status=..." line per
/// check plus a trailing "summary ..." line.
std::string verify_report_text(const std::vector<SuiteReport>& reports, std::uint64_t seed);

}  // namespace msvf
