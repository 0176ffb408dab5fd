// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_REPORT_HPP
#define DIRKIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dirkit {

struct CheckRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

CheckRecord make_check(std::string name, double lhs, double rhs, double tolerance);
/// For sign/PSD-style checks: pass iff value >= threshold.
CheckRecord make_bound_check(std::string name, double value, double threshold);

/// Deterministic run report: same inputs and seed give byte-identical output.
/// Wall-clock timing is deliberately not part of the serialized report; it is
/// printed separately on stderr by the CLI.
struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::string digest;  // FNV-1a of the effective configuration
  std::vector<CheckRecord> records;

  int failures() const;
  bool all_pass() const { return failures() == 0; }
  void sort_by_name();

  /// JSON-lines: one record per line, then a summary object.
  std::string to_json_lines() const;
  std::string to_csv() const;
};

std::uint64_t fnv1a(const std::string& data);
std::string fnv1a_hex(const std::string& data);

}  // namespace dirkit

#endif  // DIRKIT_REPORT_HPP
