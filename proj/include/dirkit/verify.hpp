// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_VERIFY_HPP
#define DIRKIT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dirkit/report.hpp"

namespace dirkit {

struct VerifyConfig {
  std::uint64_t seed = 7;
  double tol_scale = 1.0;     // multiplies every check tolerance
  int douglas_samples = 50;   // random cases per order in the Douglas battery
  std::optional<int> douglas_k;  // restrict the Douglas battery to one order
  bool exact_only = false;    // identities suite: run only the exact-arithmetic checks
  int threads = 0;            // 0: DIRKIT_THREADS env var, else 1
};

int effective_thread_count(const VerifyConfig& config);

// Verification batteries. Names mirror the identities they exercise; each
// returns its per-check records (unsorted).
std::vector<CheckRecord> battery_local_douglas(const VerifyConfig& config);
std::vector<CheckRecord> battery_monomial_formula(const VerifyConfig& config);
std::vector<CheckRecord> battery_exact_identities(const VerifyConfig& config);
std::vector<CheckRecord> battery_green_kernel(const VerifyConfig& config);
std::vector<CheckRecord> battery_difference_identities(const VerifyConfig& config);
std::vector<CheckRecord> battery_bn_structure(const VerifyConfig& config);
std::vector<CheckRecord> battery_model_roundtrip(const VerifyConfig& config);
std::vector<CheckRecord> battery_d_alpha_family(const VerifyConfig& config);
std::vector<CheckRecord> battery_analytic_model(const VerifyConfig& config);

/// Suites: green | douglas | identities | operators | all.
RunReport run_suite(const std::string& name, const VerifyConfig& config);

}  // namespace dirkit

#endif  // DIRKIT_VERIFY_HPP
