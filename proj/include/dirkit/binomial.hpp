// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_BINOMIAL_HPP
#define DIRKIT_BINOMIAL_HPP

#include <cstdint>

#include "dirkit/bigint.hpp"

namespace dirkit {

/// Binomial coefficients by exact Pascal recurrence, converted to double once.
/// Supported up to n = 64 (the fixed-width table); C(64,32) still fits int64.
inline constexpr int kMaxBinomial = 64;

std::int64_t binom_exact(int n, int k);
double binom(int n, int k);

/// Exact big-integer binomial, for the combinatorial identity checks (n <= 130).
BigInt binom_big(int n, int k);

}  // namespace dirkit

#endif  // DIRKIT_BINOMIAL_HPP
