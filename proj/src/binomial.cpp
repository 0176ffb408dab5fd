// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/binomial.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace dirkit {

namespace {

struct PascalTable {
  std::array<std::array<std::int64_t, kMaxBinomial + 1>, kMaxBinomial + 1> c{};
  PascalTable() {
    for (int n = 0; n <= kMaxBinomial; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const PascalTable& table() {
  static const PascalTable t;
  return t;
}

}  // namespace

std::int64_t binom_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n > kMaxBinomial) throw std::invalid_argument("binom_exact: n exceeds table");
  return table().c[n][k];
}

double binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  return static_cast<double>(binom_exact(n, k));
}

BigInt binom_big(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  if (n > 130) throw std::invalid_argument("binom_big: n out of supported range");
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, BigInt(0));
  row[0] = BigInt(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[j] = row[j] + row[j - 1];
  return row[k];
}

}  // namespace dirkit
