// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include "dirkit/bigint.hpp"
#include "dirkit/binomial.hpp"
#include "dirkit/dirichlet.hpp"

using namespace dirkit;

TEST_CASE("big integer arithmetic") {
  CHECK(BigInt(0).is_zero());
  CHECK((BigInt(7) + BigInt(-7)).is_zero());
  CHECK((BigInt(-3) * BigInt(-4)) == BigInt(12));
  CHECK((BigInt(1) - BigInt(2)) == BigInt(-1));
  CHECK(BigInt(-5) < BigInt(3));
  CHECK(BigInt::pow(BigInt(2), 100).to_string() == "1267650600228229401496703205376");
  CHECK(BigInt::pow(BigInt(3), 64).to_string() == "3433683820292512484657849089281");
  CHECK((BigInt::pow(BigInt(10), 20) - BigInt(1)).to_string() == "99999999999999999999");
  // large cancellation
  const BigInt a = BigInt::pow(BigInt(7), 40);
  CHECK((a - a).is_zero());
  CHECK((a + (-a)).is_zero());
}

TEST_CASE("big rational arithmetic") {
  const BigRational half = BigRational::ratio(1, 2);
  CHECK(half + half == BigRational(1));
  CHECK(half * BigRational(4) == BigRational(2));
  CHECK(BigRational::ratio(2, 4) == half);
  CHECK(BigRational::ratio(-1, 2) == BigRational::ratio(1, -2));
  CHECK(BigRational::pow(half, 10) == BigRational::ratio(1, 1024));
  CHECK((BigRational(1) - BigRational::ratio(1, 3)) == BigRational::ratio(2, 3));
  CHECK(BigRational::ratio(1, 3) != BigRational::ratio(1, 4));
  CHECK_THROWS_AS(BigRational::ratio(1, 0), std::invalid_argument);
}

TEST_CASE("binomial tables") {
  CHECK(binom_exact(4, 2) == 6);
  CHECK(binom_exact(64, 32) == 1832624140942590534LL);
  CHECK(binom(10, -1) == 0.0);
  CHECK(binom(10, 11) == 0.0);
  CHECK(binom_big(65, 32).to_string() == "3609714217008132870");
  CHECK(binom_big(100, 50).to_string() == "100891344545564193334812497256");
}

TEST_CASE("binomial sum lemma, exact rationals") {
  // m=3, k=1, r=2: 11 + (1-2)*5 = 6 = C(4,2)
  CHECK(sum_lemma_check(3, 1, BigRational(2)));
  // r = 1: hockey stick
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; k <= m; ++k) CHECK(sum_lemma_check(m, k, BigRational(1)));
  // r = 0: Pascal
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; k <= m; ++k) CHECK(sum_lemma_check(m, k, BigRational(0)));
  // the full supported range at an awkward rational
  CHECK(sum_lemma_check(64, 31, BigRational::ratio(1, 2)));
  CHECK(sum_lemma_check(64, 0, BigRational(3)));
  CHECK(sum_lemma_check(64, 64, BigRational(-2)));
  CHECK_THROWS_AS(sum_lemma_check(65, 0, BigRational(1)), std::invalid_argument);
  CHECK_THROWS_AS(sum_lemma_check(3, 4, BigRational(1)), std::invalid_argument);
}

TEST_CASE("falling-to-rising rebracketing identity, exact rationals") {
  // n=5, m=2, x=3: both sides are 24
  CHECK(magic_identity_check(5, 2, BigRational(3)));
  // x = 1: hockey stick again
  for (int n = 1; n <= 12; ++n)
    for (int m = 0; m < n; ++m) CHECK(magic_identity_check(n, m, BigRational(1)));
  // x = 0: alternating sum collapses
  for (int n = 1; n <= 12; ++n)
    for (int m = 0; m < n; ++m) CHECK(magic_identity_check(n, m, BigRational(0)));
  CHECK(magic_identity_check(64, 13, BigRational::ratio(1, 2)));
  CHECK(magic_identity_check(64, 0, BigRational(-2)));
  CHECK_THROWS_AS(magic_identity_check(5, 5, BigRational(1)), std::invalid_argument);
}

TEST_CASE("a perturbed identity fails") {
  // the checks must be able to say no: compare against a wrong right side
  BigRational lhs(0);
  for (int l = 1; l <= 3; ++l)
    lhs += BigRational(binom_big(l, 1), BigInt(1)) * BigRational::pow(BigRational(2), 3 - l);
  CHECK(lhs != BigRational(binom_big(4, 2), BigInt(1)));  // 11 != 6 without the correction term
}
