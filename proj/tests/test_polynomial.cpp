// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include "dirkit/disc_point.hpp"
#include "dirkit/polynomial.hpp"
#include "dirkit/rng.hpp"

using namespace dirkit;

namespace {
bool close(cplx a, cplx b, double tol = 1e-13) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("evaluation by Horner") {
  const Polynomial f({1.0, 2.0});
  CHECK(close(f({0.0, 0.0}), {1.0, 0.0}));
  CHECK(close(Polynomial::monomial(3)({0.5, 0.0}), {0.125, 0.0}));
  // 1 + i z^2 at z = i
  const Polynomial g({{1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}});
  CHECK(close(g({0.0, 1.0}), {1.0, -1.0}));
}

TEST_CASE("degree is a sentinel for the zero polynomial") {
  CHECK(!Polynomial().degree().has_value());
  CHECK(!Polynomial({0.0, 0.0, 0.0}).degree().has_value());
  CHECK(Polynomial({0.0, 1.0, 0.0}).degree() == 1);
  CHECK_THROWS_AS(Polynomial(std::vector<cplx>(600)), std::invalid_argument);
}

TEST_CASE("derivative with factorial ratios") {
  const Polynomial z3 = Polynomial::monomial(3);
  CHECK(close(derivative(z3).coeff(2), {3.0, 0.0}));
  CHECK(derivative(z3).degree() == 2);
  CHECK(close(derivative(z3, 3).coeff(0), {6.0, 0.0}));
  const Polynomial f({1.0, 2.0, 0.0, 0.0, 1.0});
  const Polynomial d2 = derivative(f, 2);
  CHECK(d2.degree() == 2);
  CHECK(close(d2.coeff(2), {12.0, 0.0}));
  CHECK(close(d2.coeff(0), {0.0, 0.0}));
  CHECK(derivative(f, 0).coeffs() == f.coeffs());
  CHECK(derivative(f, 5).is_zero());
}

TEST_CASE("derivative composes additively") {
  Rng rng(11);
  // the factorial ratios are exact integers here; the routes differ only by
  // the rounding of one extra multiplication
  for (int t = 0; t < 20; ++t) {
    std::vector<cplx> c(17);
    for (auto& v : c) v = rng.complex_in_square();
    const Polynomial f(c);
    const int a = rng.uniform_int(0, 5), b = rng.uniform_int(0, 5);
    const Polynomial lhs = derivative(derivative(f, a), b);
    const Polynomial rhs = derivative(f, a + b);
    for (int j = 0; j < 17; ++j)
      CHECK(std::abs(lhs.coeff(j) - rhs.coeff(j)) <= 4e-16 * std::abs(rhs.coeff(j)));
  }
  // large orders up to a + b = 64: agreement is relative at double precision
  std::vector<cplx> c(70);
  for (auto& v : c) v = rng.complex_in_square();
  const Polynomial f(c);
  for (const auto& [a, b] : {std::pair{30, 34}, std::pair{10, 54}, std::pair{63, 1}}) {
    const Polynomial lhs = derivative(derivative(f, a), b);
    const Polynomial rhs = derivative(f, a + b);
    for (int j = 0; j < 6; ++j)
      CHECK(std::abs(lhs.coeff(j) - rhs.coeff(j)) <= 1e-12 * std::abs(rhs.coeff(j)));
  }
}

TEST_CASE("backward shift") {
  const Polynomial f({0.0, 2.0, 0.0, 1.0});  // z^3 + 2z
  const Polynomial lf = backward_shift(f);
  CHECK(close(lf.coeff(0), {2.0, 0.0}));
  CHECK(close(lf.coeff(2), {1.0, 0.0}));
  CHECK(backward_shift(Polynomial({7.0})).is_zero());
  const Polynomial g({0.0, 1.0, 0.0, 0.0, 0.0, 1.0});  // z^5 + z
  CHECK(backward_shift_power(g, 3).coeffs() == Polynomial::monomial(2).coeffs());
}

TEST_CASE("difference quotient by synthetic division") {
  const Polynomial q1 = difference_quotient(Polynomial::monomial(2), {0.5, 0.0});
  CHECK(close(q1.coeff(0), {0.5, 0.0}));
  CHECK(close(q1.coeff(1), {1.0, 0.0}));

  const cplx zeta{0.3, -0.2};
  const Polynomial q2 = difference_quotient(Polynomial::monomial(3), zeta);
  CHECK(close(q2.coeff(0), zeta * zeta));
  CHECK(close(q2.coeff(1), zeta));
  CHECK(close(q2.coeff(2), {1.0, 0.0}));

  const Polynomial q3 = difference_quotient(Polynomial({1.0, 1.0, 1.0}), {0.0, 0.0});
  CHECK(close(q3.coeff(0), {1.0, 0.0}));
  CHECK(close(q3.coeff(1), {1.0, 0.0}));

  CHECK(difference_quotient(Polynomial({5.0}), zeta).is_zero());
}

TEST_CASE("difference quotient reconstructs the polynomial") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    std::vector<cplx> c(static_cast<std::size_t>(rng.uniform_int(1, 12)) + 1);
    for (auto& v : c) v = rng.complex_in_square();
    const Polynomial f(c);
    const cplx zeta = rng.point_in_disc(1.0);
    const cplx z = rng.point_in_disc(1.0);
    const Polynomial q = difference_quotient(f, zeta);
    const cplx lhs = q(z) * (z - zeta) + f(zeta);
    CHECK(std::abs(lhs - f(z)) <= 1e-12 * (1.0 + std::abs(f(z))));
  }
}

TEST_CASE("difference quotient coefficients are backward-shift evaluations") {
  Rng rng(31);
  std::vector<cplx> c(9);
  for (auto& v : c) v = rng.complex_in_square();
  const Polynomial f(c);
  const cplx zeta = rng.point_in_disc(0.9);
  const Polynomial q = difference_quotient(f, zeta);
  for (int m = 1; m <= 8; ++m)
    CHECK(close(q.coeff(m - 1), backward_shift_power(f, m)(zeta), 1e-12));
}

TEST_CASE("dilation") {
  CHECK(close(dilate(Polynomial::monomial(2), 1.0).coeff(2), {1.0, 0.0}));
  CHECK(close(dilate(Polynomial::monomial(2), 0.5).coeff(2), {0.25, 0.0}));
  const Polynomial f({1.0, 1.0, 0.0, 1.0});
  const Polynomial fr = dilate(f, 0.1);
  CHECK(close(fr.coeff(0), {1.0, 0.0}));
  CHECK(close(fr.coeff(1), {0.1, 0.0}));
  CHECK(close(fr.coeff(3), {0.001, 0.0}));
  CHECK_THROWS_AS(dilate(f, 1.5), std::domain_error);
  CHECK_THROWS_AS(dilate(f, -0.1), std::domain_error);
}

TEST_CASE("hardy inner product") {
  CHECK(close(hardy_inner(Polynomial::monomial(2), Polynomial::monomial(2)), {1.0, 0.0}));
  CHECK(close(hardy_inner(Polynomial::monomial(1), Polynomial::monomial(2)), {0.0, 0.0}));
  CHECK(close(hardy_inner(Polynomial({1.0, 2.0}), Polynomial({3.0, 1.0})), {5.0, 0.0}));
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    std::vector<cplx> c(7);
    for (auto& v : c) v = rng.complex_in_square();
    const Polynomial f(c);
    CHECK(hardy_inner(f, f).real() >= 0.0);
    CHECK(std::abs(hardy_inner(f, f).imag()) <= 1e-15);
  }
  CHECK(hardy_inner(Polynomial(), Polynomial()).real() == 0.0);
}

TEST_CASE("disc point classification") {
  CHECK(DiscPoint({0.5, 0.0}).interior());
  CHECK(DiscPoint({1.0, 0.0}).boundary());
  CHECK(DiscPoint(std::polar(1.0 - 1e-11, 2.0)).boundary());
  CHECK(DiscPoint(std::polar(1.0 - 1e-9, 2.0)).interior());
  CHECK_THROWS_AS(DiscPoint({1.1, 0.0}), std::domain_error);
}
