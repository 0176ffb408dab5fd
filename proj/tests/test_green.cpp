// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <cmath>

#include "dirkit/green.hpp"
#include "dirkit/rng.hpp"

using namespace dirkit;

namespace {
// radial profile of G_2: f_2(x) = -x ln x - (1 - x)
double f2(double x) { return -x * std::log(x) - (1.0 - x); }
}  // namespace

TEST_CASE("first-order kernel at the origin") {
  CHECK(green_k(1, {0.5, 0.0}, {0.0, 0.0}) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(green_k(1, {0.3, 0.0}, {0.3, 0.0}), std::domain_error);
}

TEST_CASE("second-order kernel matches the radial profile") {
  CHECK(green_k(2, {0.5, 0.0}, {0.0, 0.0}) == doctest::Approx(f2(0.25)).epsilon(1e-14));
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const cplx z = rng.point_in_disc(0.999);
    if (std::abs(z) < 1e-3) continue;
    CHECK(green_k(2, z, {0.0, 0.0}) ==
          doctest::Approx(f2(std::norm(z))).epsilon(1e-12));
  }
}

TEST_CASE("symmetry in the two arguments") {
  Rng rng(17);
  for (int k = 1; k <= 8; ++k)
    for (int t = 0; t < 25; ++t) {
      const cplx z = rng.point_in_disc(0.98), zeta = rng.point_in_disc(0.98);
      if (std::abs(z - zeta) < 1e-6) continue;
      const double a = green_k(k, z, zeta), b = green_k(k, zeta, z);
      CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("continuous extension on the diagonal for k >= 2") {
  const cplx zeta{0.4, 0.3};
  const double x = 1.0 - std::norm(zeta);
  // only the l = k-1 term survives
  CHECK(green_k(3, zeta, zeta) == doctest::Approx(x * x * x * x / 2.0).epsilon(1e-13));
  CHECK(green_k(2, zeta, zeta) == doctest::Approx(-x * x).epsilon(1e-13));
}

TEST_CASE("companion kernel values") {
  CHECK(h_k(1, {0.0, 0.0}, {0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(h_k(2, {0.0, 0.0}, {0.0, 0.0}) == doctest::Approx(-1.0));
  CHECK(h_k(1, {0.5, 0.0}, {0.5, 0.0}) == doctest::Approx(1.25).epsilon(1e-14));
  CHECK_THROWS_AS(h_k(1, {0.0, 0.0}, {2.0, 0.0}), std::domain_error);
}

TEST_CASE("local weight, interior and boundary") {
  CHECK(u_local(2, DiscPoint({0.0, 0.0}), {0.5, 0.0}) == doctest::Approx(-f2(0.25)).epsilon(1e-14));
  CHECK(u_local(1, DiscPoint({0.0, 0.0}), {0.5, 0.0}) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(u_local(3, DiscPoint({1.0, 0.0}), {0.0, 0.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(u_local(1, DiscPoint({1.0, 0.0}), {1.0, 0.0}), std::domain_error);
  CHECK(u_local(2, DiscPoint({0.9, 0.0}), {0.2, 0.1}) > 0.0);
}

TEST_CASE("recurrence in the order") {
  CHECK(std::abs(green_recurrence_residual(2, {0.3, 0.0}, {0.0, 0.1})) <= 1e-12);
  CHECK(std::abs(green_recurrence_residual(5, {0.9, 0.0}, {-0.7, 0.0})) <= 1e-11);
  // radial closed form: f_2(x) = x f_1(x) - (1 - x)
  const double x = 0.25;
  CHECK(f2(x) == doctest::Approx(x * std::log(1.0 / x) - (1.0 - x)).epsilon(1e-14));
}

TEST_CASE("Mobius transport") {
  // k = 1: the conformal factor is 1
  const MobiusMap phi({0.3, 0.2});
  CHECK(std::abs(mobius_transport_residual(1, phi, {0.1, 0.4}, {-0.2, 0.1})) <= 1e-13);
  // a = 0 is the rotation z -> -z
  const MobiusMap rot({0.0, 0.0});
  CHECK(green_k(4, {-0.3, -0.1}, {0.2, -0.5}) ==
        doctest::Approx(green_k(4, {0.3, 0.1}, {-0.2, 0.5})).epsilon(1e-13));
  CHECK(std::abs(mobius_transport_residual(3, MobiusMap({0.4, 0.0}), {0.2, 0.0}, {0.0, 0.5})) <= 1e-11);
  CHECK_THROWS_AS(MobiusMap({1.0, 0.0}), std::domain_error);
  // involution
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const cplx w = rng.point_in_disc(0.99);
    CHECK(std::abs(phi(phi(w)) - w) <= 1e-13);
  }
}

TEST_CASE("finite-difference Laplacian matches the closed form") {
  CHECK(std::abs(laplacian_relation_residual(2, {0.2, 0.0}, {0.6, 0.0})) <= 1e-5);
  CHECK(std::abs(laplacian_relation_residual(4, {0.1, 0.1}, {0.0, 0.0})) <= 1e-5);
  CHECK(std::abs(laplacian_relation_residual(2, {0.5, 0.0}, {0.2, 0.0})) <= 1e-5);
  CHECK_THROWS_AS(laplacian_relation_residual(2, {0.9995, 0.0}, {0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(laplacian_relation_residual(2, {0.3, 0.0}, {0.3001, 0.0}), std::domain_error);
}

TEST_CASE("ratio series against the kernel") {
  const double direct = green_k(3, {std::sqrt(0.5), 0.0}, {0.0, 0.0}) / 0.125;
  CHECK(g_ratio_series(3, 0.5, 60) == doctest::Approx(direct).epsilon(1e-10));
  CHECK(g_ratio_series(2, 1e-9, 40) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(g_ratio_series(2, 1.0 - 1e-4, 200000) == doctest::Approx(1.0).epsilon(2e-3));
  // decreasing in |z|^2 means increasing in x here
  CHECK(g_ratio_series(4, 0.2, 100) < g_ratio_series(4, 0.7, 100));
  CHECK_THROWS_AS(g_ratio_series(1, 0.5, 10), std::domain_error);
  CHECK_THROWS_AS(g_ratio_series(2, 1.5, 10), std::domain_error);
}

TEST_CASE("sandwich bounds hold, including near the boundary") {
  Rng rng(29);
  for (int k = 2; k <= 8; ++k)
    for (int t = 0; t < 40; ++t) {
      const double r = (t < 30) ? rng.unit() * 0.99 : 1.0 - std::pow(10.0, -2 - (t % 5));
      const cplx z = std::polar(r, rng.uniform(0.0, 6.28));
      const cplx zeta = rng.point_in_disc(0.9);
      const double sign = (k % 2 == 0) ? -1.0 : 1.0;
      const double v = sign * green_k(k, z, zeta);
      const double lo = green_sandwich_lower(k, z, zeta);
      const double hi = green_sandwich_upper(k, z, zeta);
      CHECK(v >= lo * (1.0 - 1e-12));
      CHECK(v <= hi * (1.0 + 1e-12));
      CHECK(v > 0.0);
    }
}

TEST_CASE("order caps") {
  CHECK_THROWS_AS(green_k(0, {0.1, 0.0}, {0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(green_k(17, {0.1, 0.0}, {0.0, 0.0}), std::domain_error);
  CHECK_NOTHROW(green_k(16, {0.1, 0.0}, {0.0, 0.0}));
}
