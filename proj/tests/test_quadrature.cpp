// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <cmath>

#include "dirkit/dirichlet.hpp"
#include "dirkit/quadrature.hpp"

using namespace dirkit;

namespace {
DiscIntegrand plain(std::function<cplx(cplx)> f) { return DiscIntegrand{std::move(f), {}, {}}; }
}  // namespace

TEST_CASE("normalized area") {
  QuadratureSpec spec;
  const auto r = integrate_disc(plain([](cplx) { return cplx{1.0, 0.0}; }), spec);
  CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.error_estimate <= 1e-13);
}

TEST_CASE("moments of the radius") {
  QuadratureSpec spec;
  CHECK(integrate_disc(plain([](cplx z) { return cplx{std::norm(z), 0.0}; }), spec).value.real() ==
        doctest::Approx(0.5).epsilon(1e-13));
  // Beta integral: (1 - |z|^2)^{k-1} integrates to 1/k
  for (int k = 1; k <= 6; ++k) {
    const auto r = integrate_disc(plain([k](cplx z) {
                                    double w = 1.0;
                                    for (int i = 1; i < k; ++i) w *= 1.0 - std::norm(z);
                                    return cplx{w, 0.0};
                                  }),
                                  spec);
    CHECK(r.value.real() == doctest::Approx(1.0 / k).epsilon(1e-13));
  }
}

TEST_CASE("rotation-invariant monomial integrals are exact") {
  QuadratureSpec spec;
  for (int m = 0; m <= 12; ++m) {
    const auto r = integrate_disc(plain([m](cplx z) {
                                    cplx p{1.0, 0.0};
                                    for (int i = 0; i < m; ++i) p *= z;
                                    return p * std::conj(p);
                                  }),
                                  spec);
    CHECK(std::abs(r.value.real() - 1.0 / (m + 1)) <= 1e-13);
  }
  // angular exactness kills mixed monomials
  const auto mixed = integrate_disc(plain([](cplx z) { return z * z * std::conj(z); }), spec);
  CHECK(std::abs(mixed.value) <= 1e-14);
}

TEST_CASE("doubling the resolution improves smooth integrands by at least 4x") {
  const auto f = plain([](cplx z) { return cplx{std::exp(z.real()) * std::cos(z.imag()), 0.0}; });
  QuadratureSpec fine;
  fine.radial_nodes = 48;
  fine.angular_nodes = 256;
  fine.annuli = 4;
  const double truth = integrate_disc(f, fine).value.real();

  QuadratureSpec coarse;
  coarse.radial_nodes = 4;
  coarse.angular_nodes = 8;
  coarse.annuli = 1;
  QuadratureSpec doubled = coarse;
  doubled.radial_nodes = 8;
  doubled.angular_nodes = 16;
  const double e1 = std::abs(integrate_disc(f, coarse).value.real() - truth);
  const double e2 = std::abs(integrate_disc(f, doubled).value.real() - truth);
  CHECK(e2 * 4.0 <= e1);
}

TEST_CASE("quadrature is deterministic") {
  QuadratureSpec spec;
  const auto f = plain([](cplx z) { return cplx{1.0 / (1.1 - z.real()), 0.0}; });
  const auto a = integrate_disc(f, spec);
  const auto b = integrate_disc(f, spec);
  CHECK(a.value.real() == b.value.real());
  CHECK(a.error_estimate == b.error_estimate);
}

TEST_CASE("spec validation") {
  QuadratureSpec spec;
  spec.radial_nodes = 2;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = QuadratureSpec{};
  spec.angular_nodes = 9;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = QuadratureSpec{};
  spec.grading_exponent = 8.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  DiscIntegrand g{[](cplx) { return cplx{1.0, 0.0}; }, cplx{0.0, 0.0}, cplx{1.0, 0.0}};
  CHECK_THROWS_AS(integrate_disc(g, QuadratureSpec{}), std::invalid_argument);
}

TEST_CASE("local Dirichlet integrals against closed forms") {
  QuadratureSpec spec;
  // first order at the origin: D(z) = 1
  CHECK(dirichlet_quadrature(Polynomial::monomial(1), 1, DiscPoint({0.0, 0.0}), spec).value.real() ==
        doctest::Approx(1.0).epsilon(1e-9));
  // D_{0,k}(z^k) = 1 for k = 1..4
  for (int k = 1; k <= 4; ++k)
    CHECK(dirichlet_quadrature(Polynomial::monomial(k), k, DiscPoint({0.0, 0.0}), spec).value.real() ==
          doctest::Approx(1.0).epsilon(1e-10));
  // order 2 at an interior point
  CHECK(dirichlet_quadrature(Polynomial::monomial(3), 2, DiscPoint({0.5, 0.0}), spec).value.real() ==
        doctest::Approx(2.25).epsilon(1e-10));
}

TEST_CASE("boundary point quadrature") {
  QuadratureSpec spec;
  // D_{1,1}(z^2) = 2, through the Poisson-type weight
  const double v =
      dirichlet_quadrature(Polynomial::monomial(2), 1, DiscPoint({1.0, 0.0}), spec).value.real();
  CHECK(std::abs(v - 2.0) / 3.0 <= 1e-4);
}

TEST_CASE("accuracy error carries the estimate") {
  QuadratureSpec coarse;
  coarse.radial_nodes = 8;
  coarse.angular_nodes = 16;
  coarse.annuli = 1;
  try {
    dirichlet_quadrature(Polynomial::monomial(6), 1, DiscPoint({0.7, 0.2}), coarse, 1e-16);
    FAIL("expected AccuracyError");
  } catch (const AccuracyError& e) {
    CHECK(e.error_estimate > 0.0);
    CHECK(e.requested_tolerance == 1e-16);
  }
}

TEST_CASE("pair quadrature is conjugate-symmetric") {
  QuadratureSpec spec;
  const Polynomial f({1.0, {0.0, 0.5}, 0.0, 1.0});
  const Polynomial g({0.0, 1.0, {0.2, -0.3}});
  const DiscPoint zeta({0.3, 0.4});
  const cplx fg = dirichlet_pair_quadrature(f, g, 2, zeta, spec).value;
  const cplx gf = dirichlet_pair_quadrature(g, f, 2, zeta, spec).value;
  CHECK(std::abs(fg - std::conj(gf)) <= 1e-10);
}
