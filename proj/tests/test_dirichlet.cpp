// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <cmath>

#include "dirkit/binomial.hpp"
#include "dirkit/dirichlet.hpp"
#include "dirkit/rng.hpp"

using namespace dirkit;

namespace {
const Polynomial z1 = Polynomial::monomial(1);
const Polynomial z2 = Polynomial::monomial(2);
const Polynomial z3 = Polynomial::monomial(3);
const Polynomial z4 = Polynomial::monomial(4);

Polynomial random_poly(Rng& rng, int deg) {
  std::vector<cplx> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = rng.complex_in_square();
  return Polynomial(std::move(c));
}
}  // namespace

TEST_CASE("sigma form is diagonal with binomial weights") {
  CHECK(d_sigma(z4, z4, 2).real() == doctest::Approx(6.0));
  for (int k = 0; k <= 6; ++k)
    CHECK(d_sigma(Polynomial::monomial(k), Polynomial::monomial(k), k).real() == doctest::Approx(1.0));
  CHECK(std::abs(d_sigma(z3, z2, 1)) == 0.0);
  CHECK(d_sigma(z1, z1, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("circle form against distributions") {
  CHECK(std::abs(d_circle(z2, z2, 1, CircleDistribution::lebesgue()) - d_sigma(z2, z2, 1)) == 0.0);
  // unit atom at angle 0: all coefficients 1
  const auto delta1 = CircleDistribution::point_atoms({{0.0, 1.0}});
  CHECK(d_circle(z2, z2, 1, delta1).real() == doctest::Approx(2.0));
  // the same value through the circle difference-quotient route: z^2 = 1 + (z-1)(z+1)
  CHECK(d_point_closed(z2, z2, 1, DiscPoint({1.0, 0.0})).real() == doctest::Approx(2.0));
  // density 1 + cos(theta)
  const auto onecos =
      CircleDistribution::fourier({{-1, {0.5, 0.0}}, {0, {1.0, 0.0}}, {1, {0.5, 0.0}}}, true);
  CHECK(d_circle(z1, z1, 0, onecos).real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(CircleDistribution::fourier({{1, {0.5, 0.0}}}, true), std::invalid_argument);
}

TEST_CASE("positive-measure witness") {
  CHECK(CircleDistribution::lebesgue().positive_witness(12));
  CHECK(CircleDistribution::point_atoms({{1.1, 0.7}, {3.0, 0.2}}).positive_witness(12));
  const auto signed_mu =
      CircleDistribution::fourier({{-1, {0.8, 0.0}}, {0, {0.5, 0.0}}, {1, {0.8, 0.0}}}, true);
  CHECK(!signed_mu.positive_witness(4));
  CHECK(signed_mu.toeplitz_min_eigenvalue(1) == doctest::Approx(-0.3).epsilon(1e-12));
}

TEST_CASE("local point form") {
  CHECK(d_point_closed(z3, z3, 2, DiscPoint({0.5, 0.0})).real() == doctest::Approx(2.25));
  for (int m = 1; m <= 6; ++m)
    CHECK(d_point_closed(Polynomial::monomial(m), Polynomial::monomial(m), 1, DiscPoint({0.0, 0.0})).real() ==
          doctest::Approx(1.0));
  CHECK(d_point_closed(z2, z2, 1, DiscPoint({0.5, 0.0})).real() == doctest::Approx(1.25));
  // the closed monomial form agrees with the difference-quotient route
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const cplx zeta = rng.point_in_disc(1.0);
    const int m = rng.uniform_int(0, 7), n = rng.uniform_int(0, 7), k = rng.uniform_int(1, 4);
    const cplx a = d_point_monomial(m, n, k, zeta);
    const cplx b =
        d_point_closed(Polynomial::monomial(m), Polynomial::monomial(n), k, DiscPoint(zeta));
    CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("measure form splits into atoms and circle part") {
  CHECK(d_measure(Polynomial::monomial(2), Polynomial::monomial(2), 2,
                  DiscMeasure::dirac(DiscPoint({0.0, 0.0})))
            .real() == doctest::Approx(1.0));
  const DiscMeasure sigma_only = DiscMeasure::circle(CircleDistribution::lebesgue());
  CHECK(std::abs(d_measure(z3, z3, 2, sigma_only) - d_sigma(z3, z3, 2)) == 0.0);
  const DiscMeasure mixed({{DiscPoint({0.5, 0.0}), 0.5}}, CircleDistribution::lebesgue());
  CHECK(d_measure(z3, z3, 2, mixed).real() == doctest::Approx(4.125));
  CHECK(d_measure_zero(z2, z2, DiscMeasure::dirac(DiscPoint({0.5, 0.0}))).real() ==
        doctest::Approx(0.0625));
  CHECK_THROWS_AS(DiscMeasure({{DiscPoint({0.1, 0.0}), -1.0}}, CircleDistribution::zero()),
                  std::invalid_argument);
}

TEST_CASE("tuple norms") {
  // (sigma, zero measure): the Hardy norm
  const AllowableTuple hardy({CircleDistribution::lebesgue()}, DiscMeasure::zero());
  Rng rng(13);
  const Polynomial f = random_poly(rng, 8);
  CHECK(tuple_norm_sq(f, hardy) == doctest::Approx(hardy_inner(f, f).real()).epsilon(1e-13));
  // (sigma, delta_0): monomials of positive degree get norm 2
  const AllowableTuple t1({CircleDistribution::lebesgue()}, DiscMeasure::dirac(DiscPoint({0.0, 0.0})));
  CHECK(tuple_norm_sq(Polynomial::monomial(5), t1) == doctest::Approx(2.0));
  CHECK(tuple_norm_sq(Polynomial({1.0}), t1) == doctest::Approx(1.0));
  // (sigma, sigma): the first-order space with norm n+1 on monomials
  const AllowableTuple t2({CircleDistribution::lebesgue()},
                          DiscMeasure::circle(CircleDistribution::lebesgue()));
  for (int n = 0; n <= 6; ++n)
    CHECK(tuple_norm_sq(Polynomial::monomial(n), t2) == doctest::Approx(n + 1.0));
  CHECK_THROWS_AS(AllowableTuple({CircleDistribution::zero()}, DiscMeasure::zero()),
                  std::invalid_argument);
}

TEST_CASE("gram matrices") {
  const AllowableTuple t2({CircleDistribution::lebesgue()},
                          DiscMeasure::circle(CircleDistribution::lebesgue()));
  const CMatrix g = gram_matrix(t2, 3);
  for (int i = 0; i <= 3; ++i) CHECK(g(i, i).real() == doctest::Approx(i + 1.0));
  CHECK(std::abs(g(0, 1)) == 0.0);

  const AllowableTuple t3({CircleDistribution::lebesgue()}, DiscMeasure::dirac(DiscPoint({0.5, 0.0})));
  CHECK(gram_matrix(t3, 3)(2, 3).real() == doctest::Approx(0.625));
  CHECK(gram_matrix(t3, 0)(0, 0).real() == doctest::Approx(1.0));

  const TupleWitness w = allowability_witness(t3, 8);
  CHECK(w.allowable);
  CHECK(w.gram_min_eigenvalue >= 1.0 - 1e-10);  // the Hardy part alone gives 1
  CHECK(w.shift_bound >= 1.0);
  CHECK(w.shift_bound <= 10.0);
}

TEST_CASE("local Douglas identity, both routes") {
  QuadratureSpec spec;
  const ComparisonReport a = verify_local_douglas(z3, 2, DiscPoint({0.5, 0.0}), spec);
  CHECK(a.rhs == doctest::Approx(2.25));
  CHECK(a.rel_err <= 1e-8);
  Rng rng(41);
  const Polynomial f = random_poly(rng, 8);
  const ComparisonReport b = verify_local_douglas(f, 1, DiscPoint({0.3, 0.4}), spec);
  CHECK(b.rel_err <= 1e-4);
  const ComparisonReport c = verify_local_douglas(z2, 1, DiscPoint({1.0, 0.0}), spec);
  CHECK(c.rhs == doctest::Approx(2.0));
  CHECK(c.rel_err <= 1e-4);
}

TEST_CASE("H-kernel integral identity") {
  QuadratureSpec spec;
  const ComparisonReport a = verify_hk_integral(1, 1, 1, DiscPoint({0.5, 0.0}), spec);
  CHECK(a.rhs == doctest::Approx(0.75));
  CHECK(a.rel_err <= 1e-8);
  const ComparisonReport b = verify_hk_integral(1, 2, 1, DiscPoint({0.5, 0.0}), spec);
  CHECK(b.rhs == doctest::Approx(0.375));
  CHECK(b.rel_err <= 1e-8);
  const ComparisonReport c = verify_hk_integral(2, 2, 2, DiscPoint({0.0, 0.0}), spec);
  CHECK(c.rhs == doctest::Approx(2.0));
  CHECK(c.rel_err <= 1e-8);
  CHECK_THROWS_AS(verify_hk_integral(2, 1, 1, DiscPoint({0.5, 0.0}), spec), std::invalid_argument);
}

TEST_CASE("difference formula") {
  const DiscMeasure d05 = DiscMeasure::dirac(DiscPoint({0.5, 0.0}));
  const ComparisonReport a = verify_difference_formula(z1, 1, d05);
  CHECK(a.lhs == doctest::Approx(0.25));
  CHECK(a.rhs == doctest::Approx(0.25));
  // sigma: Pascal on binomials
  const DiscMeasure sigma = DiscMeasure::circle(CircleDistribution::lebesgue());
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 4; ++k)
      CHECK(verify_difference_formula(Polynomial::monomial(n), k, sigma).rel_err <= 1e-13);
  const DiscMeasure mixed({{DiscPoint({0.5, 0.0}), 0.5}}, CircleDistribution::lebesgue());
  CHECK(verify_difference_formula(z3, 2, mixed).rel_err <= 1e-13);
}

TEST_CASE("one-step-up summation") {
  const DiscMeasure d0 = DiscMeasure::dirac(DiscPoint({0.0, 0.0}));
  Rng rng(53);
  const Polynomial f = random_poly(rng, 9);
  const ComparisonReport a = verify_one_step_up(f, 0, d0);
  double tail = 0.0;
  for (int j = 1; j <= 9; ++j) tail += std::norm(f.coeff(j));
  CHECK(a.lhs == doctest::Approx(tail).epsilon(1e-12));
  CHECK(a.rel_err <= 1e-12);

  const DiscMeasure sigma = DiscMeasure::circle(CircleDistribution::lebesgue());
  CHECK(verify_one_step_up(Polynomial::monomial(7), 2, sigma).rel_err <= 1e-13);

  const DiscMeasure d05 = DiscMeasure::dirac(DiscPoint({0.5, 0.0}));
  const ComparisonReport c = verify_one_step_up(z3, 1, d05);
  CHECK(c.rhs == doctest::Approx(2.25));
  CHECK(c.rel_err <= 1e-12);

  // distribution version with a signed hermitian distribution
  const auto signed_mu =
      CircleDistribution::fourier({{-2, {0.1, -0.2}}, {0, {0.3, 0.0}}, {2, {0.1, 0.2}}}, true);
  CHECK(verify_one_step_up(f, 1, signed_mu).rel_err <= 1e-12);
}

TEST_CASE("dilation bound") {
  const DiscMeasure d05 = DiscMeasure::dirac(DiscPoint({0.5, 0.0}));
  const DilationReport r1 = verify_dilation_bound(z3, 2, d05, 1.0);
  CHECK(r1.observed_ratio == doctest::Approx(1.0));
  CHECK(r1.within_factor_two);
  const DilationReport r0 = verify_dilation_bound(z3, 2, d05, 0.0);
  CHECK(r0.dilated == doctest::Approx(0.0));
  CHECK(r0.within_factor_two);
  const DilationReport r9 = verify_dilation_bound(z3, 2, d05, 0.9);
  CHECK(r9.observed_ratio <= 1.0 + 1e-12);
}

TEST_CASE("hermitian violation is reported") {
  const AllowableTuple ok({CircleDistribution::lebesgue()}, DiscMeasure::zero());
  CHECK_NOTHROW(tuple_norm_sq(z2, ok));
  // a one-sided (non-hermitian) distribution in slot 1 makes the norm complex
  const auto lopsided = CircleDistribution::fourier({{1, {0.0, 0.5}}}, false);
  const AllowableTuple bad({CircleDistribution::lebesgue(), lopsided}, DiscMeasure::zero());
  const Polynomial f({0.0, 1.0, 1.0});
  CHECK(std::abs(tuple_inner(f, f, bad).imag()) > 0.1);
  CHECK_THROWS_AS(tuple_norm_sq(f, bad), std::runtime_error);
}

TEST_CASE("boundary atoms agree across the two representations") {
  // a unit mass on the circle can sit in the atom list (local-form route) or
  // in the circle part (Fourier double-sum route); the energies must coincide
  Rng rng(71);
  for (int t = 0; t < 10; ++t) {
    const double theta = rng.uniform(0.0, 6.28);
    const double mass = rng.uniform(0.2, 1.5);
    const DiscMeasure as_atom({{DiscPoint(std::polar(1.0, theta)), mass}}, CircleDistribution::zero());
    const DiscMeasure as_circle = DiscMeasure::circle(CircleDistribution::point_atoms({{theta, mass}}));
    const Polynomial f = random_poly(rng, 7);
    for (int k = 1; k <= 3; ++k) {
      const cplx a = d_measure(f, f, k, as_atom);
      const cplx b = d_measure(f, f, k, as_circle);
      CHECK(std::abs(a - b) <= 1e-11 * (1.0 + std::abs(b)));
    }
    CHECK(std::abs(d_measure_zero(f, f, as_atom) - d_measure_zero(f, f, as_circle)) <=
          1e-11 * (1.0 + std::abs(d_measure_zero(f, f, as_circle))));
  }
}

TEST_CASE("gram degree cap") {
  const AllowableTuple t({CircleDistribution::lebesgue()}, DiscMeasure::zero());
  CHECK_THROWS_AS(gram_matrix(t, 300), std::invalid_argument);
}

TEST_CASE("annihilation of higher differences for circle distributions") {
  Rng rng(67);
  const auto dist = CircleDistribution::point_atoms({{0.4, 0.6}, {2.2, 0.4}});
  for (int t = 0; t < 20; ++t) {
    const Polynomial f = random_poly(rng, 6);
    const int k = rng.uniform_int(0, 3);
    const int n = k + rng.uniform_int(1, 3);
    cplx acc{0.0, 0.0};
    double scale = 1.0;
    for (int j = 0; j <= n; ++j) {
      const Polynomial zjf = shift_up(f, j);
      const cplx term = d_circle(zjf, zjf, k, dist);
      acc += ((j % 2 == 0) ? 1.0 : -1.0) * binom(n, j) * term;
      scale = std::max(scale, std::abs(term));
    }
    CHECK(std::abs(acc) / scale <= 1e-12);
  }
}
