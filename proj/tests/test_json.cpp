// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include "dirkit/json_io.hpp"
#include "dirkit/rng.hpp"

using namespace dirkit;

TEST_CASE("polynomial serialization, index = power") {
  const Polynomial f({{1.0, 0.0}, {0.0, -2.0}, {0.5, 0.25}});
  const json j = to_json(f);
  CHECK(j.dump() == "[[1.0,0.0],[0.0,-2.0],[0.5,0.25]]");
  const Polynomial g = polynomial_from_json(j);
  CHECK(g.coeffs() == f.coeffs());
  CHECK_THROWS_AS(polynomial_from_json(json::parse("{\"a\":1}")), std::invalid_argument);
}

TEST_CASE("circle distribution kinds") {
  const json leb = json::parse(R"({"kind":"lebesgue"})");
  CHECK(circle_from_json(leb).coeff(0) == cplx{1.0, 0.0});
  CHECK(circle_from_json(leb).coeff(3) == cplx{0.0, 0.0});

  const json atoms = json::parse(R"({"kind":"atoms","points":[{"theta":0.0,"mass":1.0}]})");
  const CircleDistribution d = circle_from_json(atoms);
  CHECK(d.coeff(5) == cplx{1.0, 0.0});
  CHECK(circle_from_json(to_json(d)).coeff(-2) == d.coeff(-2));

  const json fourier = json::parse(
      R"({"kind":"fourier","coeffs":{"0":[1.0,0.0],"1":[0.5,0.0],"-1":[0.5,0.0]},"hermitian":true})");
  const CircleDistribution f = circle_from_json(fourier);
  CHECK(f.hermitian());
  CHECK(f.coeff(1) == cplx{0.5, 0.0});
  CHECK(circle_from_json(to_json(f)).coeff(1) == f.coeff(1));

  CHECK_THROWS_AS(circle_from_json(json::parse(R"({"kind":"mystery"})")), std::invalid_argument);
}

TEST_CASE("measure round trip") {
  const json j = json::parse(
      R"({"atoms":[{"z":[0.5,0.0],"mass":0.5},{"z":[1.0,0.0],"mass":0.25}],"circle":{"kind":"lebesgue"}})");
  const DiscMeasure m = measure_from_json(j);
  CHECK(m.atoms().size() == 2);
  CHECK(m.interior_atoms().size() == 1);
  CHECK(m.boundary_atoms().size() == 1);
  CHECK(m.boundary_mass() == doctest::Approx(1.25));
  const DiscMeasure back = measure_from_json(to_json(m));
  CHECK(back.total_mass() == doctest::Approx(m.total_mass()));
}

TEST_CASE("tuple round trip") {
  const json j = json::parse(R"({
    "m": 2,
    "distributions": [{"kind":"lebesgue"},
                      {"kind":"atoms","points":[{"theta":1.0,"mass":0.5}]}],
    "top": {"atoms":[{"z":[0.3,0.4],"mass":1.0}],"circle":{"kind":"lebesgue"}}
  })");
  const AllowableTuple t = tuple_from_json(j);
  CHECK(t.order() == 2);
  const AllowableTuple back = tuple_from_json(to_json(t));
  CHECK(back.order() == 2);
  CHECK(tuple_norm_sq(Polynomial::monomial(3), back) ==
        doctest::Approx(tuple_norm_sq(Polynomial::monomial(3), t)));
  CHECK_THROWS_AS(tuple_from_json(json::parse(R"({"m":3,"distributions":[{"kind":"lebesgue"}],"top":{}})")),
                  std::invalid_argument);
}

TEST_CASE("operator JSON, both shapes") {
  const json shift = json::parse(R"({"weighted_shift":{"weights":[1.0,1.0,1.0],"n":4}})");
  const OperatorModel m = operator_from_json(shift);
  CHECK(m.horizon() == 3);
  CHECK(m.power_norm_sq(3) == doctest::Approx(1.0));

  const json full = to_json(m);
  CHECK(full.contains("matrix"));
  CHECK(full.contains("cyclic"));
  CHECK(full["horizon"] == 3);
  const OperatorModel back = operator_from_json(full);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) CHECK(std::abs(back.power_gram(a, b) - m.power_gram(a, b)) <= 1e-15);
}
