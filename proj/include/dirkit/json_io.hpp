// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_JSON_IO_HPP
#define DIRKIT_JSON_IO_HPP

#include <json.hpp>

#include "dirkit/measures.hpp"
#include "dirkit/operators.hpp"
#include "dirkit/polynomial.hpp"

namespace dirkit {

using json = nlohmann::ordered_json;

// Polynomials serialize as arrays of [re, im] pairs, index = power.
json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const json& j);

// {"kind":"lebesgue"} | {"kind":"atoms","points":[{"theta":t,"mass":w},...]}
// | {"kind":"fourier","coeffs":{"0":[re,im],...},"hermitian":true}
json to_json(const CircleDistribution& d);
CircleDistribution circle_from_json(const json& j);

// {"atoms":[{"z":[re,im],"mass":w},...], "circle": circle-json}
json to_json(const DiscMeasure& m);
DiscMeasure measure_from_json(const json& j);

// {"m":m, "distributions":[circle-json,...], "top": measure-json}
json to_json(const AllowableTuple& t);
AllowableTuple tuple_from_json(const json& j);

// {"matrix":[[[re,im],...],...], "cyclic":[[re,im],...], "horizon":h}
// or {"weighted_shift":{"weights":[...], "n":N}}
json to_json(const OperatorModel& m);
OperatorModel operator_from_json(const json& j);

}  // namespace dirkit

#endif  // DIRKIT_JSON_IO_HPP
