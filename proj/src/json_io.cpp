// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/json_io.hpp"

#include <stdexcept>

namespace dirkit {

namespace {

json complex_to_json(cplx v) { return json::array({v.real(), v.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json to_json(const Polynomial& f) {
  json arr = json::array();
  for (const cplx& c : f.coeffs()) arr.push_back(complex_to_json(c));
  return arr;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array of [re, im] pairs");
  std::vector<cplx> coeffs;
  coeffs.reserve(j.size());
  for (const json& c : j) coeffs.push_back(complex_from_json(c));
  return Polynomial(std::move(coeffs));
}

json to_json(const CircleDistribution& d) {
  json j;
  switch (d.kind()) {
    case CircleDistribution::Kind::lebesgue:
      j["kind"] = "lebesgue";
      break;
    case CircleDistribution::Kind::atoms: {
      j["kind"] = "atoms";
      json points = json::array();
      for (const CircleAtom& a : d.atoms()) points.push_back({{"theta", a.theta}, {"mass", a.mass}});
      j["points"] = std::move(points);
      break;
    }
    case CircleDistribution::Kind::fourier: {
      j["kind"] = "fourier";
      json coeffs = json::object();
      for (const auto& [n, v] : d.fourier_table()) coeffs[std::to_string(n)] = complex_to_json(v);
      j["coeffs"] = std::move(coeffs);
      j["hermitian"] = d.hermitian();
      break;
    }
  }
  return j;
}

CircleDistribution circle_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "lebesgue") return CircleDistribution::lebesgue();
  if (kind == "atoms") {
    std::vector<CircleAtom> atoms;
    for (const json& p : j.at("points"))
      atoms.push_back({p.at("theta").get<double>(), p.at("mass").get<double>()});
    return CircleDistribution::point_atoms(std::move(atoms));
  }
  if (kind == "fourier") {
    std::map<long, cplx> coeffs;
    for (const auto& [key, value] : j.at("coeffs").items())
      coeffs[std::stol(key)] = complex_from_json(value);
    const bool hermitian = j.value("hermitian", true);
    return CircleDistribution::fourier(std::move(coeffs), hermitian);
  }
  throw std::invalid_argument("circle distribution: unknown kind '" + kind + "'");
}

json to_json(const DiscMeasure& m) {
  json atoms = json::array();
  for (const DiscAtom& a : m.atoms())
    atoms.push_back({{"z", complex_to_json(a.point.value())}, {"mass", a.mass}});
  return json{{"atoms", std::move(atoms)}, {"circle", to_json(m.circle_part())}};
}

DiscMeasure measure_from_json(const json& j) {
  std::vector<DiscAtom> atoms;
  for (const json& a : j.value("atoms", json::array()))
    atoms.push_back({DiscPoint(complex_from_json(a.at("z"))), a.at("mass").get<double>()});
  CircleDistribution circle =
      j.contains("circle") ? circle_from_json(j.at("circle")) : CircleDistribution::zero();
  return DiscMeasure(std::move(atoms), std::move(circle));
}

json to_json(const AllowableTuple& t) {
  json distributions = json::array();
  for (const CircleDistribution& d : t.distributions()) distributions.push_back(to_json(d));
  return json{{"m", t.order()}, {"distributions", std::move(distributions)}, {"top", to_json(t.top())}};
}

AllowableTuple tuple_from_json(const json& j) {
  const int m = j.at("m").get<int>();
  std::vector<CircleDistribution> distributions;
  for (const json& d : j.at("distributions")) distributions.push_back(circle_from_json(d));
  if (static_cast<int>(distributions.size()) != m)
    throw std::invalid_argument("tuple: 'm' does not match the distribution count");
  return AllowableTuple(std::move(distributions), measure_from_json(j.at("top")));
}

json to_json(const OperatorModel& m) {
  if (!m.has_matrix()) throw std::invalid_argument("operator: gram-backed models do not serialize");
  const CMatrix& t = m.matrix();
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < t.cols(); ++k) row.push_back(complex_to_json(t(i, k)));
    rows.push_back(std::move(row));
  }
  json cyclic = json::array();
  for (const cplx& v : m.cyclic()) cyclic.push_back(complex_to_json(v));
  return json{{"matrix", std::move(rows)}, {"cyclic", std::move(cyclic)}, {"horizon", m.horizon()}};
}

OperatorModel operator_from_json(const json& j) {
  if (j.contains("weighted_shift")) {
    const json& ws = j.at("weighted_shift");
    const int n = ws.at("n").get<int>();
    std::vector<double> weights;
    for (const json& w : ws.at("weights")) weights.push_back(w.get<double>());
    return OperatorModel::weighted_shift(weights, n);
  }
  const json& rows = j.at("matrix");
  const std::size_t n = rows.size();
  CMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (row.size() != n) throw std::invalid_argument("operator: matrix must be square");
    for (std::size_t k = 0; k < n; ++k) t(i, k) = complex_from_json(row[k]);
  }
  std::vector<cplx> cyclic;
  for (const json& v : j.at("cyclic")) cyclic.push_back(complex_from_json(v));
  const int horizon = j.value("horizon", static_cast<int>(n) - 1);
  return OperatorModel::from_matrix(std::move(t), std::move(cyclic), horizon);
}

}  // namespace dirkit
