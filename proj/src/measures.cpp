// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace dirkit {

CircleDistribution CircleDistribution::lebesgue() {
  CircleDistribution d;
  d.kind_ = Kind::lebesgue;
  d.hermitian_ = true;
  return d;
}

CircleDistribution CircleDistribution::point_atoms(std::vector<CircleAtom> atoms) {
  for (const CircleAtom& a : atoms)
    if (a.mass <= 0.0) throw std::invalid_argument("CircleDistribution: atom masses must be positive");
  CircleDistribution d;
  d.kind_ = Kind::atoms;
  d.hermitian_ = true;
  d.atoms_ = std::move(atoms);
  return d;
}

CircleDistribution CircleDistribution::fourier(std::map<long, cplx> coeffs, bool hermitian) {
  if (hermitian) {
    for (const auto& [n, v] : coeffs) {
      const auto it = coeffs.find(-n);
      const cplx mirror = it == coeffs.end() ? cplx{0.0, 0.0} : it->second;
      if (std::abs(mirror - std::conj(v)) > 1e-12)
        throw std::invalid_argument("CircleDistribution: hermitian flag violated by coefficients");
    }
  }
  CircleDistribution d;
  d.kind_ = Kind::fourier;
  d.hermitian_ = hermitian;
  d.fourier_ = std::move(coeffs);
  return d;
}

CircleDistribution CircleDistribution::zero() { return fourier({}, true); }

cplx CircleDistribution::coeff(long n) const {
  switch (kind_) {
    case Kind::lebesgue:
      return n == 0 ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    case Kind::atoms: {
      cplx acc{0.0, 0.0};
      for (const CircleAtom& a : atoms_)
        acc += a.mass * std::polar(1.0, -static_cast<double>(n) * a.theta);
      return acc;
    }
    case Kind::fourier: {
      const auto it = fourier_.find(n);
      return it == fourier_.end() ? cplx{0.0, 0.0} : it->second;
    }
  }
  return {0.0, 0.0};
}

double CircleDistribution::toeplitz_min_eigenvalue(int d) const {
  CMatrix t(static_cast<std::size_t>(d) + 1, static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j)
    for (int l = 0; l <= d; ++l) t(j, l) = coeff(l - j);
  return min_eigenvalue(t);
}

bool CircleDistribution::positive_witness(int d, double tol) const {
  if (!hermitian_) return false;
  return toeplitz_min_eigenvalue(d) >= -tol;
}

DiscMeasure::DiscMeasure(std::vector<DiscAtom> atoms, CircleDistribution circle_part,
                         int positivity_witness_degree)
    : atoms_(std::move(atoms)), circle_(std::move(circle_part)) {
  for (const DiscAtom& a : atoms_)
    if (a.mass <= 0.0) throw std::invalid_argument("DiscMeasure: atom masses must be positive");
  if (!circle_.positive_witness(positivity_witness_degree))
    throw std::invalid_argument("DiscMeasure: circle part fails the positive-measure witness");
}

DiscMeasure DiscMeasure::dirac(DiscPoint point, double mass) {
  return DiscMeasure({DiscAtom{point, mass}}, CircleDistribution::zero());
}

DiscMeasure DiscMeasure::zero() { return DiscMeasure({}, CircleDistribution::zero()); }

DiscMeasure DiscMeasure::circle(CircleDistribution part) { return DiscMeasure({}, std::move(part)); }

std::vector<DiscAtom> DiscMeasure::interior_atoms() const {
  std::vector<DiscAtom> out;
  for (const DiscAtom& a : atoms_)
    if (a.point.interior()) out.push_back(a);
  return out;
}

std::vector<DiscAtom> DiscMeasure::boundary_atoms() const {
  std::vector<DiscAtom> out;
  for (const DiscAtom& a : atoms_)
    if (a.point.boundary()) out.push_back(a);
  return out;
}

double DiscMeasure::total_mass() const {
  double m = circle_.mass();
  for (const DiscAtom& a : atoms_) m += a.mass;
  return m;
}

double DiscMeasure::boundary_mass() const {
  double m = circle_.mass();
  for (const DiscAtom& a : atoms_)
    if (a.point.boundary()) m += a.mass;
  return m;
}

bool DiscMeasure::is_zero() const {
  if (!atoms_.empty()) return false;
  if (circle_.kind() == CircleDistribution::Kind::lebesgue) return false;
  if (circle_.kind() == CircleDistribution::Kind::atoms) return circle_.atoms().empty();
  for (const auto& [n, v] : circle_.fourier_table())
    if (v != cplx{0.0, 0.0}) return false;
  return true;
}

AllowableTuple::AllowableTuple(std::vector<CircleDistribution> distributions, DiscMeasure top)
    : distributions_(std::move(distributions)), top_(std::move(top)) {
  if (distributions_.empty()) throw std::invalid_argument("AllowableTuple: order must be >= 1");
  if (std::abs(distributions_[0].coeff(0) - cplx{1.0, 0.0}) > 1e-10)
    throw std::invalid_argument("AllowableTuple: mu_0 must be normalized to unit mass");
}

}  // namespace dirkit
