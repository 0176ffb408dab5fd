// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_MEASURES_HPP
#define DIRKIT_MEASURES_HPP

#include <map>
#include <vector>

#include "dirkit/disc_point.hpp"
#include "dirkit/la.hpp"

namespace dirkit {

/// Minimum-eigenvalue slack accepted by all positive-semidefiniteness checks.
inline constexpr double kPsdTol = 1e-10;

struct CircleAtom {
  double theta;
  double mass;
};

/// Distribution on the unit circle, represented by its Fourier coefficients
/// mu_hat(n) = mu(conj(zeta)^n). Three shapes cover everything the library
/// needs: normalized Lebesgue measure (mu_hat(n) = [n == 0]), finite sums of
/// point masses, and explicit finite coefficient tables.
class CircleDistribution {
 public:
  enum class Kind { lebesgue, atoms, fourier };

  static CircleDistribution lebesgue();
  static CircleDistribution point_atoms(std::vector<CircleAtom> atoms);
  static CircleDistribution fourier(std::map<long, cplx> coeffs, bool hermitian);
  /// The zero distribution (empty fourier table).
  static CircleDistribution zero();

  cplx coeff(long n) const;
  bool hermitian() const { return hermitian_; }
  double mass() const { return coeff(0).real(); }
  Kind kind() const { return kind_; }
  const std::vector<CircleAtom>& atoms() const { return atoms_; }
  const std::map<long, cplx>& fourier_table() const { return fourier_; }

  /// Minimum eigenvalue of the (d+1)x(d+1) Toeplitz matrix [mu_hat(l - j)].
  double toeplitz_min_eigenvalue(int d) const;
  /// Positive-measure witness at working degree d.
  bool positive_witness(int d, double tol = kPsdTol) const;

 private:
  CircleDistribution() = default;
  Kind kind_ = Kind::fourier;
  bool hermitian_ = true;
  std::vector<CircleAtom> atoms_;
  std::map<long, cplx> fourier_;
};

struct DiscAtom {
  DiscPoint point;
  double mass;
};

/// Finite positive measure on the closed disc: point masses (interior or
/// boundary) plus a circle part that must be a positive measure. Interior
/// atoms form the restriction to the open disc; boundary atoms and the circle
/// part form the restriction to the circle.
class DiscMeasure {
 public:
  DiscMeasure(std::vector<DiscAtom> atoms, CircleDistribution circle_part,
              int positivity_witness_degree = 16);

  static DiscMeasure dirac(DiscPoint point, double mass = 1.0);
  static DiscMeasure zero();
  static DiscMeasure circle(CircleDistribution part);

  const std::vector<DiscAtom>& atoms() const { return atoms_; }
  const CircleDistribution& circle_part() const { return circle_; }
  std::vector<DiscAtom> interior_atoms() const;
  std::vector<DiscAtom> boundary_atoms() const;
  double total_mass() const;
  double boundary_mass() const;  // mu restricted to the circle
  bool is_zero() const;

 private:
  std::vector<DiscAtom> atoms_;
  CircleDistribution circle_;
};

/// Model data for a cyclic operator of finite order m: distributions
/// mu_0..mu_{m-1} on the circle and a positive measure mu_m on the closed
/// disc, with mu_0 normalized to unit mass.
class AllowableTuple {
 public:
  AllowableTuple(std::vector<CircleDistribution> distributions, DiscMeasure top);

  int order() const { return static_cast<int>(distributions_.size()); }
  const std::vector<CircleDistribution>& distributions() const { return distributions_; }
  const DiscMeasure& top() const { return top_; }

 private:
  std::vector<CircleDistribution> distributions_;
  DiscMeasure top_;
};

}  // namespace dirkit

#endif  // DIRKIT_MEASURES_HPP
