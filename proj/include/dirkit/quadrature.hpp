// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_QUADRATURE_HPP
#define DIRKIT_QUADRATURE_HPP

#include <functional>
#include <optional>
#include <stdexcept>

#include "dirkit/disc_point.hpp"
#include "dirkit/polynomial.hpp"

namespace dirkit {

/// Tensor polar rule over the unit disc: composite Gauss-Legendre in radius,
/// trapezoid in angle, area measure normalized so the disc has measure 1.
///
/// With an interior singular point tagged, the polar coordinates are centered
/// at that point (radius |z - center| over graded panels), which turns the
/// angular direction smooth. With a boundary pole tagged, radial panels are
/// graded toward |z| = 1 and the angle toward the pole.
struct QuadratureSpec {
  int radial_nodes = 48;  // Gauss-Legendre nodes per panel
  int angular_nodes = 256;
  int annuli = 8;  // graded radial panels
  double grading_exponent = 3.0;
  double boundary_angular_exponent = 4.0;
  std::optional<cplx> grading_center;  // overrides the integrand tag when set

  void validate() const;
};

struct DiscIntegrand {
  std::function<cplx(cplx)> eval;
  std::optional<cplx> log_singularity_at;  // interior point
  std::optional<cplx> boundary_pole_at;    // point of the unit circle
};

struct QuadratureResult {
  cplx value;
  double error_estimate = 0.0;  // |value - value at half resolution|
};

/// Raised when a quadrature result fails a requested accuracy; carries the
/// internal error estimate.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(double estimate, double requested)
      : std::runtime_error("quadrature error estimate exceeds the requested tolerance"),
        error_estimate(estimate),
        requested_tolerance(requested) {}
  double error_estimate;
  double requested_tolerance;
};

QuadratureResult integrate_disc(const DiscIntegrand& g, const QuadratureSpec& spec);

/// Weighted Dirichlet integral of order k at zeta by direct quadrature, with
/// the normalizing prefactor included: for interior zeta
///   1/((1-|zeta|^2)^k ((k-1)!)^2) * Int |f^(k)|^2 u_local dA,
/// for boundary zeta
///   1/(k! (k-1)!) * Int |f^(k)|^2 P_{delta_zeta} (1-|z|^2)^{k-1} dA.
/// Throws AccuracyError when required_rel_tol is given and the internal
/// estimate exceeds it relative to (1 + |value|).
QuadratureResult dirichlet_quadrature(const Polynomial& f, int k, const DiscPoint& zeta,
                                      const QuadratureSpec& spec,
                                      std::optional<double> required_rel_tol = std::nullopt);

/// Sesquilinear variant of the same integral for a pair (f, g).
QuadratureResult dirichlet_pair_quadrature(const Polynomial& f, const Polynomial& g, int k,
                                           const DiscPoint& zeta, const QuadratureSpec& spec);

/// (-1)^{k-1} Int (z^m)^(k) conj((z^n)^(k)) H_k(z,zeta) dA for interior zeta.
QuadratureResult hk_pair_quadrature(int m, int n, int k, const DiscPoint& zeta,
                                    const QuadratureSpec& spec);

}  // namespace dirkit

#endif  // DIRKIT_QUADRATURE_HPP
