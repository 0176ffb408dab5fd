// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_GREEN_HPP
#define DIRKIT_GREEN_HPP

#include <complex>

#include "dirkit/disc_point.hpp"

namespace dirkit {

using cplx = std::complex<double>;

/// Kernel orders are capped so that the factorial prefactors appearing in the
/// Dirichlet normalizations stay comfortably inside double range.
inline constexpr int kMaxGreenOrder = 16;

/// Polyharmonic Green function of the unit disc of order k:
///
///   G_k(z,zeta) = |zeta-z|^{2(k-1)} log |(1 - z conj(zeta)) / (zeta - z)|^2
///               + sum_{l=1}^{k-1} ((-1)^l / l) |zeta-z|^{2(k-1-l)}
///                 (1-|zeta|^2)^l (1-|z|^2)^l.
///
/// For k >= 2 the value at z == zeta is the continuous extension: the log term
/// vanishes and only the l = k-1 term of the sum survives. For k == 1 the
/// kernel has a genuine logarithmic pole at z == zeta and evaluation there
/// throws.
double green_k(int k, cplx z, cplx zeta);

/// Companion kernel
///   H_n(z,zeta) = (-1)^{n-1} (1-|zeta|^2)^n (1-|z|^2)^{n-1}
///                 (1-|z zeta|^2) / |1 - conj(z) zeta|^2.
double h_k(int n, cplx z, cplx zeta);

/// Local weight: (-1)^{k+1} G_k(z,zeta) for interior zeta (strictly positive),
/// and the Poisson-type weight P_{delta_zeta}(z) (1-|z|^2)^{k-1} with
/// P_{delta_zeta}(z) = (1-|z|^2)/|z-zeta|^2 for boundary zeta.
double u_local(int k, const DiscPoint& zeta, cplx z);

/// G_k - |z-zeta|^2 G_{k-1} - ((-1)^{k-1}/(k-1)) (1-|z|^2)^{k-1} (1-|zeta|^2)^{k-1}.
double green_recurrence_residual(int k, cplx z, cplx zeta);

/// The disc automorphism phi_a(w) = (a - w) / (1 - conj(a) w); an involution.
struct MobiusMap {
  explicit MobiusMap(cplx a_) : a(a_) {
    if (std::abs(a) >= 1.0) throw std::domain_error("MobiusMap: |a| must be < 1");
  }
  cplx operator()(cplx w) const { return (a - w) / (1.0 - std::conj(a) * w); }
  cplx a;
};

/// G_k(phi_a(z), phi_a(zeta)) - ((1-|a|^2)/(|1-conj(a)z||1-conj(a)zeta|))^{2(k-1)} G_k(z,zeta).
double mobius_transport_residual(int k, const MobiusMap& phi, cplx z, cplx zeta);

/// Five-point finite-difference Laplacian of z -> G_k(z,zeta) minus the closed
/// form (k-1)^2 G_{k-1} - (k-1) H_{k-1}. The complex Laplacian is a quarter of
/// the real one. The stencil must stay inside the disc and away from zeta.
double laplacian_relation_residual(int k, cplx z, cplx zeta, double h_fd = 1e-4);

/// N-term partial sum of (k-1)! sum_{n>=0} x^n / ((n+1)(n+2)...(n+k)), which
/// approximates (-1)^{k+1} G_k(z,0) / (1-|z|^2)^k at |z|^2 = 1-x. All series
/// coefficients are positive, so the ratio decreases in |z|^2. Truncation
/// error is below (k-1)! x^N / ((N+1)^k (1-x)).
double g_ratio_series(int k, double x, int n_terms);

/// Two-sided bound around (-1)^{k+1} G_k for k >= 2:
///   Q/k <= (-1)^{k+1} G_k(z,zeta) <= Q/(k-1),
///   Q = ((1-|zeta|^2)(1-|z|^2))^k / |1 - conj(zeta) z|^2.
double green_sandwich_lower(int k, cplx z, cplx zeta);
double green_sandwich_upper(int k, cplx z, cplx zeta);

}  // namespace dirkit

#endif  // DIRKIT_GREEN_HPP
