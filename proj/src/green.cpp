// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/green.hpp"

#include <cmath>
#include <stdexcept>

namespace dirkit {

namespace {

void check_order(int k) {
  if (k < 1 || k > kMaxGreenOrder) throw std::domain_error("green: order outside [1, 16]");
}

// 1 - |z|^2 without squaring-then-subtracting when |z| is near 1.
double one_minus_abs_sq(cplx z) {
  const double a = std::abs(z);
  return (1.0 - a) * (1.0 + a);
}

double int_pow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

double green_k(int k, cplx z, cplx zeta) {
  check_order(k);
  if (std::abs(z) >= 1.0) throw std::domain_error("green_k: z must be interior");
  if (std::abs(zeta) > 1.0 + DiscPoint::kClosedDiscTol)
    throw std::domain_error("green_k: zeta outside the closed disc");

  const double d2 = std::norm(zeta - z);
  // |1 - z conj(zeta)|^2 - |zeta - z|^2 = (1-|z|^2)(1-|zeta|^2) exactly, so
  // with x below and u = x/d2 the kernel collapses to the log1p Taylor tail
  //   G_k = d2^{k-1} * sum_{l >= k} (-1)^{l+1} u^l / l.
  // The tail series is free of cancellation; it is used whenever it converges
  // fast, the direct form with log1p otherwise.
  const double x = one_minus_abs_sq(z) * one_minus_abs_sq(zeta);

  if (d2 == 0.0) {
    if (k == 1) throw std::domain_error("green_k: pole at z == zeta for k = 1");
    // continuous extension: only the l = k-1 term survives
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k-1}
    return sign / (k - 1) * int_pow(x, k - 1);
  }

  const double u = x / d2;
  if (u <= 0.5) {
    double term = int_pow(u, k) / k;
    double tail = (k % 2 == 0) ? -term : term;  // (-1)^{k+1} u^k / k
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    double upow = int_pow(u, k);
    for (int l = k + 1; l <= k + 80; ++l) {
      upow *= u;
      const double t = sign * upow / l;
      tail += t;
      sign = -sign;
      if (std::abs(t) < 1e-18 * std::abs(tail)) break;
    }
    return int_pow(d2, k - 1) * tail;
  }

  double value = int_pow(d2, k - 1) * std::log1p(u);
  double sign = -1.0;
  for (int l = 1; l <= k - 1; ++l) {
    value += sign / l * int_pow(d2, k - 1 - l) * int_pow(x, l);
    sign = -sign;
  }
  return value;
}

double h_k(int n, cplx z, cplx zeta) {
  if (n < 1 || n > kMaxGreenOrder) throw std::domain_error("h_k: order outside [1, 16]");
  if (std::abs(z) >= 1.0) throw std::domain_error("h_k: z must be interior");
  if (std::abs(zeta) > 1.0 + DiscPoint::kClosedDiscTol)
    throw std::domain_error("h_k: zeta outside the closed disc");
  const double denom = std::norm(1.0 - std::conj(z) * zeta);
  if (denom < 1e-14) throw std::domain_error("h_k: near pole, conj(z) zeta too close to 1");
  const double oz = one_minus_abs_sq(z);
  const double ozeta = one_minus_abs_sq(zeta);
  const double ozz = one_minus_abs_sq(z * zeta);
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * int_pow(ozeta, n) * int_pow(oz, n - 1) * ozz / denom;
}

double u_local(int k, const DiscPoint& zeta, cplx z) {
  check_order(k);
  if (std::abs(z) >= 1.0) throw std::domain_error("u_local: z must be interior");
  if (zeta.interior()) {
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
    return sign * green_k(k, z, zeta.value());
  }
  const double d2 = std::norm(z - zeta.value());
  if (d2 < 1e-28) throw std::domain_error("u_local: pole at boundary zeta");
  const double oz = one_minus_abs_sq(z);
  return oz / d2 * int_pow(oz, k - 1);
}

double green_recurrence_residual(int k, cplx z, cplx zeta) {
  if (k < 2) throw std::domain_error("green_recurrence_residual: k must be >= 2");
  const double gk = green_k(k, z, zeta);
  const double gkm1 = green_k(k - 1, z, zeta);
  const double d2 = std::norm(z - zeta);
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k-1}
  const double tail =
      sign / (k - 1) * int_pow(one_minus_abs_sq(z), k - 1) * int_pow(one_minus_abs_sq(zeta), k - 1);
  return gk - d2 * gkm1 - tail;
}

double mobius_transport_residual(int k, const MobiusMap& phi, cplx z, cplx zeta) {
  check_order(k);
  const cplx a = phi.a;
  const double lhs = green_k(k, phi(z), phi(zeta));
  const double num = one_minus_abs_sq(a);
  const double den = std::abs(1.0 - std::conj(a) * z) * std::abs(1.0 - std::conj(a) * zeta);
  const double factor = int_pow(num / den, 2 * (k - 1));
  return lhs - factor * green_k(k, z, zeta);
}

double laplacian_relation_residual(int k, cplx z, cplx zeta, double h_fd) {
  if (k < 2) throw std::domain_error("laplacian_relation_residual: k must be >= 2");
  if (h_fd <= 0.0) throw std::invalid_argument("laplacian_relation_residual: bad step");
  const double margin = 10.0 * h_fd;
  if (std::abs(z) > 1.0 - margin || std::abs(z - zeta) < margin)
    throw std::domain_error("laplacian_relation_residual: stencil too close to the boundary or to zeta");

  const cplx h{h_fd, 0.0}, ih{0.0, h_fd};
  const double fd = (green_k(k, z + h, zeta) + green_k(k, z - h, zeta) + green_k(k, z + ih, zeta) +
                     green_k(k, z - ih, zeta) - 4.0 * green_k(k, z, zeta)) /
                    (4.0 * h_fd * h_fd);
  const double closed = (k - 1.0) * (k - 1.0) * green_k(k - 1, z, zeta) - (k - 1.0) * h_k(k - 1, z, zeta);
  return fd - closed;
}

double g_ratio_series(int k, double x, int n_terms) {
  if (k < 2 || k > kMaxGreenOrder) throw std::domain_error("g_ratio_series: k outside [2, 16]");
  if (x <= 0.0 || x >= 1.0) throw std::domain_error("g_ratio_series: x outside (0, 1)");
  double factorial = 1.0;
  for (int i = 2; i <= k - 1; ++i) factorial *= i;
  double sum = 0.0, xn = 1.0;
  for (int n = 0; n < n_terms; ++n) {
    double denom = 1.0;
    for (int i = 1; i <= k; ++i) denom *= static_cast<double>(n + i);
    sum += xn / denom;
    xn *= x;
  }
  return factorial * sum;
}

namespace {
double sandwich_q(int k, cplx z, cplx zeta) {
  const double num = one_minus_abs_sq(zeta) * one_minus_abs_sq(z);
  const double den = std::norm(1.0 - std::conj(zeta) * z);
  return int_pow(num, k) / den;
}
}  // namespace

double green_sandwich_lower(int k, cplx z, cplx zeta) {
  if (k < 2) throw std::domain_error("green_sandwich_lower: k must be >= 2");
  return sandwich_q(k, z, zeta) / k;
}

double green_sandwich_upper(int k, cplx z, cplx zeta) {
  if (k < 2) throw std::domain_error("green_sandwich_upper: k must be >= 2");
  return sandwich_q(k, z, zeta) / (k - 1);
}

}  // namespace dirkit
