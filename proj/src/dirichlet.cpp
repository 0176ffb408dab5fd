// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dirkit/binomial.hpp"

namespace dirkit {

namespace {

int max_degree(const Polynomial& f, const Polynomial& g) {
  const auto df = f.degree(), dg = g.degree();
  int d = -1;
  if (df) d = std::max(d, *df);
  if (dg) d = std::max(d, *dg);
  return d;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

cplx d_sigma(const Polynomial& f, const Polynomial& g, int k) {
  if (k < 0) throw std::invalid_argument("d_sigma: negative order");
  const int d = max_degree(f, g);
  cplx acc{0.0, 0.0};
  for (int j = k; j <= d; ++j) acc += binom(j, k) * f.coeff(j) * std::conj(g.coeff(j));
  return acc;
}

cplx d_circle(const Polynomial& f, const Polynomial& g, int k, const CircleDistribution& mu) {
  if (k < 0) throw std::invalid_argument("d_circle: negative order");
  if (mu.kind() == CircleDistribution::Kind::lebesgue) return d_sigma(f, g, k);
  const int d = max_degree(f, g);
  cplx acc{0.0, 0.0};
  for (int j = k; j <= d; ++j) {
    const cplx fj = f.coeff(j);
    if (fj == cplx{0.0, 0.0}) continue;
    for (int l = k; l <= d; ++l) {
      const cplx gl = g.coeff(l);
      if (gl == cplx{0.0, 0.0}) continue;
      acc += binom(std::min(j, l), k) * fj * std::conj(gl) * mu.coeff(l - j);
    }
  }
  return acc;
}

cplx d_point_closed(const Polynomial& f, const Polynomial& g, int k, const DiscPoint& zeta) {
  if (k < 1) throw std::invalid_argument("d_point_closed: order must be >= 1");
  const Polynomial qf = difference_quotient(f, zeta.value());
  const Polynomial qg = difference_quotient(g, zeta.value());
  return d_sigma(qf, qg, k - 1);
}

cplx d_point_monomial(int m, int n, int k, cplx zeta) {
  if (k < 1) throw std::invalid_argument("d_point_monomial: order must be >= 1");
  if (m > n) return std::conj(d_point_monomial(n, m, k, zeta));
  if (m < k || n < k) return {0.0, 0.0};
  // conj(zeta)^{n-m} sum_{l=k-1}^{m-1} C(l, k-1) |zeta|^{2(m-1-l)}
  const double x = std::norm(zeta);
  double sum = 0.0, xp = 1.0;
  for (int l = m - 1; l >= k - 1; --l) {
    sum += binom(l, k - 1) * xp;
    xp *= x;
  }
  cplx zbar_pow{1.0, 0.0};
  const cplx zbar = std::conj(zeta);
  for (int i = 0; i < n - m; ++i) zbar_pow *= zbar;
  return zbar_pow * sum;
}

cplx hk_assembly_monomial(int m, int n, int k, cplx zeta) {
  if (k < 1) throw std::invalid_argument("hk_assembly_monomial: order must be >= 1");
  if (!DiscPoint(zeta).interior())
    throw std::domain_error("hk_assembly_monomial: zeta must be interior");
  if (m > n) return std::conj(hk_assembly_monomial(n, m, k, zeta));
  if (m < k || n < k) return {0.0, 0.0};
  // base order: the Littlewood-Paley sum
  const double x = std::norm(zeta);
  double sum = 0.0, xp = 1.0;
  for (int l = m - 1; l >= 0; --l) {
    sum += xp;
    xp *= x;
  }
  cplx value{sum, 0.0};
  // climb orders with the H-kernel closed form:
  // D_{zeta,kk} = (-D_{zeta,kk-1} + m! / ((m-kk+1)! (kk-1)!)) / (1 - |zeta|^2)
  const double ox = 1.0 - x;
  for (int kk = 2; kk <= k; ++kk) {
    const double hterm = factorial(m) / (factorial(m - kk + 1) * factorial(kk - 1));
    value = (-value + hterm) / ox;
  }
  cplx zbar_pow{1.0, 0.0};
  const cplx zbar = std::conj(zeta);
  for (int i = 0; i < n - m; ++i) zbar_pow *= zbar;
  return zbar_pow * value;
}

cplx d_measure(const Polynomial& f, const Polynomial& g, int k, const DiscMeasure& mu) {
  if (k < 1) throw std::invalid_argument("d_measure: order must be >= 1");
  cplx acc{0.0, 0.0};
  for (const DiscAtom& a : mu.atoms()) acc += a.mass * d_point_closed(f, g, k, a.point);
  acc += d_circle(f, g, k, mu.circle_part());
  return acc;
}

cplx d_measure_zero(const Polynomial& f, const Polynomial& g, const DiscMeasure& mu) {
  cplx acc{0.0, 0.0};
  for (const DiscAtom& a : mu.atoms()) acc += a.mass * f(a.point.value()) * std::conj(g(a.point.value()));
  acc += d_circle(f, g, 0, mu.circle_part());
  return acc;
}

cplx d_measure_any(const Polynomial& f, const Polynomial& g, int k, const DiscMeasure& mu) {
  return k == 0 ? d_measure_zero(f, g, mu) : d_measure(f, g, k, mu);
}

cplx tuple_inner(const Polynomial& f, const Polynomial& g, const AllowableTuple& t) {
  cplx acc{0.0, 0.0};
  for (int j = 0; j < t.order(); ++j) acc += d_circle(f, g, j, t.distributions()[j]);
  acc += d_measure(f, g, t.order(), t.top());
  return acc;
}

double tuple_norm_sq(const Polynomial& f, const AllowableTuple& t) {
  const cplx v = tuple_inner(f, f, t);
  if (std::abs(v.imag()) > 1e-10 * (1.0 + std::abs(v.real())))
    throw std::runtime_error("tuple_norm_sq: non-real norm, hermitian violation");
  return v.real();
}

CMatrix gram_matrix(const AllowableTuple& t, int d) {
  if (d < 0 || d > 256) throw std::invalid_argument("gram_matrix: degree outside [0, 256]");
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  CMatrix g(n, n);
  for (int a = 0; a <= d; ++a) {
    for (int b = a; b <= d; ++b) {
      const cplx v = tuple_inner(Polynomial::monomial(a), Polynomial::monomial(b), t);
      g(a, b) = v;
      g(b, a) = std::conj(v);
    }
  }
  return g;
}

TupleWitness allowability_witness(const AllowableTuple& t, int d) {
  TupleWitness w;
  const CMatrix g = gram_matrix(t, d + 1);  // one extra power for the shift ratio
  CMatrix g0(static_cast<std::size_t>(d) + 1, static_cast<std::size_t>(d) + 1);
  CMatrix gz(static_cast<std::size_t>(d) + 1, static_cast<std::size_t>(d) + 1);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d; ++b) {
      g0(a, b) = g(a, b);
      gz(a, b) = g(a + 1, b + 1);
    }
  w.gram_min_eigenvalue = min_eigenvalue(g0);
  w.allowable = w.gram_min_eigenvalue >= -kPsdTol;
  // largest generalized eigenvalue of (Gz, G0) via the Cholesky whitening
  const CholeskyResult chol = cholesky_upper(g0);
  if (chol.ok) {
    // M = U^{-H} Gz U^{-1}
    const CMatrix gz_uinv = solve_upper_right(gz, chol.upper);
    CMatrix m = solve_upper_right(gz_uinv.adjoint(), chol.upper).adjoint();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i; j < m.cols(); ++j) {
        const cplx s = 0.5 * (m(i, j) + std::conj(m(j, i)));
        m(i, j) = s;
        m(j, i) = std::conj(s);
      }
    w.shift_bound = max_eigenvalue(m);
  } else {
    w.shift_bound = std::numeric_limits<double>::infinity();
    w.allowable = false;
  }
  return w;
}

ComparisonReport make_comparison(double lhs, double rhs) {
  ComparisonReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = r.abs_err / (1.0 + std::abs(rhs));
  return r;
}

ComparisonReport make_comparison(cplx lhs, cplx rhs) {
  ComparisonReport r;
  r.lhs = lhs.real();
  r.rhs = rhs.real();
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = r.abs_err / (1.0 + std::abs(rhs));
  return r;
}

ComparisonReport verify_local_douglas(const Polynomial& f, int k, const DiscPoint& zeta,
                                      const QuadratureSpec& spec) {
  const double lhs = dirichlet_quadrature(f, k, zeta, spec).value.real();
  const cplx rhs = d_point_closed(f, f, k, zeta);
  return make_comparison(cplx{lhs, 0.0}, rhs);
}

ComparisonReport verify_hk_integral(int m, int n, int k, const DiscPoint& zeta,
                                    const QuadratureSpec& spec) {
  if (!(k >= 1 && k <= m && m <= n)) throw std::invalid_argument("verify_hk_integral: need 1 <= k <= m <= n");
  const cplx lhs = hk_pair_quadrature(m, n, k, zeta, spec).value;
  const cplx z = zeta.value();
  cplx zbar_pow{1.0, 0.0};
  for (int i = 0; i < n - m; ++i) zbar_pow *= std::conj(z);
  const double ox = 1.0 - std::norm(z);
  double oxk = 1.0;
  for (int i = 0; i < k; ++i) oxk *= ox;
  const cplx rhs = oxk * zbar_pow * factorial(m) * factorial(k - 1) / factorial(m - k);
  return make_comparison(lhs, rhs);
}

bool sum_lemma_check(int m, int k, const BigRational& r) {
  if (!(0 <= k && k <= m && m <= 64)) throw std::invalid_argument("sum_lemma_check: need 0 <= k <= m <= 64");
  BigRational lhs(0);
  for (int l = k; l <= m; ++l)
    lhs += BigRational(binom_big(l, k), BigInt(1)) * BigRational::pow(r, m - l);
  BigRational second(0);
  for (int l = k + 1; l <= m; ++l)
    second += BigRational(binom_big(l, k + 1), BigInt(1)) * BigRational::pow(r, m - l);
  lhs += (BigRational(1) - r) * second;
  return lhs == BigRational(binom_big(m + 1, k + 1), BigInt(1));
}

bool magic_identity_check(int n, int m, const BigRational& x) {
  if (!(0 <= m && m < n && n <= 64)) throw std::invalid_argument("magic_identity_check: need 0 <= m < n <= 64");
  BigRational lhs(0), rhs(0);
  const BigRational xm1 = x - BigRational(1);
  for (int j = 0; j <= n - m - 1; ++j) {
    lhs += BigRational(binom_big(n, j + m + 1), BigInt(1)) * BigRational::pow(xm1, j);
    rhs += BigRational(binom_big(n - j - 1, m), BigInt(1)) * BigRational::pow(x, j);
  }
  return lhs == rhs;
}

ComparisonReport verify_difference_formula(const Polynomial& f, int k, const DiscMeasure& mu) {
  if (k < 1) throw std::invalid_argument("verify_difference_formula: order must be >= 1");
  const Polynomial zf = shift_up(f);
  const cplx lhs = d_measure(zf, zf, k, mu) - d_measure(f, f, k, mu);
  const cplx rhs = d_measure_any(f, f, k - 1, mu);
  return make_comparison(lhs, rhs);
}

ComparisonReport verify_one_step_up(const Polynomial& f, int k, const DiscMeasure& mu) {
  const auto deg = f.degree();
  cplx lhs{0.0, 0.0};
  if (deg) {
    for (int j = 1; j <= *deg; ++j) {
      const Polynomial lf = backward_shift_power(f, j);
      lhs += d_measure_any(lf, lf, k, mu);
    }
  }
  const cplx rhs = d_measure_any(f, f, k + 1, mu);
  return make_comparison(lhs, rhs);
}

ComparisonReport verify_one_step_up(const Polynomial& f, int k, const CircleDistribution& mu) {
  const auto deg = f.degree();
  cplx lhs{0.0, 0.0};
  if (deg) {
    for (int j = 1; j <= *deg; ++j) {
      const Polynomial lf = backward_shift_power(f, j);
      lhs += d_circle(lf, lf, k, mu);
    }
  }
  const cplx rhs = d_circle(f, f, k + 1, mu);
  return make_comparison(lhs, rhs);
}

DilationReport verify_dilation_bound(const Polynomial& f, int k, const DiscMeasure& mu, double r) {
  DilationReport rep;
  rep.dilated = d_measure_any(dilate(f, r), dilate(f, r), k, mu).real();
  rep.undilated = d_measure_any(f, f, k, mu).real();
  rep.observed_ratio = rep.undilated > 0.0 ? rep.dilated / rep.undilated : 0.0;
  rep.within_factor_two = rep.dilated <= 2.0 * rep.undilated + 1e-10;
  return rep;
}

}  // namespace dirkit
