// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_DIRICHLET_HPP
#define DIRKIT_DIRICHLET_HPP

#include "dirkit/bigint.hpp"
#include "dirkit/la.hpp"
#include "dirkit/measures.hpp"
#include "dirkit/polynomial.hpp"
#include "dirkit/quadrature.hpp"

namespace dirkit {

// ---------------------------------------------------------------------------
// Closed-form sesquilinear Dirichlet forms (linear in f, antilinear in g).
// ---------------------------------------------------------------------------

/// Order-k form against normalized Lebesgue measure on the circle:
/// sum_{j >= k} C(j, k) f_hat(j) conj(g_hat(j)). Order 0 is the H^2 pairing.
cplx d_sigma(const Polynomial& f, const Polynomial& g, int k);

/// Order-k form against a circle distribution:
/// sum_{j,l >= k} C(min(j,l), k) f_hat(j) conj(g_hat(l)) mu_hat(l - j).
cplx d_circle(const Polynomial& f, const Polynomial& g, int k, const CircleDistribution& mu);

/// Local form of order k >= 1 at a point of the closed disc, computed through
/// difference quotients: d_sigma(q_f, q_g, k-1) with q_h = (h - h(zeta))/(z - zeta).
cplx d_point_closed(const Polynomial& f, const Polynomial& g, int k, const DiscPoint& zeta);

/// The same local form on a monomial pair (z^m, z^n): for k <= min(m, n),
///   conj(zeta)^{n-m} sum_{l=k-1}^{min(m,n)-1} C(l, k-1) zeta^{p} conj(zeta)^{q}
/// collapses to the one-variable closed form when m <= n; zero when either
/// power is below k.
cplx d_point_monomial(int m, int n, int k, cplx zeta);

/// Assembly of the monomial local form from the H-kernel integral identity and
/// the order recursion, an algebraically independent route from
/// d_point_monomial. Requires k >= 1 and interior zeta (the recursion divides
/// by 1 - |zeta|^2).
cplx hk_assembly_monomial(int m, int n, int k, cplx zeta);

/// Order-k form (k >= 1) against a disc measure: atoms through the local form
/// plus the circle part through the Fourier double sum.
cplx d_measure(const Polynomial& f, const Polynomial& g, int k, const DiscMeasure& mu);

/// Order-0 form: sum_i w_i f(zeta_i) conj(g(zeta_i)) over all atoms plus the
/// circle part at order 0.
cplx d_measure_zero(const Polynomial& f, const Polynomial& g, const DiscMeasure& mu);

/// Convenience dispatcher for D_{mu,k} with k = 0 allowed.
cplx d_measure_any(const Polynomial& f, const Polynomial& g, int k, const DiscMeasure& mu);

// ---------------------------------------------------------------------------
// Tuple norms and allowability witnesses.
// ---------------------------------------------------------------------------

cplx tuple_inner(const Polynomial& f, const Polynomial& g, const AllowableTuple& t);

/// sum_{j=0}^{m-1} D_{mu_j, j}(f) + D_{mu_m, m}(f); throws when the value has
/// an imaginary part beyond 1e-10 (hermitian violation).
double tuple_norm_sq(const Polynomial& f, const AllowableTuple& t);

/// Gram matrix of the monomials 1, z, ..., z^d: entry (a, b) = <z^a, z^b>.
CMatrix gram_matrix(const AllowableTuple& t, int d);

struct TupleWitness {
  double gram_min_eigenvalue = 0.0;
  double shift_bound = 0.0;  // max ||z f||^2 / ||f||^2 over the monomial span
  bool allowable = false;
};
TupleWitness allowability_witness(const AllowableTuple& t, int d = 24);

// ---------------------------------------------------------------------------
// Identity verifications. Each report carries both routes and the error.
// ---------------------------------------------------------------------------

struct ComparisonReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass(double tol) const { return rel_err <= tol; }
};

ComparisonReport make_comparison(double lhs, double rhs);
ComparisonReport make_comparison(cplx lhs, cplx rhs);

/// Quadrature route vs difference-quotient route for D_{zeta,k}(f).
ComparisonReport verify_local_douglas(const Polynomial& f, int k, const DiscPoint& zeta,
                                      const QuadratureSpec& spec);

/// Quadrature of the H_k-weighted monomial integral vs its closed form
/// (1-|zeta|^2)^k conj(zeta)^{n-m} m! (k-1)! / (m-k)!, for k <= m <= n.
ComparisonReport verify_hk_integral(int m, int n, int k, const DiscPoint& zeta,
                                    const QuadratureSpec& spec);

/// Exact-rational check of
/// sum_{l=k}^m C(l,k) r^{m-l} + (1-r) sum_{l=k+1}^m C(l,k+1) r^{m-l} = C(m+1,k+1).
bool sum_lemma_check(int m, int k, const BigRational& r);

/// Exact-rational check of
/// sum_{j=0}^{n-m-1} C(n, j+m+1) (x-1)^j = sum_{j=0}^{n-m-1} C(n-j-1, m) x^j.
bool magic_identity_check(int n, int m, const BigRational& x);

/// D_{mu,k}(zf) - D_{mu,k}(f) = D_{mu,k-1}(f), closed forms on all three.
ComparisonReport verify_difference_formula(const Polynomial& f, int k, const DiscMeasure& mu);

/// sum_{j>=1} D_{mu,k}(L^j f) = D_{mu,k+1}(f); the sum is finite for polynomials.
ComparisonReport verify_one_step_up(const Polynomial& f, int k, const DiscMeasure& mu);
ComparisonReport verify_one_step_up(const Polynomial& f, int k, const CircleDistribution& mu);

struct DilationReport {
  double dilated = 0.0;
  double undilated = 0.0;
  double observed_ratio = 0.0;  // dilated / undilated (0 when undilated == 0)
  bool within_factor_two = false;
};
DilationReport verify_dilation_bound(const Polynomial& f, int k, const DiscMeasure& mu, double r);

}  // namespace dirkit

#endif  // DIRKIT_DIRICHLET_HPP
