// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_OPERATORS_HPP
#define DIRKIT_OPERATORS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "dirkit/dirichlet.hpp"
#include "dirkit/la.hpp"
#include "dirkit/measures.hpp"
#include "dirkit/polynomial.hpp"

namespace dirkit {

/// Raised when an operation would touch T^{h+1} e beyond the trusted horizon.
class HorizonError : public std::runtime_error {
 public:
  explicit HorizonError(const std::string& what) : std::runtime_error(what) {}
};

/// Finite model of a cyclic operator: everything the difference forms need is
/// the table psi[a][b] = <T^a e, T^b e> up to the horizon. The table comes
/// either from an explicit matrix with a cyclic vector (powers are computed
/// and cached), or directly from closed-form Gram data, in which case no
/// matrix truncation error exists at all. Truncated weighted shifts are
/// nilpotent, so every operation refuses indices beyond the horizon.
class OperatorModel {
 public:
  static OperatorModel from_matrix(CMatrix t, std::vector<cplx> cyclic, int horizon);
  static OperatorModel weighted_shift(const std::vector<double>& weights, int n);
  static OperatorModel d_alpha_shift(double alpha, int n);
  static OperatorModel from_power_gram(CMatrix psi);  // horizon = rows - 1

  int horizon() const { return horizon_; }
  bool has_matrix() const { return matrix_.has_value(); }
  const CMatrix& matrix() const;
  const std::vector<cplx>& cyclic() const;

  /// <T^a e, T^b e>; throws HorizonError beyond the horizon.
  cplx power_gram(int a, int b) const;
  double power_norm_sq(int n) const { return power_gram(n, n).real(); }

  /// <beta_n(T) T^k e, T^l e> = sum_j (-1)^{n-j} C(n,j) psi[j+k][j+l].
  cplx beta_power_form(int n, int k, int l) const;

  /// <beta_n(T) p(T)e, q(T)e> with p, q in cyclic-slice coordinates.
  cplx beta_form(int n, const Polynomial& p, const Polynomial& q) const;
  /// <B_n(T) p(T)e, q(T)e> = (-1)^n beta_form.
  cplx b_form(int n, const Polynomial& p, const Polynomial& q) const;

  /// Raw Euclidean route sum_j (+-) C(n,j) <T^j x, T^j y>; matrix-backed only.
  cplx beta_form_euclidean(int n, const std::vector<cplx>& x, const std::vector<cplx>& y) const;

  /// Dense hermitian realization sum_j (+-) C(n,j) (T^*)^j T^j; matrix-backed only.
  CMatrix difference_form_dense(int n, bool backward) const;

 private:
  OperatorModel() = default;
  std::optional<CMatrix> matrix_;
  std::vector<cplx> cyclic_;
  int horizon_ = 0;
  CMatrix psi_;  // (horizon+1)^2 power-gram table
};

/// Matrix of the form <beta_n(T) . , .> on span{e, Te, ..., T^d e}:
/// entry (a, b) = <beta_n(T) T^b e, T^a e>, hermitian; PSD of this matrix is
/// PSD of the form on the span.
CMatrix beta_form_matrix(const OperatorModel& model, int n, int degree);

struct OrderEvidence {
  int n = 0;
  double min_eig = 0.0;
  double max_eig = 0.0;
};

struct ClassifyReport {
  std::vector<OrderEvidence> evidence;  // n = 1..m_max
  std::optional<int> inferred_order;    // least k consistent with the samples
  int m_max = 0;
  int degree = 0;
  double tol = 0.0;
};

/// Sign survey of the forms <B_n(T)...> for n = 1..m_max on the cyclic slice
/// up to the given degree. Evidence over a sampled range, never a proof.
ClassifyReport classify_order(const OperatorModel& model, int m_max, int degree, double tol);

struct TupleExtraction {
  int m = 0;
  int degree = 0;
  /// mu_hat[j][i] = mu_hat_j(i) for i = 0..degree; negative indices by conjugation.
  std::vector<std::vector<cplx>> mu_hat;
  /// top_moments(k, l) = integral of z^k conj(z)^l against the top measure.
  CMatrix top_moments;
  double top_min_eigenvalue = 0.0;
  bool top_psd = false;
  bool normalized = false;
};

/// Moment extraction of the Model Theorem: mu_hat_j(n) = <beta_j(T)e, T^n e>
/// for j < m, and the top moment table <beta_m(T) T^k e, T^l e>. Checks the
/// necessary conditions (hermitian PSD moments, unit normalization).
TupleExtraction extract_tuple(const OperatorModel& model, int m, int degree);

/// <S(A) p(T)e, q(T)e> = sum_{j>=1} A-form(L^j p, L^j q), with A given as a
/// form matrix over monomial indices (entry (a,b) = form(z^b, z^a)).
cplx s_form(const OperatorModel& model, const CMatrix& a_form, const Polynomial& p,
            const Polynomial& q);

struct NormFormulaCase {
  double lhs = 0.0;  // ||p(T)e||^2
  double rhs = 0.0;  // sum of the tuple terms
  double rel_err = 0.0;
};

struct NormFormulaReport {
  std::vector<NormFormulaCase> cases;
  double max_rel_err = 0.0;
};

/// ||p(T)e||^2 = sum_{j<m} D_{mu_j,j}(p) + D_{mu_m,m}(p), with the lower terms
/// from the extracted Fourier coefficients and the top term assembled from the
/// moment table through the monomial local form. Tested on all monomials up to
/// the given degree plus `samples` random polynomials.
NormFormulaReport verify_norm_formula(const OperatorModel& model, int m, int degree,
                                      int samples, std::uint64_t seed);

/// <B_n(M_z) f, f> on the tuple-weighted space, via closed-form norms.
double shift_bn_form(const AllowableTuple& tuple, const Polynomial& f, int n);
/// Same for the space with norm ||f||_{H^2}^2 + D_{mu,k}(f).
double shift_bn_form(const DiscMeasure& mu, int k, const Polynomial& f, int n);

struct GrowthReport {
  std::vector<double> ratios;  // ||T^n e||^2 / (1+n)^m for n = 0..n_max
  double baseline = 0.0;       // max ratio over n <= 2
  double worst = 0.0;
  bool bounded = false;  // worst <= 4 * baseline
};

/// Diagnostic for ||T^n e||^2 = O(n^m) on the sampled range.
GrowthReport growth_check(const OperatorModel& model, int m, int n_max);

struct AnalyticModelReport {
  struct Entry {
    int r = 0;
    double min_eigenvalue = 0.0;
  };
  std::vector<Entry> entries;  // r = 1..m-1
  double worst_min_eigenvalue = 0.0;
  bool pass = false;
};

/// min-eigenvalue survey of beta_r(T) - S(beta_{r+1}(T)) on the cyclic slice,
/// r = 1..m-1. Nonnegative exactly when the extracted mu_r are positive.
AnalyticModelReport verify_analytic_model_inequality(const OperatorModel& model, int m, int degree,
                                                     double tol);

/// Closed-form cyclic model of M_z on the tuple-weighted polynomial space,
/// backed by the exact Gram table (no truncation error).
OperatorModel realize_tuple_model(const AllowableTuple& tuple, int degree);

/// Dense-matrix realization of the same model through a Cholesky factor of the
/// Gram matrix; requires the Gram matrix to be numerically positive definite.
OperatorModel realize_tuple_model_matrix(const AllowableTuple& tuple, int degree);

}  // namespace dirkit

#endif  // DIRKIT_OPERATORS_HPP
