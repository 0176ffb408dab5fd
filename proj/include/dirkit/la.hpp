// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_LA_HPP
#define DIRKIT_LA_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dirkit {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Sized for the small hermitian forms this
/// library works with (Gram matrices, difference forms); not a BLAS substitute.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CMatrix adjoint() const;
  std::vector<cplx> apply(std::span<const cplx> x) const;
  double max_abs() const;
  bool is_hermitian(double tol) const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

/// Inner product linear in the first slot: sum x_i * conj(y_i).
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
double norm_sq(std::span<const cplx> x);

/// Deterministic pairwise-tree summation; the accumulation order depends only
/// on the element count, never on threading or chunking.
cplx pairwise_sum(std::span<const cplx> v);
double pairwise_sum(std::span<const double> v);

/// Eigenvalues of a hermitian matrix (ascending), by cyclic complex Jacobi.
std::vector<double> hermitian_eigenvalues(CMatrix a);
double min_eigenvalue(const CMatrix& a);
double max_eigenvalue(const CMatrix& a);

struct CholeskyResult {
  bool ok = false;
  CMatrix upper;  // a = upper^H * upper when ok
};

/// Cholesky of a hermitian positive definite matrix; fails (ok=false) when a
/// pivot drops below rel_tol times the largest diagonal entry.
CholeskyResult cholesky_upper(const CMatrix& a, double rel_tol = 1e-13);

/// Solve U x = b with U upper triangular.
std::vector<cplx> solve_upper(const CMatrix& u, std::vector<cplx> b);
/// Solve X U = B with U upper triangular.
CMatrix solve_upper_right(CMatrix b, const CMatrix& u);

}  // namespace dirkit

#endif  // DIRKIT_LA_HPP
