// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/la.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dirkit {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

std::vector<cplx> CMatrix::apply(std::span<const cplx> x) const {
  if (x.size() != cols_) throw std::invalid_argument("CMatrix::apply: size mismatch");
  std::vector<cplx> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    cplx acc = 0.0;
    const cplx* row = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool CMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("CMatrix product: size mismatch");
  CMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  CMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  CMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != y.size()) throw std::invalid_argument("inner: size mismatch");
  std::vector<cplx> terms(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) terms[i] = x[i] * std::conj(y[i]);
  return pairwise_sum(terms);
}

double norm_sq(std::span<const cplx> x) {
  std::vector<double> terms(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) terms[i] = std::norm(x[i]);
  return pairwise_sum(terms);
}

namespace {

template <class T>
T pairwise_impl(std::span<const T> v) {
  if (v.size() <= 8) {
    T acc{};
    for (const T& t : v) acc += t;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_impl(v.subspan(0, half)) + pairwise_impl(v.subspan(half));
}

}  // namespace

cplx pairwise_sum(std::span<const cplx> v) { return pairwise_impl(v); }
double pairwise_sum(std::span<const double> v) { return pairwise_impl(v); }

std::vector<double> hermitian_eigenvalues(CMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("hermitian_eigenvalues: not square");
  if (n == 0) return {};
  if (!a.is_hermitian(1e-10 * std::max(1.0, a.max_abs())))
    throw std::invalid_argument("hermitian_eigenvalues: matrix not hermitian");

  // Cyclic complex Jacobi. Each rotation zeroes one off-diagonal pair; the
  // off-diagonal mass is strictly decreasing, so the sweep cap is generous.
  const double scale = std::max(1.0, a.max_abs());
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= 1e-15 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx beta = a(p, q);
        const double ab = std::abs(beta);
        if (ab <= 1e-18 * scale) continue;
        const cplx u = beta / ab;  // phase of the pivot
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const double tau = (gamma - alpha) / (2.0 * ab);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- J^H A J with J[p][p]=c, J[p][q]=s*u, J[q][p]=-s*conj(u), J[q][q]=c.
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * std::conj(u) * aiq;
          a(i, q) = s * u * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const cplx apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - s * u * aqj;
          a(q, j) = s * std::conj(u) * apj + c * aqj;
        }
        a(p, p) = cplx(alpha - t * ab, 0.0);
        a(q, q) = cplx(gamma + t * ab, 0.0);
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = a(i, i).real();
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double min_eigenvalue(const CMatrix& a) { return hermitian_eigenvalues(a).front(); }
double max_eigenvalue(const CMatrix& a) { return hermitian_eigenvalues(a).back(); }

CholeskyResult cholesky_upper(const CMatrix& a, double rel_tol) {
  const std::size_t n = a.rows();
  CholeskyResult res;
  res.upper = CMatrix(n, n);
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, a(i, i).real());
  if (max_diag <= 0.0) return res;

  CMatrix& u = res.upper;
  for (std::size_t j = 0; j < n; ++j) {
    cplx acc = a(j, j);
    for (std::size_t k = 0; k < j; ++k) acc -= std::conj(u(k, j)) * u(k, j);
    const double diag = acc.real();
    if (diag <= rel_tol * max_diag) return res;  // not numerically PD
    const double ujj = std::sqrt(diag);
    u(j, j) = ujj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = a(j, i);
      for (std::size_t k = 0; k < j; ++k) s -= std::conj(u(k, j)) * u(k, i);
      u(j, i) = s / ujj;
    }
  }
  res.ok = true;
  return res;
}

std::vector<cplx> solve_upper(const CMatrix& u, std::vector<cplx> b) {
  const std::size_t n = u.rows();
  for (std::size_t ii = n; ii-- > 0;) {
    cplx acc = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= u(ii, j) * b[j];
    b[ii] = acc / u(ii, ii);
  }
  return b;
}

CMatrix solve_upper_right(CMatrix b, const CMatrix& u) {
  // X U = B, row by row: forward substitution in the column index.
  const std::size_t n = u.rows();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc = b(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= b(i, k) * u(k, j);
      b(i, j) = acc / u(j, j);
    }
  }
  return b;
}

}  // namespace dirkit
