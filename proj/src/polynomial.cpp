// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace dirkit {

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > static_cast<std::size_t>(kMaxDegree) + 1)
    throw std::invalid_argument("Polynomial: degree exceeds supported maximum");
}

Polynomial::Polynomial(std::initializer_list<cplx> coeffs) : Polynomial(std::vector<cplx>(coeffs)) {}

Polynomial Polynomial::monomial(int power, cplx coefficient) {
  if (power < 0 || power > kMaxDegree) throw std::invalid_argument("Polynomial::monomial: bad power");
  std::vector<cplx> c(static_cast<std::size_t>(power) + 1, cplx{0.0, 0.0});
  c.back() = coefficient;
  return Polynomial(std::move(c));
}

cplx Polynomial::coeff(int j) const {
  if (j < 0 || static_cast<std::size_t>(j) >= coeffs_.size()) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(j)];
}

std::optional<int> Polynomial::degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != cplx{0.0, 0.0}) return static_cast<int>(i);
  }
  return std::nullopt;
}

cplx Polynomial::operator()(cplx z) const {
  cplx acc{0.0, 0.0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (cplx{-1.0, 0.0} * b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(cplx s, const Polynomial& a) {
  std::vector<cplx> c = a.coeffs_;
  for (cplx& v : c) v *= s;
  return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& f, int k) {
  if (k < 0) throw std::invalid_argument("derivative: negative order");
  if (k == 0) return f;
  const auto deg = f.degree();
  if (!deg || *deg < k) return Polynomial();
  std::vector<cplx> c(static_cast<std::size_t>(*deg - k) + 1);
  for (int j = 0; j + k <= *deg; ++j) {
    double factor = 1.0;  // (j+k)!/j!
    for (int i = 1; i <= k; ++i) factor *= static_cast<double>(j + i);
    c[static_cast<std::size_t>(j)] = f.coeff(j + k) * factor;
  }
  return Polynomial(std::move(c));
}

Polynomial backward_shift(const Polynomial& f) {
  if (f.coeffs().size() <= 1) return Polynomial();
  return Polynomial(std::vector<cplx>(f.coeffs().begin() + 1, f.coeffs().end()));
}

Polynomial backward_shift_power(const Polynomial& f, int m) {
  if (m < 0) throw std::invalid_argument("backward_shift_power: negative power");
  if (static_cast<std::size_t>(m) >= f.coeffs().size()) return Polynomial();
  return Polynomial(std::vector<cplx>(f.coeffs().begin() + m, f.coeffs().end()));
}

Polynomial shift_up(const Polynomial& f, int m) {
  if (m < 0) throw std::invalid_argument("shift_up: negative power");
  if (f.is_zero()) return Polynomial();
  std::vector<cplx> c(f.coeffs().size() + static_cast<std::size_t>(m), cplx{0.0, 0.0});
  std::copy(f.coeffs().begin(), f.coeffs().end(), c.begin() + m);
  return Polynomial(std::move(c));
}

Polynomial difference_quotient(const Polynomial& f, cplx zeta) {
  const auto deg = f.degree();
  if (!deg || *deg == 0) return Polynomial();
  std::vector<cplx> q(static_cast<std::size_t>(*deg));
  cplx carry = f.coeff(*deg);
  for (int j = *deg - 1; j >= 0; --j) {
    q[static_cast<std::size_t>(j)] = carry;
    carry = f.coeff(j) + zeta * carry;
  }
  return Polynomial(std::move(q));
}

Polynomial dilate(const Polynomial& f, double r) {
  if (r < 0.0 || r > 1.0) throw std::domain_error("dilate: r outside [0, 1]");
  std::vector<cplx> c = f.coeffs();
  double p = 1.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] *= p;
    p *= r;
  }
  return Polynomial(std::move(c));
}

cplx hardy_inner(const Polynomial& f, const Polynomial& g) {
  cplx acc{0.0, 0.0};
  const std::size_t n = std::min(f.coeffs().size(), g.coeffs().size());
  for (std::size_t j = 0; j < n; ++j) acc += f.coeffs()[j] * std::conj(g.coeffs()[j]);
  return acc;
}

}  // namespace dirkit
