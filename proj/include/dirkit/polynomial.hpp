// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_POLYNOMIAL_HPP
#define DIRKIT_POLYNOMIAL_HPP

#include <complex>
#include <optional>
#include <vector>

namespace dirkit {

using cplx = std::complex<double>;

/// Analytic polynomial with dense complex coefficients, index = power.
/// Values are immutable after construction; all operations return new values.
class Polynomial {
 public:
  static constexpr int kMaxDegree = 512;

  Polynomial() = default;  // the zero polynomial
  explicit Polynomial(std::vector<cplx> coeffs);
  Polynomial(std::initializer_list<cplx> coeffs);

  static Polynomial monomial(int power, cplx coefficient = 1.0);

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx coeff(int j) const;

  /// Highest index with nonzero coefficient; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  bool is_zero() const { return !degree().has_value(); }

  /// Horner evaluation.
  cplx operator()(cplx z) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(cplx s, const Polynomial& a);

 private:
  std::vector<cplx> coeffs_;
};

/// k-th derivative: coefficient j of the result is coeff(j+k) * (j+k)!/j!.
Polynomial derivative(const Polynomial& f, int k = 1);

/// (Lf)(z) = (f(z) - f(0)) / z; constants map to zero.
Polynomial backward_shift(const Polynomial& f);
Polynomial backward_shift_power(const Polynomial& f, int m);

/// Multiply by z^m.
Polynomial shift_up(const Polynomial& f, int m = 1);

/// The polynomial q with f(z) - f(zeta) = (z - zeta) q(z), by synthetic
/// division. Coefficient m-1 of q equals (L^m f)(zeta).
Polynomial difference_quotient(const Polynomial& f, cplx zeta);

/// f_r(z) = f(rz); requires 0 <= r <= 1.
Polynomial dilate(const Polynomial& f, double r);

/// sum_j coeff_f(j) * conj(coeff_g(j)); the H^2 pairing of polynomials.
cplx hardy_inner(const Polynomial& f, const Polynomial& g);

}  // namespace dirkit

#endif  // DIRKIT_POLYNOMIAL_HPP
