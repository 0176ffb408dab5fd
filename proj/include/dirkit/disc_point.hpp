// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_DISC_POINT_HPP
#define DIRKIT_DISC_POINT_HPP

#include <complex>
#include <stdexcept>

namespace dirkit {

/// A point of the closed unit disc. Interior/boundary classification is by
/// threshold: |v| < 1 - 1e-10 counts as interior, anything admissible above
/// that as boundary.
class DiscPoint {
 public:
  static constexpr double kClosedDiscTol = 1e-12;
  static constexpr double kBoundaryTol = 1e-10;

  explicit DiscPoint(std::complex<double> v) : value_(v) {
    if (std::abs(v) > 1.0 + kClosedDiscTol)
      throw std::domain_error("DiscPoint: point outside the closed unit disc");
  }

  std::complex<double> value() const { return value_; }
  bool interior() const { return std::abs(value_) < 1.0 - kBoundaryTol; }
  bool boundary() const { return !interior(); }

 private:
  std::complex<double> value_;
};

}  // namespace dirkit

#endif  // DIRKIT_DISC_POINT_HPP
