// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_BIGINT_HPP
#define DIRKIT_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dirkit {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
/// Supports exactly what the exact-arithmetic identity checks need:
/// add, subtract, multiply, compare, decimal printing.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return limbs_.empty(); }
  bool negative() const { return negative_; }
  BigInt operator-() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  static BigInt pow(const BigInt& base, int exponent);

  /// Largest power of two dividing the value (0 for zero).
  int trailing_zero_bits() const;
  BigInt shifted_right(int bits) const;

  std::string to_string() const;

 private:
  static int compare_magnitude(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);  // a >= b
  void trim();

  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros
};

/// Exact rational with a BigInt numerator and positive BigInt denominator.
/// Reduction only strips common powers of two (denominators arising in the
/// identity checks are products of small inputs, so magnitudes stay tiny);
/// equality compares cross products and is exact regardless.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  BigRational(BigInt num, BigInt den);
  static BigRational ratio(std::int64_t num, std::int64_t den) { return BigRational(BigInt(num), BigInt(den)); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend bool operator==(const BigRational& a, const BigRational& b);
  friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }

  BigRational& operator+=(const BigRational& b) { return *this = *this + b; }

  static BigRational pow(const BigRational& base, int exponent);

  std::string to_string() const;

 private:
  void reduce_pow2();

  BigInt num_;
  BigInt den_;  // > 0
};

}  // namespace dirkit

#endif  // DIRKIT_BIGINT_HPP
