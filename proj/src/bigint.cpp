// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace dirkit {

BigInt::BigInt(std::int64_t v) {
  negative_ = v < 0;
  std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1ull : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffull));
    mag >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.negative_ = !r.negative_;
  return r;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<std::uint32_t>(s & 0xffffffffull));
    carry = s >> 32;
  }
  if (carry) r.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += 0x100000000ll;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<std::uint32_t>(s));
  }
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.negative_ == b.negative_) {
    r.negative_ = a.negative_;
    r.limbs_ = BigInt::add_magnitude(a.limbs_, b.limbs_);
  } else {
    const int c = BigInt::compare_magnitude(a, b);
    if (c == 0) return BigInt(0);
    if (c > 0) {
      r.negative_ = a.negative_;
      r.limbs_ = BigInt::sub_magnitude(a.limbs_, b.limbs_);
    } else {
      r.negative_ = b.negative_;
      r.limbs_ = BigInt::sub_magnitude(b.limbs_, a.limbs_);
    }
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt(0);
  BigInt r;
  r.negative_ = a.negative_ != b.negative_;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = r.limbs_[i + j] + static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry) {
      std::uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.negative_ != b.negative_) return a.negative_;
  const int c = BigInt::compare_magnitude(a, b);
  return a.negative_ ? c > 0 : c < 0;
}

BigInt BigInt::pow(const BigInt& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("BigInt::pow: negative exponent");
  BigInt r(1), b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

int BigInt::trailing_zero_bits() const {
  if (is_zero()) return 0;
  int bits = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if (limbs_[i] == 0) {
      bits += 32;
      continue;
    }
    std::uint32_t v = limbs_[i];
    while ((v & 1u) == 0) {
      ++bits;
      v >>= 1;
    }
    break;
  }
  return bits;
}

BigInt BigInt::shifted_right(int bits) const {
  BigInt r = *this;
  const int whole = bits / 32, rem = bits % 32;
  if (whole > 0) {
    if (static_cast<std::size_t>(whole) >= r.limbs_.size()) return BigInt(0);
    r.limbs_.erase(r.limbs_.begin(), r.limbs_.begin() + whole);
  }
  if (rem > 0) {
    std::uint32_t carry = 0;
    for (std::size_t i = r.limbs_.size(); i-- > 0;) {
      const std::uint32_t v = r.limbs_[i];
      r.limbs_[i] = (v >> rem) | (carry << (32 - rem));
      carry = v & ((1u << rem) - 1u);
    }
  }
  r.trim();
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    // divide magnitude by 1e9, collecting the remainder
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    const std::string chunk = std::to_string(rem);
    if (work.empty()) {
      digits.insert(0, chunk);
    } else {
      digits.insert(0, std::string(9 - chunk.size(), '0') + chunk);
    }
  }
  return (negative_ ? "-" : "") + digits;
}

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("BigRational: zero denominator");
  if (den_.negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) den_ = BigInt(1);
  reduce_pow2();
}

void BigRational::reduce_pow2() {
  if (num_.is_zero()) return;
  const int k = std::min(num_.trailing_zero_bits(), den_.trailing_zero_bits());
  if (k > 0) {
    num_ = num_.shifted_right(k);
    den_ = den_.shifted_right(k);
  }
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator-(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator*(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const BigRational& a, const BigRational& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

BigRational BigRational::pow(const BigRational& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("BigRational::pow: negative exponent");
  return BigRational(BigInt::pow(base.num_, exponent), BigInt::pow(base.den_, exponent));
}

std::string BigRational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace dirkit
