// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#ifndef DIRKIT_RNG_HPP
#define DIRKIT_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <string_view>

namespace dirkit {

// SplitMix64. Used instead of <random> engines so that streams are
// byte-identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Re and Im uniform in [-1, 1].
  std::complex<double> complex_in_square() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

  /// Uniform w.r.t. area in the disc of the given radius.
  std::complex<double> point_in_disc(double radius) {
    const double r = radius * std::sqrt(unit());
    const double t = uniform(0.0, 2.0 * 3.14159265358979323846);
    return {r * std::cos(t), r * std::sin(t)};
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Deterministic child stream for a named check.
  Rng split(std::string_view label) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    return Rng(state_ ^ h);
  }

  Rng split(std::uint64_t salt) const { return Rng(state_ ^ (salt * 0x9e3779b97f4a7c15ull + 0x165667b19e3779f9ull)); }

 private:
  std::uint64_t state_;
};

}  // namespace dirkit

#endif  // DIRKIT_RNG_HPP
