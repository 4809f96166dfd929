#pragma once

// Seeded draw helpers. Every verification check derives its own stream from
// (seed, check id) so residuals reproduce byte-for-byte under any check
// subset.

#include <cstdint>
#include <random>
#include <string_view>

#include "indrep/group_core.hpp"

namespace indrep {

std::uint64_t fnv1a64(std::string_view s);

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  Rng(std::uint64_t seed, std::string_view stream_id)
      : gen_(seed ^ fnv1a64(stream_id)) {}

  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(gen_);
  }
  int uniform_int(int a, int b) {
    return std::uniform_int_distribution<int>(a, b)(gen_);
  }
  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  Complex gaussian_complex() { return Complex(gaussian(), gaussian()); }

  /// Uniform over the disk |z| <= radius.
  Complex disk(double radius) {
    while (true) {
      const double x = uniform(-radius, radius);
      const double y = uniform(-radius, radius);
      if (x * x + y * y <= radius * radius) {
        return Complex(x, y);
      }
    }
  }

  /// Uniform over the annulus r_lo <= |z| <= r_hi.
  Complex annulus(double r_lo, double r_hi) {
    while (true) {
      const Complex z = disk(r_hi);
      if (std::abs(z) >= r_lo) {
        return z;
      }
    }
  }

  /// Gaussian entries renormalized to unit determinant.
  GroupElement random_sl2() {
    while (true) {
      const Complex a = gaussian_complex();
      const Complex b = gaussian_complex();
      const Complex c = gaussian_complex();
      const Complex d = gaussian_complex();
      const Complex det = a * d - b * c;
      if (std::abs(det) < 0.1) {
        continue;  // avoid amplifying roundoff through a near-singular draw
      }
      const Complex s = std::sqrt(det);
      return GroupElement(a / s, b / s, c / s, d / s);
    }
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace indrep
