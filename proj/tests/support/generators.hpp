#pragma once

// Random generators for property tests, and oracles that recompute results
// by routes independent of the library's idempotent arithmetic.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "bicomplex/algebra.hpp"
#include "bicomplex/extended.hpp"

namespace bcx::testing {

enum class Stratum { Finite, P1Infinity, P2Infinity, StrongInfinity };

inline constexpr Stratum kAllStrata[] = {Stratum::Finite, Stratum::P1Infinity, Stratum::P2Infinity,
                                         Stratum::StrongInfinity};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Modulus spread over many orders of magnitude, with exact zero now and then.
  double magnitude() {
    switch (integer(0, 9)) {
      case 0: return 0.0;
      case 1: return std::pow(10.0, uniform(-8.0, -2.0));
      case 2: return std::pow(10.0, uniform(2.0, 8.0));
      default: return uniform(0.0, 5.0);
    }
  }

  double angle() { return uniform(-std::numbers::pi, std::numbers::pi); }
  Complexd complex() { return std::polar(magnitude(), angle()); }
  Complexd complex_in_disc(double r) { return std::polar(r * std::sqrt(uniform(0.0, 1.0)), angle()); }

  Bicomplexd bicomplex() { return Bicomplexd::from_idempotent(complex(), complex()); }
  Bicomplexd bicomplex_bounded(double r) {
    return Bicomplexd::from_idempotent(complex_in_disc(r), complex_in_disc(r));
  }

  ExtendedBicomplexd extended(Stratum s) {
    const ExtendedComplexd inf = ExtendedComplexd::infinity();
    switch (s) {
      case Stratum::Finite: return bicomplex();
      case Stratum::P1Infinity: return {inf, complex()};
      case Stratum::P2Infinity: return {complex(), inf};
      case Stratum::StrongInfinity: return ExtendedBicomplexd::infinity();
    }
    return {};
  }

  /// Finite most of the time, every stratum reachable.
  ExtendedBicomplexd extended() {
    const int r = integer(0, 9);
    if (r < 6) return extended(Stratum::Finite);
    return extended(kAllStrata[r - 6]);
  }

 private:
  std::mt19937_64 rng_;
};

/// Product in cartesian coordinates, (z1 + z2 i2)(w1 + w2 i2) with i2^2 = -1.
inline Bicomplexd cartesian_product(const Bicomplexd& a, const Bicomplexd& b) {
  return Bicomplexd::from_cartesian(a.z1() * b.z1() - a.z2() * b.z2(), a.z1() * b.z2() + a.z2() * b.z1());
}

/// Classical chordal distance from the textbook formula, infinity by its limit.
inline double chordal_formula(const ExtendedComplexd& u, const ExtendedComplexd& v) {
  if (u.is_infinite() && v.is_infinite()) return 0.0;
  if (u.is_infinite()) return 1.0 / std::sqrt(1.0 + std::norm(v.value()));
  if (v.is_infinite()) return 1.0 / std::sqrt(1.0 + std::norm(u.value()));
  const double a = std::norm(u.value());
  const double b = std::norm(v.value());
  return std::abs(u.value() - v.value()) / std::sqrt((1.0 + a) * (1.0 + b));
}

/// Stereographic point on the sphere of diameter 1 through the origin, by the
/// textbook formula (no rescaling).
inline Eigen::Vector3d sphere_point_formula(const ExtendedComplexd& u) {
  if (u.is_infinite()) return {0.0, 0.0, 1.0};
  const Complexd c = u.value();
  const double d = 1.0 + std::norm(c);
  return {c.real() / d, c.imag() / d, std::norm(c) / d};
}

}  // namespace bcx::testing
