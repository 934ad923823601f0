#pragma once

// The extended bicomplex plane: pairs of points of the extended complex plane
// in idempotent coordinates, its infinity/zero strata, the total inversion,
// and the S x S Riemann-sphere model in R^6.

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <ostream>
#include <string_view>

#include "bicomplex/algebra.hpp"
#include "bicomplex/error.hpp"

namespace bcx {

/// A point of C(i1) united with {infinity}. Infinity is symbolic, never an
/// overflowed float.
template <typename Scalar>
class ExtendedComplex {
 public:
  using ComplexType = Complex<Scalar>;

  constexpr ExtendedComplex() = default;
  constexpr ExtendedComplex(const ComplexType& c) : value_(c) {}  // NOLINT(implicit)
  constexpr ExtendedComplex(Scalar x) : value_(x) {}               // NOLINT(implicit)

  static constexpr ExtendedComplex infinity() {
    ExtendedComplex e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == ComplexType(0, 0); }

  /// Finite value. Throws NonFiniteOperand on infinity.
  const ComplexType& value() const {
    if (infinite_) throw Error(Errc::NonFiniteOperand, "value() of the point at infinity");
    return value_;
  }

  friend constexpr bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  ComplexType value_{};
  bool infinite_ = false;
};

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const ExtendedComplex<Scalar>& e) {
  if (e.is_infinite()) return os << "inf";
  return os << e.value();
}

/// Sphere inversion u -> 1/u on the extended complex plane; 0 <-> infinity.
template <typename Scalar>
ExtendedComplex<Scalar> invert(const ExtendedComplex<Scalar>& u) {
  if (u.is_infinite()) return ExtendedComplex<Scalar>(Complex<Scalar>(0, 0));
  if (u.is_zero()) return ExtendedComplex<Scalar>::infinity();
  return ExtendedComplex<Scalar>(Complex<Scalar>(1, 0) / u.value());
}

template <typename Scalar>
class ExtendedBicomplex {
 public:
  using Point = ExtendedComplex<Scalar>;

  constexpr ExtendedBicomplex() = default;
  constexpr ExtendedBicomplex(const Point& u1, const Point& u2) : u1_(u1), u2_(u2) {}
  constexpr ExtendedBicomplex(const Bicomplex<Scalar>& w)  // NOLINT(implicit)
      : u1_(w.u1()), u2_(w.u2()) {}

  /// The strong infinity (inf, inf).
  static constexpr ExtendedBicomplex infinity() { return {Point::infinity(), Point::infinity()}; }

  constexpr const Point& u1() const { return u1_; }
  constexpr const Point& u2() const { return u2_; }
  constexpr const Point& component(Component k) const {
    return k == Component::First ? u1_ : u2_;
  }

  constexpr bool is_finite() const { return u1_.is_finite() && u2_.is_finite(); }

  /// Back to T. Arithmetic is only defined there; throws NonFiniteOperand
  /// for points of the infinity set.
  Bicomplex<Scalar> to_bicomplex() const {
    if (!is_finite()) throw Error(Errc::NonFiniteOperand, "point lies in the bicomplex infinity set");
    return Bicomplex<Scalar>::from_idempotent(u1_.value(), u2_.value());
  }

  friend constexpr bool operator==(const ExtendedBicomplex&, const ExtendedBicomplex&) = default;

 private:
  Point u1_{};
  Point u2_{};
};

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const ExtendedBicomplex<Scalar>& w) {
  return os << "(" << w.u1() << ", " << w.u2() << ")";
}

enum class InfinityStratum { Finite, StrongInfinity, P1Infinity, P2Infinity };
enum class ZeroStratum { NonZero, Zero, P1Zero, P2Zero };

constexpr std::string_view to_string(InfinityStratum s) {
  switch (s) {
    case InfinityStratum::Finite: return "Finite";
    case InfinityStratum::StrongInfinity: return "StrongInfinity";
    case InfinityStratum::P1Infinity: return "P1Infinity";
    case InfinityStratum::P2Infinity: return "P2Infinity";
  }
  return "?";
}

constexpr std::string_view to_string(ZeroStratum s) {
  switch (s) {
    case ZeroStratum::NonZero: return "NonZero";
    case ZeroStratum::Zero: return "Zero";
    case ZeroStratum::P1Zero: return "P1Zero";
    case ZeroStratum::P2Zero: return "P2Zero";
  }
  return "?";
}

/// True for the weak infinity set (exactly one infinite component).
constexpr bool is_weak_infinity(InfinityStratum s) {
  return s == InfinityStratum::P1Infinity || s == InfinityStratum::P2Infinity;
}

template <typename Scalar>
constexpr InfinityStratum classify_infinity(const ExtendedBicomplex<Scalar>& w) {
  const bool i1 = w.u1().is_infinite();
  const bool i2 = w.u2().is_infinite();
  if (i1 && i2) return InfinityStratum::StrongInfinity;
  if (i1) return InfinityStratum::P1Infinity;
  if (i2) return InfinityStratum::P2Infinity;
  return InfinityStratum::Finite;
}

/// Exact zero test on the idempotent components. The null-cone is
/// {Zero} u {P1Zero} u {P2Zero}.
template <typename Scalar>
constexpr ZeroStratum classify_zero(const ExtendedBicomplex<Scalar>& w) {
  const bool z1 = w.u1().is_zero();
  const bool z2 = w.u2().is_zero();
  if (z1 && z2) return ZeroStratum::Zero;
  if (z1) return ZeroStratum::P1Zero;
  if (z2) return ZeroStratum::P2Zero;
  return ZeroStratum::NonZero;
}

/// Componentwise sphere inversion; total on the extended plane and an
/// involution. Agrees with inverse() on invertible elements.
template <typename Scalar>
ExtendedBicomplex<Scalar> extended_inverse(const ExtendedBicomplex<Scalar>& w) {
  return {invert(w.u1()), invert(w.u2())};
}

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

/// A point of S x S in R^6. Each factor sphere has diameter 1 and is centred
/// at (0, 0, 1/2), so chord lengths equal the chordal metric.
template <typename Scalar>
struct SpherePoint6 {
  Vector3<Scalar> p1;
  Vector3<Scalar> p2;
};

/// Stereographic image of one extended complex point; infinity is the north pole.
template <typename Scalar>
Vector3<Scalar> stereographic(const ExtendedComplex<Scalar>& u) {
  if (u.is_infinite()) return Vector3<Scalar>(0, 0, 1);
  const Complex<Scalar> c = u.value();
  const Scalar m = std::abs(c);
  if (m > Scalar(1)) {
    // Divide through by |u|^2 so huge inputs stay finite.
    const Scalar inv = Scalar(1) / m;
    const Scalar denom = inv * inv + Scalar(1);
    return Vector3<Scalar>((c.real() * inv) * inv / denom, (c.imag() * inv) * inv / denom,
                           Scalar(1) / denom);
  }
  const Scalar denom = Scalar(1) + m * m;
  return Vector3<Scalar>(c.real() / denom, c.imag() / denom, m * m / denom);
}

template <typename Scalar>
SpherePoint6<Scalar> sphere_embed(const ExtendedBicomplex<Scalar>& w) {
  return {stereographic(w.u1()), stereographic(w.u2())};
}

using ExtendedComplexd = ExtendedComplex<double>;
using ExtendedBicomplexd = ExtendedBicomplex<double>;
using SpherePoint6d = SpherePoint6<double>;

}  // namespace bcx
