#pragma once

// Bicomplex numbers T = { z1 + z2 i2 : z1, z2 in C(i1) } and the hyperbolic
// (duplex) subalgebra, stored in idempotent coordinates.
//
// Every w in T is written uniquely as w = u1 e1 + u2 e2 with
//   u1 = P1(w) = z1 - z2 i1,   u2 = P2(w) = z1 + z2 i1,
//   e1 = (1 + j) / 2,          e2 = (1 - j) / 2.
// In that basis addition, multiplication and division act componentwise, so
// the idempotent pair is the canonical representation and the cartesian
// components are derived on demand.

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <utility>

#include "bicomplex/error.hpp"

namespace bcx {

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// Index of an idempotent component.
enum class Component { First = 1, Second = 2 };

/// Default scale-relative tolerance for null-cone membership.
inline constexpr double kNullConeTolerance = 1e-12;

template <typename Scalar>
class Bicomplex {
 public:
  using ComplexType = Complex<Scalar>;

  constexpr Bicomplex() = default;
  /// Embeds a complex number c as c e1 + c e2.
  constexpr Bicomplex(const ComplexType& c) : u1_(c), u2_(c) {}  // NOLINT(implicit)
  constexpr Bicomplex(Scalar x) : u1_(x), u2_(x) {}               // NOLINT(implicit)

  static constexpr Bicomplex from_idempotent(const ComplexType& u1, const ComplexType& u2) {
    Bicomplex w;
    w.u1_ = u1;
    w.u2_ = u2;
    return w;
  }

  static constexpr Bicomplex from_cartesian(const ComplexType& z1, const ComplexType& z2) {
    const ComplexType i1(0, 1);
    return from_idempotent(z1 - z2 * i1, z1 + z2 * i1);
  }

  constexpr const ComplexType& u1() const { return u1_; }
  constexpr const ComplexType& u2() const { return u2_; }

  constexpr ComplexType z1() const { return (u1_ + u2_) / Scalar(2); }
  constexpr ComplexType z2() const { return ComplexType(0, 1) * (u1_ - u2_) / Scalar(2); }

  bool is_finite() const {
    return std::isfinite(u1_.real()) && std::isfinite(u1_.imag()) &&
           std::isfinite(u2_.real()) && std::isfinite(u2_.imag());
  }

  Bicomplex& operator+=(const Bicomplex& o) { u1_ += o.u1_; u2_ += o.u2_; return *this; }
  Bicomplex& operator-=(const Bicomplex& o) { u1_ -= o.u1_; u2_ -= o.u2_; return *this; }
  Bicomplex& operator*=(const Bicomplex& o) { u1_ *= o.u1_; u2_ *= o.u2_; return *this; }

  friend constexpr bool operator==(const Bicomplex&, const Bicomplex&) = default;

 private:
  ComplexType u1_{};
  ComplexType u2_{};
};

template <typename Scalar>
constexpr Bicomplex<Scalar> operator+(const Bicomplex<Scalar>& w, const Bicomplex<Scalar>& v) {
  return Bicomplex<Scalar>::from_idempotent(w.u1() + v.u1(), w.u2() + v.u2());
}

template <typename Scalar>
constexpr Bicomplex<Scalar> operator-(const Bicomplex<Scalar>& w, const Bicomplex<Scalar>& v) {
  return Bicomplex<Scalar>::from_idempotent(w.u1() - v.u1(), w.u2() - v.u2());
}

template <typename Scalar>
constexpr Bicomplex<Scalar> operator-(const Bicomplex<Scalar>& w) {
  return Bicomplex<Scalar>::from_idempotent(-w.u1(), -w.u2());
}

template <typename Scalar>
constexpr Bicomplex<Scalar> operator*(const Bicomplex<Scalar>& w, const Bicomplex<Scalar>& v) {
  return Bicomplex<Scalar>::from_idempotent(w.u1() * v.u1(), w.u2() * v.u2());
}

template <typename Scalar>
constexpr Bicomplex<Scalar> operator*(const Complex<Scalar>& c, const Bicomplex<Scalar>& w) {
  return Bicomplex<Scalar>::from_idempotent(c * w.u1(), c * w.u2());
}

template <typename Scalar>
constexpr Bicomplex<Scalar> operator*(Scalar c, const Bicomplex<Scalar>& w) {
  return Bicomplex<Scalar>::from_idempotent(c * w.u1(), c * w.u2());
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Bicomplex<Scalar>& w) {
  return os << w.u1() << "e1 + " << w.u2() << "e2";
}

/// The named units of T.
template <typename Scalar>
struct Units {
  using B = Bicomplex<Scalar>;
  static constexpr B one() { return B::from_idempotent({1, 0}, {1, 0}); }
  static constexpr B i1() { return B::from_idempotent({0, 1}, {0, 1}); }
  static constexpr B i2() { return B::from_idempotent({0, -1}, {0, 1}); }
  static constexpr B j() { return B::from_idempotent({1, 0}, {-1, 0}); }
  static constexpr B e1() { return B::from_idempotent({1, 0}, {0, 0}); }
  static constexpr B e2() { return B::from_idempotent({0, 0}, {1, 0}); }
};

template <typename Scalar>
constexpr Complex<Scalar> proj(const Bicomplex<Scalar>& w, Component k) {
  return k == Component::First ? w.u1() : w.u2();
}

/// (P1(w), P2(w)).
template <typename Scalar>
constexpr std::pair<Complex<Scalar>, Complex<Scalar>> to_idempotent(const Bicomplex<Scalar>& w) {
  return {w.u1(), w.u2()};
}

template <typename Scalar>
constexpr Bicomplex<Scalar> from_idempotent(const Complex<Scalar>& u1, const Complex<Scalar>& u2) {
  return Bicomplex<Scalar>::from_idempotent(u1, u2);
}

/// w* = z1 - z2 i2. In idempotent coordinates this swaps u1 and u2.
template <typename Scalar>
constexpr Bicomplex<Scalar> conj_star(const Bicomplex<Scalar>& w) {
  return Bicomplex<Scalar>::from_idempotent(w.u2(), w.u1());
}

/// CN(w) = z1^2 + z2^2 = w w* = P1(w) P2(w).
template <typename Scalar>
constexpr Complex<Scalar> complex_norm(const Bicomplex<Scalar>& w) {
  return w.u1() * w.u2();
}

/// Euclidean norm of R^4: sqrt(|z1|^2 + |z2|^2) = sqrt((|u1|^2 + |u2|^2) / 2).
template <typename Scalar>
Scalar euclid_norm(const Bicomplex<Scalar>& w) {
  return std::hypot(std::abs(w.u1()), std::abs(w.u2())) / std::sqrt(Scalar(2));
}

template <typename Scalar>
bool is_null_cone(const Bicomplex<Scalar>& w, Scalar tol = Scalar(kNullConeTolerance)) {
  const Scalar n = euclid_norm(w);
  return std::abs(complex_norm(w)) <= tol * std::max(Scalar(1), n * n);
}

template <typename Scalar>
Bicomplex<Scalar> inverse(const Bicomplex<Scalar>& w) {
  if (is_null_cone(w)) throw Error(Errc::NotInvertible, "element lies in the null-cone");
  const Complex<Scalar> one(1, 0);
  return Bicomplex<Scalar>::from_idempotent(one / w.u1(), one / w.u2());
}

/// Hyperbolic number a1 e1 + a2 e2 with real components.
template <typename Scalar>
struct Hyperbolic {
  Scalar a1{};
  Scalar a2{};

  friend constexpr bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

template <typename Scalar>
constexpr Hyperbolic<Scalar> operator+(const Hyperbolic<Scalar>& h, const Hyperbolic<Scalar>& g) {
  return {h.a1 + g.a1, h.a2 + g.a2};
}

template <typename Scalar>
constexpr Hyperbolic<Scalar> operator*(const Hyperbolic<Scalar>& h, const Hyperbolic<Scalar>& g) {
  return {h.a1 * g.a1, h.a2 * g.a2};
}

/// Real part of a hyperbolic number: (a1 + a2) / 2.
template <typename Scalar>
constexpr Scalar re_h(const Hyperbolic<Scalar>& h) {
  return (h.a1 + h.a2) / Scalar(2);
}

template <typename Scalar>
constexpr Bicomplex<Scalar> to_bicomplex(const Hyperbolic<Scalar>& h) {
  return Bicomplex<Scalar>::from_idempotent({h.a1, 0}, {h.a2, 0});
}

/// |w|_j = |P1(w)| e1 + |P2(w)| e2.
template <typename Scalar>
Hyperbolic<Scalar> j_modulus(const Bicomplex<Scalar>& w) {
  return {std::abs(w.u1()), std::abs(w.u2())};
}

using Complexd = Complex<double>;
using Bicomplexd = Bicomplex<double>;
using Hyperbolicd = Hyperbolic<double>;
using Unitsd = Units<double>;

}  // namespace bcx
