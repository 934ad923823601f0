#pragma once

// Chordal metric on the extended complex plane, the bicomplex chordal metric
// chi_e on the extended bicomplex plane, and its hyperbolic-valued
// counterpart chi_j.

#include <algorithm>
#include <cmath>
#include <utility>

#include "bicomplex/algebra.hpp"
#include "bicomplex/error.hpp"
#include "bicomplex/extended.hpp"

namespace bcx {

inline constexpr double kInequalitySlack = 1e-12;

namespace detail {

// 1 / sqrt(1 + m^2) without forming m^2 for large m.
template <typename Scalar>
Scalar reciprocal_sphere_radius(Scalar m) {
  if (m > Scalar(1)) {
    const Scalar inv = Scalar(1) / m;
    return inv / std::sqrt(Scalar(1) + inv * inv);
  }
  return Scalar(1) / std::sqrt(Scalar(1) + m * m);
}

}  // namespace detail

/// chi(u, v) = |u - v| / (sqrt(1 + |u|^2) sqrt(1 + |v|^2)), extended to
/// infinity by continuity: chi(u, inf) = 1 / sqrt(1 + |u|^2), chi(inf, inf) = 0.
/// Symmetric bit-for-bit.
template <typename Scalar>
Scalar chordal(const ExtendedComplex<Scalar>& u, const ExtendedComplex<Scalar>& v) {
  using detail::reciprocal_sphere_radius;
  if (u.is_infinite() && v.is_infinite()) return Scalar(0);
  if (u.is_infinite()) return reciprocal_sphere_radius(std::abs(v.value()));
  if (v.is_infinite()) return reciprocal_sphere_radius(std::abs(u.value()));

  Complex<Scalar> a = u.value();
  Complex<Scalar> b = v.value();
  Scalar ma = std::abs(a);
  Scalar mb = std::abs(b);
  if (ma > Scalar(1) && mb > Scalar(1)) {
    // chi is invariant under u -> 1/u; this keeps |u - v| from overflowing.
    a = Complex<Scalar>(1, 0) / a;
    b = Complex<Scalar>(1, 0) / b;
    ma = std::abs(a);
    mb = std::abs(b);
  }
  const Scalar d = std::abs(a - b);
  const Scalar chi = d * (reciprocal_sphere_radius(ma) * reciprocal_sphere_radius(mb));
  return std::min(chi, Scalar(1));
}

template <typename Scalar>
Scalar chordal(const Complex<Scalar>& u, const Complex<Scalar>& v) {
  return chordal(ExtendedComplex<Scalar>(u), ExtendedComplex<Scalar>(v));
}

/// chi_e(z, w) = sqrt((chi^2(P1 z, P1 w) + chi^2(P2 z, P2 w)) / 2).
template <typename Scalar>
Scalar bichordal(const ExtendedBicomplex<Scalar>& z, const ExtendedBicomplex<Scalar>& w) {
  const Scalar a = chordal(z.u1(), w.u1());
  const Scalar b = chordal(z.u2(), w.u2());
  // Scaled by the larger term so tiny distances do not underflow to 0.
  const Scalar hi = std::max(a, b);
  if (hi == Scalar(0)) return Scalar(0);
  const Scalar r = std::min(a, b) / hi;
  return hi * std::sqrt((Scalar(1) + r * r) / Scalar(2));
}

/// chi_j(z, w) = chi(P1 z, P1 w) e1 + chi(P2 z, P2 w) e2.
template <typename Scalar>
Hyperbolic<Scalar> hyperchordal(const ExtendedBicomplex<Scalar>& z, const ExtendedBicomplex<Scalar>& w) {
  return {chordal(z.u1(), w.u1()), chordal(z.u2(), w.u2())};
}

template <typename Scalar>
struct BoundSides {
  Scalar lhs;
  Scalar rhs;
};

/// chi_e(z, w) against its lower bound ||z - w|| / (sqrt(1 + 2||z||^2) sqrt(1 + 2||w||^2)).
template <typename Scalar>
BoundSides<Scalar> lower_bound_check(const Bicomplex<Scalar>& z, const Bicomplex<Scalar>& w) {
  const Scalar nz = euclid_norm(z);
  const Scalar nw = euclid_norm(w);
  const Scalar rhs = euclid_norm(z - w) /
                     (std::sqrt(Scalar(1) + 2 * nz * nz) * std::sqrt(Scalar(1) + 2 * nw * nw));
  return {bichordal<Scalar>(z, w), rhs};
}

/// For ||z|| <= ||w||: chi_e(0, z) <= chi_e(0, s) with s = sqrt(2) ||w|| embedded
/// on the real diagonal. Throws PreconditionViolation if ||z|| > ||w||.
template <typename Scalar>
bool norm_bound_check(const Bicomplex<Scalar>& z, const Bicomplex<Scalar>& w) {
  const Scalar nz = euclid_norm(z);
  const Scalar nw = euclid_norm(w);
  if (nz > nw) throw Error(Errc::PreconditionViolation, "norm_bound_check requires ||z|| <= ||w||");
  const Scalar s = std::sqrt(Scalar(2)) * nw;
  const Bicomplex<Scalar> zero{};
  const Scalar lhs = bichordal<Scalar>(zero, z);
  const Scalar rhs = bichordal<Scalar>(zero, Bicomplex<Scalar>(s));
  return lhs <= rhs + Scalar(kInequalitySlack);
}

}  // namespace bcx
