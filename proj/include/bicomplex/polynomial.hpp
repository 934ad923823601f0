#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "bicomplex/algebra.hpp"

namespace bcx {

/// Relative tolerance for deciding that two roots coincide, or that a root
/// sits on a disc boundary.
inline constexpr double kRootTolerance = 1e-9;
/// Radius (relative) within which eigenvalue roots are merged into one
/// multiple root. Companion eigenvalues of an m-fold root scatter by about
/// eps^(1/m), so this must be much looser than kRootTolerance.
inline constexpr double kMultiplicityRadius = 1e-5;

template <typename Scalar>
bool roots_coincide(const Complex<Scalar>& a, const Complex<Scalar>& b,
                    Scalar tol = Scalar(kRootTolerance)) {
  return std::abs(a - b) <= tol * (Scalar(1) + std::max(std::abs(a), std::abs(b)));
}

template <typename Scalar>
struct Root {
  Complex<Scalar> value;
  int multiplicity = 1;
};

/// Polynomial with complex coefficients in ascending degree. The highest
/// stored coefficient is nonzero unless the polynomial is zero (no coefficients).
template <typename Scalar>
class ComplexPolynomial {
 public:
  using ComplexType = Complex<Scalar>;
  using Coefficients = Eigen::Matrix<ComplexType, Eigen::Dynamic, 1>;

  ComplexPolynomial() = default;
  explicit ComplexPolynomial(Coefficients c) : coeffs_(std::move(c)) { trim(); }
  ComplexPolynomial(std::initializer_list<ComplexType> c) : coeffs_(static_cast<Eigen::Index>(c.size())) {
    Eigen::Index i = 0;
    for (const auto& x : c) coeffs_[i++] = x;
    trim();
  }
  explicit ComplexPolynomial(const std::vector<ComplexType>& c)
      : coeffs_(Eigen::Map<const Coefficients>(c.data(), static_cast<Eigen::Index>(c.size()))) {
    trim();
  }

  static ComplexPolynomial constant(const ComplexType& c) { return ComplexPolynomial{c}; }
  /// zeta^n.
  static ComplexPolynomial monomial(int n, const ComplexType& c = ComplexType(1, 0)) {
    Coefficients v = Coefficients::Zero(n + 1);
    v[n] = c;
    return ComplexPolynomial(v);
  }

  bool is_zero() const { return coeffs_.size() == 0; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coefficients& coefficients() const { return coeffs_; }
  ComplexType coefficient(int k) const {
    return k >= 0 && k < coeffs_.size() ? coeffs_[k] : ComplexType(0, 0);
  }
  ComplexType leading() const { return is_zero() ? ComplexType(0, 0) : coeffs_[coeffs_.size() - 1]; }
  Scalar max_abs_coefficient() const {
    Scalar m = 0;
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i) m = std::max(m, std::abs(coeffs_[i]));
    return m;
  }

  ComplexType operator()(const ComplexType& z) const {
    ComplexType acc(0, 0);
    for (Eigen::Index i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
  }

  ComplexPolynomial derivative() const {
    if (degree() < 1) return {};
    Coefficients d(coeffs_.size() - 1);
    for (Eigen::Index i = 1; i < coeffs_.size(); ++i) d[i - 1] = Scalar(i) * coeffs_[i];
    return ComplexPolynomial(d);
  }

  /// Leading coefficients with modulus <= cut are dropped.
  ComplexPolynomial trimmed_below(Scalar cut) const {
    Eigen::Index n = coeffs_.size();
    while (n > 0 && std::abs(coeffs_[n - 1]) <= cut) --n;
    return ComplexPolynomial(Coefficients(coeffs_.head(n)));
  }

  /// Quotient by (zeta - r); the remainder is discarded.
  ComplexPolynomial deflate(const ComplexType& r) const {
    if (degree() < 1) return *this;
    const Eigen::Index n = coeffs_.size() - 1;
    Coefficients q(n);
    ComplexType carry = coeffs_[n];
    for (Eigen::Index i = n; i-- > 0;) {
      q[i] = carry;
      carry = coeffs_[i] + carry * r;
    }
    return ComplexPolynomial(q);
  }

  /// Distinct roots with multiplicities, from the eigenvalues of the
  /// companion matrix, Newton-polished and clustered.
  std::vector<Root<Scalar>> roots() const;

  friend ComplexPolynomial operator+(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    const Eigen::Index n = std::max(p.coeffs_.size(), q.coeffs_.size());
    Coefficients c = Coefficients::Zero(n);
    c.head(p.coeffs_.size()) += p.coeffs_;
    c.head(q.coeffs_.size()) += q.coeffs_;
    return ComplexPolynomial(c);
  }

  friend ComplexPolynomial operator-(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    return p + (ComplexType(-1, 0) * q);
  }

  friend ComplexPolynomial operator*(const ComplexType& s, const ComplexPolynomial& p) {
    return ComplexPolynomial(Coefficients(p.coeffs_ * s));
  }

  friend ComplexPolynomial operator*(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    Coefficients c = Coefficients::Zero(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (Eigen::Index i = 0; i < p.coeffs_.size(); ++i)
      for (Eigen::Index k = 0; k < q.coeffs_.size(); ++k) c[i + k] += p.coeffs_[i] * q.coeffs_[k];
    return ComplexPolynomial(c);
  }

  friend bool operator==(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    return p.coeffs_.size() == q.coeffs_.size() && p.coeffs_ == q.coeffs_;
  }

 private:
  void trim() {
    Eigen::Index n = coeffs_.size();
    while (n > 0 && coeffs_[n - 1] == ComplexType(0, 0)) --n;
    coeffs_.conservativeResize(n);
  }

  Coefficients coeffs_;
};

template <typename Scalar>
std::vector<Root<Scalar>> ComplexPolynomial<Scalar>::roots() const {
  using ComplexType = Complex<Scalar>;
  const int n = degree();
  std::vector<ComplexType> raw;
  if (n < 1) return {};

  // Roots at zero are exact; strip them before the eigen solve.
  Eigen::Index low = 0;
  while (coeffs_[low] == ComplexType(0, 0)) ++low;
  raw.assign(static_cast<std::size_t>(low), ComplexType(0, 0));
  const Eigen::Index m = n - low;
  if (m == 1) {
    raw.push_back(-coeffs_[low] / coeffs_[low + 1]);
  } else if (m > 1) {
    using Matrix = Eigen::Matrix<ComplexType, Eigen::Dynamic, Eigen::Dynamic>;
    Matrix companion = Matrix::Zero(m, m);
    const ComplexType lead = coeffs_[n];
    for (Eigen::Index i = 1; i < m; ++i) companion(i, i - 1) = ComplexType(1, 0);
    for (Eigen::Index i = 0; i < m; ++i) companion(i, m - 1) = -coeffs_[low + i] / lead;
    Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
    const ComplexPolynomial reduced(Coefficients(coeffs_.segment(low, m + 1)));
    const ComplexPolynomial slope = reduced.derivative();
    for (Eigen::Index i = 0; i < m; ++i) {
      ComplexType r = solver.eigenvalues()[i];
      // Newton polish; keep a step only while it reduces the residual.
      for (int it = 0; it < 3; ++it) {
        const ComplexType d = slope(r);
        if (d == ComplexType(0, 0)) break;
        const ComplexType next = r - reduced(r) / d;
        if (!(std::abs(reduced(next)) < std::abs(reduced(r)))) break;
        r = next;
      }
      raw.push_back(r);
    }
  }

  std::sort(raw.begin(), raw.end(), [](const ComplexType& a, const ComplexType& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  std::vector<Root<Scalar>> out;
  std::vector<bool> used(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    ComplexType sum = raw[i];
    int count = 1;
    used[i] = true;
    for (std::size_t k = i + 1; k < raw.size(); ++k) {
      if (!used[k] && roots_coincide(raw[i], raw[k], Scalar(kMultiplicityRadius))) {
        used[k] = true;
        sum += raw[k];
        ++count;
      }
    }
    out.push_back({sum / Scalar(count), count});
  }
  return out;
}

using ComplexPolynomiald = ComplexPolynomial<double>;
using Rootd = Root<double>;

}  // namespace bcx
