#pragma once

// Bicomplex meromorphic functions as pairs of complex rational component
// functions: f(w) = f1(P1 w) e1 + f2(P2 w) e2.

#include <optional>
#include <variant>
#include <vector>

#include "bicomplex/algebra.hpp"
#include "bicomplex/domains.hpp"
#include "bicomplex/extended.hpp"
#include "bicomplex/polynomial.hpp"

namespace bcx {

/// num / den in lowest terms. Common roots are cancelled at construction and
/// listed in cancelled(); den is never the zero polynomial.
class ComplexRational {
 public:
  ComplexRational();
  explicit ComplexRational(ComplexPolynomiald num, ComplexPolynomiald den = ComplexPolynomiald{Complexd(1, 0)});

  static ComplexRational constant(const Complexd& c);

  const ComplexPolynomiald& num() const { return num_; }
  const ComplexPolynomiald& den() const { return den_; }
  /// Poles, i.e. roots of the reduced denominator.
  const std::vector<Rootd>& poles() const { return poles_; }
  const std::vector<Rootd>& cancelled() const { return cancelled_; }

  /// Degree-0 numerator and denominator.
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  /// Infinity at poles, num/den elsewhere.
  ExtendedComplexd operator()(const Complexd& z) const;

  friend ComplexRational operator*(const ComplexRational& f, const ComplexRational& g);

 private:
  ComplexPolynomiald num_;
  ComplexPolynomiald den_;
  std::vector<Rootd> poles_;
  std::vector<Rootd> cancelled_;
};

class BicomplexMeromorphic {
 public:
  BicomplexMeromorphic() = default;
  BicomplexMeromorphic(ComplexRational f1, ComplexRational f2) : f1_(std::move(f1)), f2_(std::move(f2)) {}

  /// The same component function in both idempotent slots (a C(i1)-rational
  /// function of w).
  static BicomplexMeromorphic diagonal(const ComplexRational& g) { return {g, g}; }

  const ComplexRational& f1() const { return f1_; }
  const ComplexRational& f2() const { return f2_; }
  const ComplexRational& component(Component k) const { return k == Component::First ? f1_ : f2_; }

  ExtendedBicomplexd operator()(const Bicomplexd& w) const { return {f1_(w.u1()), f2_(w.u2())}; }

  friend BicomplexMeromorphic operator*(const BicomplexMeromorphic& f, const BicomplexMeromorphic& g) {
    return {f.f1_ * g.f1_, f.f2_ * g.f2_};
  }

 private:
  ComplexRational f1_;
  ComplexRational f2_;
};

inline ExtendedBicomplexd eval(const BicomplexMeromorphic& f, const Bicomplexd& w) { return f(w); }

/// Euclidean norm extended to the infinity set (infinite there).
double extended_norm(const ExtendedBicomplexd& w);

struct PoleDatum {
  Component component;
  Complexd location;
  int order = 1;
};

enum class PoleStrength { None, Weak, Strong };

/// Strong when both P1(w) and P2(w) are poles of their component, weak when
/// exactly one is.
PoleStrength pole_strength(const BicomplexMeromorphic& f, const Bicomplexd& w);

/// Poles inside a discus. The pole set in T is not isolated: it is
/// ({component-1 poles} x_e factor2) u (factor1 x_e {component-2 poles}).
struct PoleSet {
  std::vector<PoleDatum> poles;
  PlanarDisc factor1;
  PlanarDisc factor2;

  bool empty() const { return poles.empty(); }
  bool contains(const Bicomplexd& w) const;
};

PoleSet poles_in(const BicomplexMeromorphic& f, const Discus& d);
bool is_holomorphic_on(const BicomplexMeromorphic& f, const Discus& d);

/// Minimum of ||f(w)|| over the sphere ||w - w0|| = r, for each radius.
/// Requires a strong pole at w0 (NotStrongPole otherwise) and strictly
/// decreasing positive radii.
std::vector<double> pole_limit_check(const BicomplexMeromorphic& f, const Bicomplexd& w0,
                                     const std::vector<double>& radii, int samples_per_angle = 16);

/// Where a rational function takes a value v.
struct OmissionAnalysis {
  /// Finite points with g = v (roots of num - v den, or poles for v = inf).
  std::vector<Rootd> roots;
  /// g(inf) = v, detected by a degree drop.
  bool attained_at_infinity = false;
  /// g is identically v.
  bool identically = false;
};

OmissionAnalysis omitted_value_roots(const ComplexRational& g, const ExtendedComplexd& v);

/// c0 + c1 n + c2 n^2.
struct CoefficientTemplate {
  Complexd c0;
  Complexd c1;
  Complexd c2;

  Complexd at(int n) const { return c0 + c1 * double(n) + c2 * double(n) * double(n); }
};

struct RationalTemplate {
  std::vector<CoefficientTemplate> num;
  std::vector<CoefficientTemplate> den;

  ComplexRational at(int n) const;
};

struct FunctionTemplate {
  RationalTemplate f1;
  RationalTemplate f2;
};

enum class Builtin { NOverW, WPowN };

struct IndexWindow {
  int from = 1;
  int to = 64;

  int size() const { return to - from + 1; }
  friend bool operator==(const IndexWindow&, const IndexWindow&) = default;
};

inline constexpr IndexWindow kDefaultWindow{1, 64};

struct FamilyMember {
  int index;
  BicomplexMeromorphic f;
};

/// A family of bicomplex meromorphic functions: an explicit list, or a
/// sequence indexed by n (coefficient templates or a built-in form).
class FamilySpec {
 public:
  static FamilySpec explicit_list(std::vector<BicomplexMeromorphic> fs);
  static FamilySpec indexed(FunctionTemplate t, std::optional<IndexWindow> window = std::nullopt);
  static FamilySpec builtin(Builtin b, std::optional<IndexWindow> window = std::nullopt);

  bool is_indexed() const { return !std::holds_alternative<std::vector<BicomplexMeromorphic>>(kind_); }
  std::optional<IndexWindow> window() const { return window_; }
  const std::variant<std::vector<BicomplexMeromorphic>, FunctionTemplate, Builtin>& kind() const { return kind_; }

  /// Member n. For explicit lists n is the zero-based position.
  BicomplexMeromorphic instantiate(int n) const;
  /// Members over the window (argument, else the family's own, else the
  /// default); explicit lists ignore the window and return every member.
  std::vector<FamilyMember> members(std::optional<IndexWindow> window = std::nullopt) const;
  IndexWindow effective_window(std::optional<IndexWindow> window = std::nullopt) const;

 private:
  std::variant<std::vector<BicomplexMeromorphic>, FunctionTemplate, Builtin> kind_;
  std::optional<IndexWindow> window_;
};

}  // namespace bcx
