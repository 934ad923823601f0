#include "bicomplex/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bicomplex/error.hpp"

namespace bcx {

namespace {

// Relative size below which a leading coefficient of num - v den is
// treated as cancelled.
constexpr double kCancellationTolerance = 1e-12;

bool matches_any(const std::vector<Rootd>& roots, const Complexd& z) {
  return std::any_of(roots.begin(), roots.end(), [&](const Rootd& r) { return roots_coincide(r.value, z); });
}

}  // namespace

ComplexRational::ComplexRational() : ComplexRational(ComplexPolynomiald{}) {}

ComplexRational::ComplexRational(ComplexPolynomiald num, ComplexPolynomiald den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::InvalidArgument, "denominator is the zero polynomial");
  if (num_.is_zero()) {
    den_ = ComplexPolynomiald{Complexd(1, 0)};
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    auto num_roots = num_.roots();
    for (const Rootd& d : den_.roots()) {
      for (Rootd& n : num_roots) {
        if (n.multiplicity == 0 || !roots_coincide(n.value, d.value)) continue;
        const int k = std::min(n.multiplicity, d.multiplicity);
        const Complexd at = 0.5 * (n.value + d.value);
        for (int i = 0; i < k; ++i) {
          num_ = num_.deflate(at);
          den_ = den_.deflate(at);
        }
        n.multiplicity -= k;
        cancelled_.push_back({at, k});
        break;
      }
    }
  }
  poles_ = den_.roots();
}

ComplexRational ComplexRational::constant(const Complexd& c) { return ComplexRational(ComplexPolynomiald{c}); }

ExtendedComplexd ComplexRational::operator()(const Complexd& z) const {
  if (matches_any(poles_, z)) return ExtendedComplexd::infinity();
  const Complexd d = den_(z);
  if (d == Complexd(0, 0)) return ExtendedComplexd::infinity();
  const Complexd v = num_(z) / d;
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return ExtendedComplexd::infinity();
  return v;
}

ComplexRational operator*(const ComplexRational& f, const ComplexRational& g) {
  return ComplexRational(f.num_ * g.num_, f.den_ * g.den_);
}

double extended_norm(const ExtendedBicomplexd& w) {
  if (!w.is_finite()) return std::numeric_limits<double>::infinity();
  return std::hypot(std::abs(w.u1().value()), std::abs(w.u2().value())) / std::numbers::sqrt2;
}

PoleStrength pole_strength(const BicomplexMeromorphic& f, const Bicomplexd& w) {
  const bool p1 = matches_any(f.f1().poles(), w.u1());
  const bool p2 = matches_any(f.f2().poles(), w.u2());
  if (p1 && p2) return PoleStrength::Strong;
  if (p1 || p2) return PoleStrength::Weak;
  return PoleStrength::None;
}

bool PoleSet::contains(const Bicomplexd& w) const {
  bool hit1 = false;
  bool hit2 = false;
  for (const auto& p : poles) {
    if (!roots_coincide(p.location, p.component == Component::First ? w.u1() : w.u2())) continue;
    (p.component == Component::First ? hit1 : hit2) = true;
  }
  return (hit1 && factor2.contains(w.u2())) || (hit2 && factor1.contains(w.u1()));
}

PoleSet poles_in(const BicomplexMeromorphic& f, const Discus& d) {
  PoleSet set;
  set.factor1 = d.factor(Component::First);
  set.factor2 = d.factor(Component::Second);
  for (Component k : {Component::First, Component::Second}) {
    const PlanarDisc disc = d.factor(k);
    for (const Rootd& r : f.component(k).poles())
      if (root_in(disc, r.value)) set.poles.push_back({k, r.value, r.multiplicity});
  }
  return set;
}

bool is_holomorphic_on(const BicomplexMeromorphic& f, const Discus& d) { return poles_in(f, d).empty(); }

std::vector<double> pole_limit_check(const BicomplexMeromorphic& f, const Bicomplexd& w0,
                                     const std::vector<double>& radii, int samples_per_angle) {
  if (pole_strength(f, w0) != PoleStrength::Strong)
    throw Error(Errc::NotStrongPole, "both idempotent components of w0 must be poles");
  if (radii.empty()) throw Error(Errc::InvalidArgument, "radii list is empty");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw Error(Errc::InvalidArgument, "radii must be positive");
    if (i > 0 && !(radii[i] < radii[i - 1])) throw Error(Errc::InvalidArgument, "radii must be strictly decreasing");
  }
  if (samples_per_angle < 1) throw Error(Errc::InvalidArgument, "samples_per_angle must be >= 1");

  // ||w - w0||^2 = (|d1|^2 + |d2|^2) / 2 = r^2 with |d1| = sqrt2 r cos(phi), |d2| = sqrt2 r sin(phi).
  const int m = samples_per_angle;
  std::vector<double> mins;
  for (double r : radii) {
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < m; ++a) {
      const double phi = (a + 0.5) / m * std::numbers::pi / 2.0;
      const double s1 = std::numbers::sqrt2 * r * std::cos(phi);
      const double s2 = std::numbers::sqrt2 * r * std::sin(phi);
      for (int b = 0; b < m; ++b) {
        const Complexd d1 = std::polar(s1, 2.0 * std::numbers::pi * b / m);
        for (int c = 0; c < m; ++c) {
          const Complexd d2 = std::polar(s2, 2.0 * std::numbers::pi * c / m);
          const auto w = Bicomplexd::from_idempotent(w0.u1() + d1, w0.u2() + d2);
          best = std::min(best, extended_norm(f(w)));
        }
      }
    }
    mins.push_back(best);
  }
  return mins;
}

OmissionAnalysis omitted_value_roots(const ComplexRational& g, const ExtendedComplexd& v) {
  OmissionAnalysis out;
  if (v.is_infinite()) {
    out.roots = g.poles();
    out.attained_at_infinity = g.num().degree() > g.den().degree();
    return out;
  }
  const Complexd value = v.value();
  const double scale = std::max(g.num().max_abs_coefficient(), std::abs(value) * g.den().max_abs_coefficient());
  const ComplexPolynomiald h = (g.num() - value * g.den()).trimmed_below(kCancellationTolerance * scale);
  if (h.is_zero()) {
    out.identically = true;
    return out;
  }
  out.roots = h.roots();
  out.attained_at_infinity = h.degree() < std::max(g.num().degree(), g.den().degree());
  return out;
}

ComplexRational RationalTemplate::at(int n) const {
  std::vector<Complexd> a;
  std::vector<Complexd> b;
  for (const auto& c : num) a.push_back(c.at(n));
  for (const auto& c : den) b.push_back(c.at(n));
  if (b.empty()) b.emplace_back(1, 0);
  return ComplexRational(ComplexPolynomiald(a), ComplexPolynomiald(b));
}

FamilySpec FamilySpec::explicit_list(std::vector<BicomplexMeromorphic> fs) {
  if (fs.empty()) throw Error(Errc::InvalidArgument, "explicit family is empty");
  FamilySpec s;
  s.kind_ = std::move(fs);
  return s;
}

FamilySpec FamilySpec::indexed(FunctionTemplate t, std::optional<IndexWindow> window) {
  FamilySpec s;
  s.kind_ = std::move(t);
  s.window_ = window;
  s.effective_window();
  return s;
}

FamilySpec FamilySpec::builtin(Builtin b, std::optional<IndexWindow> window) {
  FamilySpec s;
  s.kind_ = b;
  s.window_ = window;
  s.effective_window();
  return s;
}

IndexWindow FamilySpec::effective_window(std::optional<IndexWindow> window) const {
  const IndexWindow w = window.value_or(window_.value_or(kDefaultWindow));
  if (w.from > w.to) throw Error(Errc::InvalidArgument, "index window has from > to");
  if (const auto* b = std::get_if<Builtin>(&kind_); b && *b == Builtin::WPowN && w.from < 0)
    throw Error(Errc::InvalidArgument, "w_pow_n requires nonnegative indices");
  return w;
}

BicomplexMeromorphic FamilySpec::instantiate(int n) const {
  if (const auto* list = std::get_if<std::vector<BicomplexMeromorphic>>(&kind_)) {
    if (n < 0 || static_cast<std::size_t>(n) >= list->size())
      throw Error(Errc::InvalidArgument, "member index " + std::to_string(n) + " out of range");
    return (*list)[static_cast<std::size_t>(n)];
  }
  if (const auto* t = std::get_if<FunctionTemplate>(&kind_)) return {t->f1.at(n), t->f2.at(n)};

  switch (std::get<Builtin>(kind_)) {
    case Builtin::NOverW:
      return BicomplexMeromorphic::diagonal(
          ComplexRational(ComplexPolynomiald{Complexd(n, 0)}, ComplexPolynomiald{Complexd(0, 0), Complexd(1, 0)}));
    case Builtin::WPowN:
      if (n < 0) throw Error(Errc::InvalidArgument, "w_pow_n requires n >= 0");
      return BicomplexMeromorphic::diagonal(ComplexRational(ComplexPolynomiald::monomial(n)));
  }
  throw Error(Errc::InvalidArgument, "unknown builtin family");
}

std::vector<FamilyMember> FamilySpec::members(std::optional<IndexWindow> window) const {
  std::vector<FamilyMember> out;
  if (const auto* list = std::get_if<std::vector<BicomplexMeromorphic>>(&kind_)) {
    for (std::size_t i = 0; i < list->size(); ++i) out.push_back({static_cast<int>(i), (*list)[i]});
    return out;
  }
  const IndexWindow w = effective_window(window);
  for (int n = w.from; n <= w.to; ++n) out.push_back({n, instantiate(n)});
  return out;
}

}  // namespace bcx
