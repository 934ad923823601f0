#include "bicomplex/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "bicomplex/error.hpp"
#include "bicomplex/polynomial.hpp"

namespace bcx {

namespace {

void require_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw Error(Errc::InvalidArgument, "radius must be positive and finite, got " + std::to_string(r));
}

// Centre, then rings of increasing radius with n equally spaced angles.
std::vector<Complexd> polar_factor(const Complexd& c, double rho, int n, int center_rings) {
  std::vector<double> radii;
  const double step = rho / (n - 1);
  for (int k = center_rings; k >= 1; --k) radii.push_back(step * std::ldexp(1.0, -k));
  for (int k = 1; k < n; ++k) radii.push_back(k == n - 1 ? rho : step * k);

  std::vector<Complexd> out{c};
  for (double r : radii) {
    for (int m = 0; m < n; ++m) {
      const double theta = 2.0 * std::numbers::pi * m / n;
      Complexd offset(r * std::cos(theta), r * std::sin(theta));
      // Rounding in c + offset must not push a point off the closed disc.
      for (int guard = 0; guard < 16 && std::abs((c + offset) - c) > r; ++guard)
        offset *= 1.0 - 4.0 * std::numeric_limits<double>::epsilon();
      out.push_back(c + offset);
    }
  }
  return out;
}

}  // namespace

PlanarDisc::PlanarDisc(Complexd c, double r, bool is_closed) : center(c), radius(r), closed(is_closed) {
  require_radius(r);
}

bool PlanarDisc::contains(const Complexd& z) const {
  const double d = std::abs(z - center);
  return closed ? d <= radius : d < radius;
}

RootLocation locate(const PlanarDisc& disc, const Complexd& z) {
  const double d = std::abs(z - disc.center);
  const double tol = kRootTolerance * (1.0 + std::abs(z));
  if (d < disc.radius - tol) return RootLocation::Inside;
  if (d <= disc.radius + tol) return RootLocation::Boundary;
  return RootLocation::Outside;
}

bool root_in(const PlanarDisc& disc, const Complexd& z) {
  switch (locate(disc, z)) {
    case RootLocation::Inside: return true;
    case RootLocation::Boundary: return disc.closed;
    case RootLocation::Outside: return false;
  }
  return false;
}

Discus::Discus(const Bicomplexd& a, double radius1, double radius2, bool is_closed)
    : center(a), r1(radius1), r2(radius2), closed(is_closed) {
  require_radius(radius1);
  require_radius(radius2);
}

PlanarDisc Discus::factor(Component k) const {
  return k == Component::First ? PlanarDisc(center.u1(), r1, closed) : PlanarDisc(center.u2(), r2, closed);
}

bool Discus::contains(const Bicomplexd& w) const {
  return factor(Component::First).contains(w.u1()) && factor(Component::Second).contains(w.u2());
}

Discus lie_ball(double r, bool closed) { return Discus(Bicomplexd{}, r, r, closed); }

bool CartesianSet::contains(const Bicomplexd& w) const {
  return first.contains(w.u1()) && second.contains(w.u2());
}

std::optional<Discus> CartesianSet::as_discus() const {
  if (first.closed != second.closed) return std::nullopt;
  return Discus(Bicomplexd::from_idempotent(first.center, second.center), first.radius, second.radius,
                first.closed);
}

CartesianSet cartesian_set(const PlanarDisc& x1, const PlanarDisc& x2) { return {x1, x2}; }

double max_nearest_neighbor_distance(const std::vector<Bicomplexd>& points) {
  if (points.size() < 2) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k == i) continue;
      const Complexd d1 = points[i].u1() - points[k].u1();
      const Complexd d2 = points[i].u2() - points[k].u2();
      best = std::min(best, 0.5 * (std::norm(d1) + std::norm(d2)));
    }
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

SamplingGrid exhaustion(const Discus& d, double fraction, int n, const ExhaustionOptions& options) {
  if (!(fraction > 0.0 && fraction < 1.0))
    throw Error(Errc::InvalidFraction, "fraction must lie in (0, 1), got " + std::to_string(fraction));
  if (n < 2) throw Error(Errc::InvalidArgument, "grid parameter n must be >= 2");
  if (options.center_rings < 0) throw Error(Errc::InvalidArgument, "center_rings must be >= 0");
  if (options.max_points == 0) throw Error(Errc::InvalidArgument, "max_points must be >= 1");

  SamplingGrid grid;
  grid.parent = d;
  grid.region = Discus(d.center, fraction * d.r1, fraction * d.r2, /*is_closed=*/true);

  const auto f1 = polar_factor(d.center.u1(), grid.region.r1, n, options.center_rings);
  const auto f2 = polar_factor(d.center.u2(), grid.region.r2, n, options.center_rings);
  const std::size_t total = f1.size() * f2.size();
  auto point = [&](std::size_t p) { return Bicomplexd::from_idempotent(f1[p / f2.size()], f2[p % f2.size()]); };

  if (total <= options.max_points) {
    grid.points.reserve(total);
    for (std::size_t p = 0; p < total; ++p) grid.points.push_back(point(p));
  } else {
    // One pick per stratum of consecutive product indices; stratum 0 keeps
    // the centre. Raw engine output keeps picks identical across platforms.
    std::mt19937_64 rng(options.seed);
    const std::size_t m = options.max_points;
    grid.points.reserve(m);
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t lo = s * total / m;
      const std::size_t hi = (s + 1) * total / m;
      const std::size_t pick = s == 0 ? 0 : lo + static_cast<std::size_t>(rng() % (hi - lo));
      grid.points.push_back(point(pick));
    }
  }
  grid.delta = max_nearest_neighbor_distance(grid.points);
  return grid;
}

}  // namespace bcx
