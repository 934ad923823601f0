#pragma once

// T-cartesian sets built from planar discs, the discus D(a; r1, r2), Lie
// balls, and polar sampling grids that exhaust a discus by closed sub-discs.

#include <cstdint>
#include <optional>
#include <vector>

#include "bicomplex/algebra.hpp"

namespace bcx {

/// Disc B(center, radius) in C(i1), open or closed.
struct PlanarDisc {
  Complexd center;
  double radius = 1.0;
  bool closed = false;

  PlanarDisc() = default;
  PlanarDisc(Complexd c, double r, bool is_closed = false);

  bool contains(const Complexd& z) const;
};

enum class RootLocation { Inside, Boundary, Outside };

/// Tolerance-aware location of a computed root relative to a disc. Roots
/// within kRootTolerance of the circle are on the boundary.
RootLocation locate(const PlanarDisc& disc, const Complexd& z);
/// Inside, or on the boundary of a closed disc.
bool root_in(const PlanarDisc& disc, const Complexd& z);

/// D(a; r1, r2) = B(P1(a), r1) x_e B(P2(a), r2).
struct Discus {
  Bicomplexd center;
  double r1 = 1.0;
  double r2 = 1.0;
  bool closed = false;

  Discus() = default;
  Discus(const Bicomplexd& a, double radius1, double radius2, bool is_closed = false);

  PlanarDisc factor(Component k) const;
  bool contains(const Bicomplexd& w) const;

  friend bool operator==(const Discus&, const Discus&) = default;
};

/// D(0; r, r).
Discus lie_ball(double r, bool closed = false);

/// X1 x_e X2 = { w : P1(w) in X1 and P2(w) in X2 }.
struct CartesianSet {
  PlanarDisc first;
  PlanarDisc second;

  bool contains(const Bicomplexd& w) const;
  /// The equivalent discus; empty when the factors disagree on closedness.
  std::optional<Discus> as_discus() const;
};

CartesianSet cartesian_set(const PlanarDisc& x1, const PlanarDisc& x2);

struct ExhaustionOptions {
  /// Upper bound on grid size; larger products are stratified-subsampled.
  std::size_t max_points = 4096;
  /// Extra rings at radii rho/(n-1) * 2^-k, k = 1..center_rings, per factor.
  int center_rings = 0;
  /// Seeds the subsampler.
  std::uint64_t seed = 0;
};

struct SamplingGrid {
  std::vector<Bicomplexd> points;
  /// Largest nearest-neighbour distance over the grid (0 for a singleton).
  double delta = 0.0;
  /// Discus being exhausted.
  Discus parent;
  /// Closed sub-discus the points were drawn from.
  Discus region;
};

/// Grid over the closed sub-discus D(a; fraction r1, fraction r2), the x_e
/// product of two polar grids (centre plus n-1 rings of n angles each).
/// Throws InvalidFraction unless 0 < fraction < 1.
SamplingGrid exhaustion(const Discus& d, double fraction, int n, const ExhaustionOptions& options = {});

/// Largest nearest-neighbour distance, in the R^4 euclidean norm.
double max_nearest_neighbor_distance(const std::vector<Bicomplexd>& points);

}  // namespace bcx
