#pragma once

// Normal-family diagnostics over sampled discus exhaustions: bispherical
// uniform Cauchy tests and limit classification, equicontinuity moduli
// (Montel), the projection criterion, and exact Fundamental Normality Test /
// Picard hypothesis checks.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bicomplex/domains.hpp"
#include "bicomplex/extended.hpp"
#include "bicomplex/functions.hpp"

namespace bcx {

struct AnalysisOptions {
  /// Worker threads for grid evaluation. Results do not depend on it.
  int threads = 1;
  /// chi distance to infinity below which a limit sample counts as infinite.
  double infinity_threshold = 0.05;
};

// ---------------------------------------------------------------------------
// Convergence

enum class LimitClass { MeromorphicLike, WeakInfinityValued, IdenticallyInfinity, Divergent };
std::string_view to_string(LimitClass c);

struct SupEntry {
  int m;
  int n;
  double sup;
};

/// Lower-bound comparison of euclidean and bispherical tail distances,
/// present only when every tail value and limit sample is finite.
struct EuclideanTailCheck {
  /// Bound on ||f_n|| and ||f|| over the tail and grid.
  double bound;
  double bispherical_sup;
  double euclidean_sup;
  /// max over grid of sqrt(1 + 2||f_n||^2) sqrt(1 + 2||f||^2) chi_e(f_n, f).
  double pointwise_bound;
  /// (1 + 2 bound^2) bispherical_sup.
  double uniform_bound;
};

struct ConvergenceReport {
  std::size_t grid_points = 0;
  double grid_delta = 0.0;
  IndexWindow window;
  double eps = 0.0;
  /// sup over the grid of chi_e(f_m, f_n), all m < n in the window.
  std::vector<SupEntry> sup_table;
  /// Tail is the upper half of the window, [tail_from, window.to].
  int tail_from = 0;
  double cauchy_epsilon_achieved = 0.0;
  bool cauchy_passed = false;
  /// Smallest N with every pair m, n >= N below eps.
  std::optional<int> first_index_below_eps;
  LimitClass limit_class = LimitClass::Divergent;
  /// f at the largest index, one sample per grid point.
  std::vector<ExtendedBicomplexd> limit_samples;
  std::optional<EuclideanTailCheck> euclidean_check;
};

/// Cauchy test over the window on a sampling grid. Passes when the tail
/// sup of chi_e(f_m, f_n) is below eps. Throws EmptyGrid.
ConvergenceReport uniform_cauchy(const FamilySpec& family, const SamplingGrid& grid, double eps,
                                 std::optional<IndexWindow> window = std::nullopt,
                                 const AnalysisOptions& options = {});

ConvergenceReport uniform_cauchy(const FamilySpec& family, const Discus& d, double fraction, int n_grid,
                                 double eps, std::optional<IndexWindow> window = std::nullopt,
                                 const AnalysisOptions& options = {});

/// Limit classification from the limit samples. Call only after the Cauchy
/// test passed.
LimitClass classify_limit(const std::vector<ExtendedBicomplexd>& samples, double threshold = 0.05);

/// (n, sup over grid of chi_e(f_n(w), target)) for each n in the window.
std::vector<std::pair<int, double>> sup_distance_to(const FamilySpec& family, const SamplingGrid& grid,
                                                    const ExtendedBicomplexd& target,
                                                    std::optional<IndexWindow> window = std::nullopt,
                                                    const AnalysisOptions& options = {});

// ---------------------------------------------------------------------------
// Equicontinuity

enum class Verdict { EvidenceForNormal, EvidenceAgainstNormal, Inconclusive };
std::string_view to_string(Verdict v);

struct VerdictThresholds {
  /// omega(delta_min) below this is evidence for normality.
  double vanishing = 0.05;
  /// omega(delta_max) above this, with omega(delta_min) > ratio * omega(delta_max),
  /// is evidence against.
  double floor = 0.2;
  double ratio = 0.5;
};

enum class ModulusMetric { Bichordal, Euclidean };

struct EquicontinuityReport {
  /// Ascending.
  std::vector<double> deltas;
  /// omega(delta): max over members and grid pairs with distance <= delta.
  std::vector<double> modulus;
  std::vector<std::size_t> pair_counts;
  Verdict verdict = Verdict::Inconclusive;
};

Verdict equicontinuity_verdict(const std::vector<double>& modulus, const std::vector<std::size_t>& pair_counts,
                               const VerdictThresholds& thresholds = {});

/// Throws EmptyGrid, or InvalidArgument for an empty or nonpositive delta list.
EquicontinuityReport equicontinuity_modulus(const FamilySpec& family, const SamplingGrid& grid,
                                            std::vector<double> deltas,
                                            std::optional<IndexWindow> window = std::nullopt,
                                            const AnalysisOptions& options = {},
                                            ModulusMetric metric = ModulusMetric::Bichordal,
                                            const VerdictThresholds& thresholds = {});

EquicontinuityReport equicontinuity_modulus(const FamilySpec& family, const Discus& d, double fraction,
                                            int n_grid, std::vector<double> deltas,
                                            std::optional<IndexWindow> window = std::nullopt,
                                            const AnalysisOptions& options = {});

/// The modulus of one projected family P_k(F) on the distinct P_k values of
/// the grid, measured as chi / sqrt(2), the component's share of chi_e.
/// Planar pairs are compared at sqrt(2) delta, the largest |P_k w - P_k w'|
/// allowed by ||w - w'|| <= delta.
EquicontinuityReport component_modulus(const FamilySpec& family, const SamplingGrid& grid, Component k,
                                       std::vector<double> deltas,
                                       std::optional<IndexWindow> window = std::nullopt,
                                       const AnalysisOptions& options = {},
                                       const VerdictThresholds& thresholds = {});

struct CrosscheckReport {
  EquicontinuityReport joint;
  EquicontinuityReport first;
  EquicontinuityReport second;
  /// joint evidence-for <=> both components evidence-for.
  bool coherent = false;
};

CrosscheckReport projection_crosscheck(const FamilySpec& family, const SamplingGrid& grid,
                                       std::vector<double> deltas,
                                       std::optional<IndexWindow> window = std::nullopt,
                                       const AnalysisOptions& options = {},
                                       const VerdictThresholds& thresholds = {});

// ---------------------------------------------------------------------------
// Fundamental Normality Test and Picard

enum class Conclusion { HypothesesSatisfied, HypothesesViolated };
std::string_view to_string(Conclusion c);

struct LabeledValue {
  std::string label;
  ExtendedBicomplexd value;
};

struct SeparationCheck {
  std::string first;
  std::string second;
  bool invertible;
};

struct OmissionCheck {
  int member;
  Component component;
  std::string value_label;
  ExtendedComplexd value;
  bool omitted;
  /// Smallest |root - factor centre| over the finite roots (inf if none).
  double nearest_root_distance;
  std::vector<Complexd> roots_inside;
  bool identically = false;
  bool attained_at_infinity = false;
};

struct Witness {
  int member;
  Component component;
  std::string value_label;
  /// Component point where the value is attained.
  Complexd root;
  /// A point of the discus whose k-th projection is the root.
  Bicomplexd point;
};

struct FNTReport {
  std::vector<SeparationCheck> separations;
  std::vector<OmissionCheck> omitted;
  Conclusion conclusion = Conclusion::HypothesesViolated;
  std::optional<Witness> witness;
};

/// Pairwise differences of the values must be invertible; throws
/// NotInvertibleSeparation otherwise.
std::vector<SeparationCheck> check_separations(const std::vector<LabeledValue>& values);

/// Two omitted values for a holomorphic family. Throws NotHolomorphic if a
/// member has a pole in the discus, NotInvertibleSeparation if alpha - beta
/// lies in the null-cone.
FNTReport fnt_holomorphic(const FamilySpec& family, const Discus& d, const Bicomplexd& alpha,
                          const Bicomplexd& beta, std::optional<IndexWindow> window = std::nullopt);

/// Three omitted values for a meromorphic family; a value component may be
/// infinite.
FNTReport fnt_meromorphic(const FamilySpec& family, const Discus& d, const ExtendedBicomplexd& alpha,
                          const ExtendedBicomplexd& beta, const ExtendedBicomplexd& gamma,
                          std::optional<IndexWindow> window = std::nullopt);

enum class PicardVerdict { Constant, HypothesesViolated, Inconsistent };
std::string_view to_string(PicardVerdict v);

struct PicardReport {
  std::vector<SeparationCheck> separations;
  std::vector<OmissionCheck> omitted;
  PicardVerdict verdict = PicardVerdict::HypothesesViolated;
  /// Both components have degree-0 numerator and denominator.
  bool components_constant = false;
  std::optional<Witness> witness;
};

/// Omission of three separated values on the whole plane forces f constant.
PicardReport picard_check(const BicomplexMeromorphic& f, const ExtendedBicomplexd& alpha,
                          const ExtendedBicomplexd& beta, const ExtendedBicomplexd& gamma);

}  // namespace bcx
