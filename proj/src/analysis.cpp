#include "bicomplex/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "bicomplex/error.hpp"
#include "bicomplex/metric.hpp"

namespace bcx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using ValueTable = std::vector<std::vector<ExtendedBicomplexd>>;

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index
// writes only its own slot, so results do not depend on the thread count.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body body) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([=, &body] {
      for (std::size_t i = t; i < count; i += workers) body(i);
    });
}

ValueTable evaluate(const std::vector<FamilyMember>& members, const std::vector<Bicomplexd>& points,
                    int threads) {
  ValueTable values(members.size());
  parallel_for(members.size(), threads, [&](std::size_t m) {
    auto& row = values[m];
    row.reserve(points.size());
    for (const auto& w : points) row.push_back(members[m].f(w));
  });
  return values;
}

void require_grid(const SamplingGrid& grid) {
  if (grid.points.empty()) throw Error(Errc::EmptyGrid, "sampling grid has no points");
}

std::vector<double> normalized_deltas(std::vector<double> deltas) {
  if (deltas.empty()) throw Error(Errc::InvalidArgument, "delta list is empty");
  for (double d : deltas)
    if (!(d > 0.0) || !std::isfinite(d)) throw Error(Errc::InvalidArgument, "deltas must be positive and finite");
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  return deltas;
}

double point_distance(const Bicomplexd& a, const Bicomplexd& b) {
  return std::sqrt(0.5 * (std::norm(a.u1() - b.u1()) + std::norm(a.u2() - b.u2())));
}

double euclidean_distance(const ExtendedBicomplexd& a, const ExtendedBicomplexd& b) {
  if (a == b) return 0.0;
  if (!a.is_finite() || !b.is_finite()) return kInf;
  return euclid_norm(a.to_bicomplex() - b.to_bicomplex());
}

struct BucketedPair {
  std::size_t i;
  std::size_t k;
  std::size_t bucket;
};

// Pairs with distance <= deltas.back(), each tagged with the first delta
// that admits it; counts[j] is the number of pairs admitted by deltas[j].
template <typename Point, typename Distance>
std::vector<BucketedPair> bucket_pairs(const std::vector<Point>& pts, const std::vector<double>& deltas,
                                       Distance distance, double scale, std::vector<std::size_t>& counts) {
  std::vector<BucketedPair> pairs;
  counts.assign(deltas.size(), 0);
  const double reach = scale * deltas.back();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t k = i + 1; k < pts.size(); ++k) {
      const double d = distance(pts[i], pts[k]);
      if (d > reach) continue;
      const auto b = static_cast<std::size_t>(
          std::lower_bound(deltas.begin(), deltas.end(), d, [scale](double delta, double dist) {
            return scale * delta < dist;
          }) -
          deltas.begin());
      pairs.push_back({i, k, b});
      ++counts[b];
    }
  }
  for (std::size_t j = 1; j < counts.size(); ++j) counts[j] += counts[j - 1];
  return pairs;
}

// omega(delta_j) from per-member bucket maxima.
std::vector<double> cumulative_modulus(const std::vector<std::vector<double>>& per_member, std::size_t buckets) {
  std::vector<double> modulus(buckets, 0.0);
  for (const auto& row : per_member)
    for (std::size_t b = 0; b < buckets; ++b) modulus[b] = std::max(modulus[b], row[b]);
  for (std::size_t b = 1; b < buckets; ++b) modulus[b] = std::max(modulus[b], modulus[b - 1]);
  return modulus;
}

bool component_separated(const ExtendedComplexd& a, const ExtendedComplexd& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() != b.is_infinite();
  const double scale = std::max({1.0, std::abs(a.value()), std::abs(b.value())});
  return std::abs(a.value() - b.value()) > kNullConeTolerance * scale;
}

bool separated(const ExtendedBicomplexd& a, const ExtendedBicomplexd& b) {
  if (a.is_finite() && b.is_finite()) return !is_null_cone(a.to_bicomplex() - b.to_bicomplex());
  return component_separated(a.u1(), b.u1()) && component_separated(a.u2(), b.u2());
}

struct OmissionResult {
  std::vector<OmissionCheck> checks;
  std::optional<Witness> witness;
};

// Omission of each value by each member, componentwise, on the factors of a
// discus, or on the whole plane when no discus is given.
OmissionResult check_omissions(const std::vector<FamilyMember>& members, const std::optional<Discus>& d,
                               const std::vector<LabeledValue>& values) {
  OmissionResult out;
  for (const auto& member : members) {
    for (const auto& v : values) {
      for (Component k : {Component::First, Component::Second}) {
        const Complexd center = d ? d->factor(k).center : Complexd(0, 0);
        const OmissionAnalysis oa = omitted_value_roots(member.f.component(k), v.value.component(k));

        OmissionCheck check{member.index, k, v.label, v.value.component(k), true, kInf, {}, oa.identically,
                            oa.attained_at_infinity};
        for (const Rootd& r : oa.roots) {
          check.nearest_root_distance = std::min(check.nearest_root_distance, std::abs(r.value - center));
          if (!d || root_in(d->factor(k), r.value)) check.roots_inside.push_back(r.value);
        }
        check.omitted = !oa.identically && check.roots_inside.empty();

        if (!check.omitted && !out.witness) {
          const Complexd root = oa.identically ? center : check.roots_inside.front();
          const Complexd other = d ? d->factor(k == Component::First ? Component::Second : Component::First).center
                                   : Complexd(0, 0);
          const Bicomplexd point = k == Component::First ? Bicomplexd::from_idempotent(root, other)
                                                         : Bicomplexd::from_idempotent(other, root);
          out.witness = Witness{member.index, k, v.label, root, point};
        }
        out.checks.push_back(std::move(check));
      }
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(LimitClass c) {
  switch (c) {
    case LimitClass::MeromorphicLike: return "MeromorphicLike";
    case LimitClass::WeakInfinityValued: return "WeakInfinityValued";
    case LimitClass::IdenticallyInfinity: return "IdenticallyInfinity";
    case LimitClass::Divergent: return "Divergent";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::EvidenceForNormal: return "evidence-for-normal";
    case Verdict::EvidenceAgainstNormal: return "evidence-against-normal";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(Conclusion c) {
  return c == Conclusion::HypothesesSatisfied ? "hypotheses-satisfied" : "hypotheses-violated";
}

std::string_view to_string(PicardVerdict v) {
  switch (v) {
    case PicardVerdict::Constant: return "constant";
    case PicardVerdict::HypothesesViolated: return "hypotheses-violated";
    case PicardVerdict::Inconsistent: return "inconsistent";
  }
  return "?";
}

LimitClass classify_limit(const std::vector<ExtendedBicomplexd>& samples, double threshold) {
  if (samples.empty()) throw Error(Errc::EmptyGrid, "no limit samples to classify");
  const ExtendedComplexd inf = ExtendedComplexd::infinity();
  auto near_infinity = [&](Component k) {
    return std::all_of(samples.begin(), samples.end(),
                       [&](const ExtendedBicomplexd& s) { return chordal(s.component(k), inf) < threshold; });
  };
  const bool first = near_infinity(Component::First);
  const bool second = near_infinity(Component::Second);
  if (first && second) return LimitClass::IdenticallyInfinity;
  if (first || second) return LimitClass::WeakInfinityValued;
  return LimitClass::MeromorphicLike;
}

ConvergenceReport uniform_cauchy(const FamilySpec& family, const SamplingGrid& grid, double eps,
                                 std::optional<IndexWindow> window, const AnalysisOptions& options) {
  require_grid(grid);
  if (!(eps > 0.0)) throw Error(Errc::InvalidArgument, "eps must be positive");
  const auto members = family.members(window);
  const ValueTable values = evaluate(members, grid.points, options.threads);
  const std::size_t count = members.size();

  ConvergenceReport report;
  report.grid_points = grid.points.size();
  report.grid_delta = grid.delta;
  report.window = {members.front().index, members.back().index};
  report.eps = eps;

  // sups[i][k] for i < k.
  std::vector<std::vector<double>> sups(count, std::vector<double>(count, 0.0));
  parallel_for(count, options.threads, [&](std::size_t i) {
    for (std::size_t k = i + 1; k < count; ++k) {
      double s = 0.0;
      for (std::size_t p = 0; p < grid.points.size(); ++p) s = std::max(s, bichordal(values[i][p], values[k][p]));
      sups[i][k] = s;
    }
  });
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t k = i + 1; k < count; ++k) report.sup_table.push_back({members[i].index, members[k].index, sups[i][k]});

  const std::size_t tail = count / 2;
  report.tail_from = members[tail].index;
  for (std::size_t i = tail; i < count; ++i)
    for (std::size_t k = i + 1; k < count; ++k) report.cauchy_epsilon_achieved = std::max(report.cauchy_epsilon_achieved, sups[i][k]);
  report.cauchy_passed = report.cauchy_epsilon_achieved < eps;

  // Suffix maxima over pairs starting at position p.
  double suffix = 0.0;
  for (std::size_t p = count - 1; p-- > 0;) {
    for (std::size_t k = p + 1; k < count; ++k) suffix = std::max(suffix, sups[p][k]);
    if (suffix < eps) report.first_index_below_eps = members[p].index;
  }

  report.limit_samples = values.back();
  report.limit_class =
      report.cauchy_passed ? classify_limit(report.limit_samples, options.infinity_threshold) : LimitClass::Divergent;

  bool finite = std::all_of(report.limit_samples.begin(), report.limit_samples.end(),
                            [](const auto& s) { return s.is_finite(); });
  for (std::size_t i = tail; finite && i < count; ++i)
    finite = std::all_of(values[i].begin(), values[i].end(), [](const auto& s) { return s.is_finite(); });
  if (finite) {
    EuclideanTailCheck check{0.0, 0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = tail; i < count; ++i) {
      for (std::size_t p = 0; p < grid.points.size(); ++p) {
        const Bicomplexd fn = values[i][p].to_bicomplex();
        const Bicomplexd f = report.limit_samples[p].to_bicomplex();
        const double nfn = euclid_norm(fn);
        const double nf = euclid_norm(f);
        const double chi = bichordal(values[i][p], report.limit_samples[p]);
        check.bound = std::max({check.bound, nfn, nf});
        check.bispherical_sup = std::max(check.bispherical_sup, chi);
        check.euclidean_sup = std::max(check.euclidean_sup, euclid_norm(fn - f));
        check.pointwise_bound = std::max(
            check.pointwise_bound, std::sqrt(1.0 + 2.0 * nfn * nfn) * std::sqrt(1.0 + 2.0 * nf * nf) * chi);
      }
    }
    check.uniform_bound = (1.0 + 2.0 * check.bound * check.bound) * check.bispherical_sup;
    report.euclidean_check = check;
  }
  return report;
}

ConvergenceReport uniform_cauchy(const FamilySpec& family, const Discus& d, double fraction, int n_grid,
                                 double eps, std::optional<IndexWindow> window, const AnalysisOptions& options) {
  return uniform_cauchy(family, exhaustion(d, fraction, n_grid), eps, window, options);
}

std::vector<std::pair<int, double>> sup_distance_to(const FamilySpec& family, const SamplingGrid& grid,
                                                    const ExtendedBicomplexd& target,
                                                    std::optional<IndexWindow> window,
                                                    const AnalysisOptions& options) {
  require_grid(grid);
  const auto members = family.members(window);
  std::vector<std::pair<int, double>> out(members.size());
  parallel_for(members.size(), options.threads, [&](std::size_t m) {
    double s = 0.0;
    for (const auto& w : grid.points) s = std::max(s, bichordal(members[m].f(w), target));
    out[m] = {members[m].index, s};
  });
  return out;
}

Verdict equicontinuity_verdict(const std::vector<double>& modulus, const std::vector<std::size_t>& pair_counts,
                               const VerdictThresholds& t) {
  if (modulus.empty() || pair_counts.empty() || pair_counts.front() == 0) return Verdict::Inconclusive;
  const double lo = modulus.front();
  const double hi = modulus.back();
  if (hi > t.floor && lo > t.ratio * hi) return Verdict::EvidenceAgainstNormal;
  if (lo < t.vanishing) return Verdict::EvidenceForNormal;
  return Verdict::Inconclusive;
}

EquicontinuityReport equicontinuity_modulus(const FamilySpec& family, const SamplingGrid& grid,
                                            std::vector<double> deltas, std::optional<IndexWindow> window,
                                            const AnalysisOptions& options, ModulusMetric metric,
                                            const VerdictThresholds& thresholds) {
  require_grid(grid);
  EquicontinuityReport report;
  report.deltas = normalized_deltas(std::move(deltas));
  const auto pairs = bucket_pairs(grid.points, report.deltas, point_distance, 1.0, report.pair_counts);

  const auto members = family.members(window);
  const std::size_t buckets = report.deltas.size();
  std::vector<std::vector<double>> per_member(members.size(), std::vector<double>(buckets, 0.0));
  parallel_for(members.size(), options.threads, [&](std::size_t m) {
    std::vector<ExtendedBicomplexd> v;
    v.reserve(grid.points.size());
    for (const auto& w : grid.points) v.push_back(members[m].f(w));
    auto& row = per_member[m];
    for (const auto& p : pairs) {
      const double d = metric == ModulusMetric::Bichordal ? bichordal(v[p.i], v[p.k]) : euclidean_distance(v[p.i], v[p.k]);
      row[p.bucket] = std::max(row[p.bucket], d);
    }
  });
  report.modulus = cumulative_modulus(per_member, buckets);
  report.verdict = equicontinuity_verdict(report.modulus, report.pair_counts, thresholds);
  return report;
}

EquicontinuityReport equicontinuity_modulus(const FamilySpec& family, const Discus& d, double fraction,
                                            int n_grid, std::vector<double> deltas,
                                            std::optional<IndexWindow> window, const AnalysisOptions& options) {
  return equicontinuity_modulus(family, exhaustion(d, fraction, n_grid), std::move(deltas), window, options);
}

EquicontinuityReport component_modulus(const FamilySpec& family, const SamplingGrid& grid, Component k,
                                       std::vector<double> deltas, std::optional<IndexWindow> window,
                                       const AnalysisOptions& options, const VerdictThresholds& thresholds) {
  require_grid(grid);
  EquicontinuityReport report;
  report.deltas = normalized_deltas(std::move(deltas));

  std::vector<Complexd> zs;
  zs.reserve(grid.points.size());
  for (const auto& w : grid.points) zs.push_back(proj(w, k));
  auto less = [](const Complexd& a, const Complexd& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  std::sort(zs.begin(), zs.end(), less);
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

  auto planar = [](const Complexd& a, const Complexd& b) { return std::abs(a - b); };
  const auto pairs = bucket_pairs(zs, report.deltas, planar, std::numbers::sqrt2, report.pair_counts);

  const auto members = family.members(window);
  const std::size_t buckets = report.deltas.size();
  std::vector<std::vector<double>> per_member(members.size(), std::vector<double>(buckets, 0.0));
  parallel_for(members.size(), options.threads, [&](std::size_t m) {
    const ComplexRational& g = members[m].f.component(k);
    std::vector<ExtendedComplexd> v;
    v.reserve(zs.size());
    for (const auto& z : zs) v.push_back(g(z));
    auto& row = per_member[m];
    // chi / sqrt 2 is the share of this component in chi_e.
    for (const auto& p : pairs)
      row[p.bucket] = std::max(row[p.bucket], chordal(v[p.i], v[p.k]) / std::numbers::sqrt2);
  });
  report.modulus = cumulative_modulus(per_member, buckets);
  report.verdict = equicontinuity_verdict(report.modulus, report.pair_counts, thresholds);
  return report;
}

CrosscheckReport projection_crosscheck(const FamilySpec& family, const SamplingGrid& grid,
                                       std::vector<double> deltas, std::optional<IndexWindow> window,
                                       const AnalysisOptions& options, const VerdictThresholds& thresholds) {
  CrosscheckReport r;
  r.joint = equicontinuity_modulus(family, grid, deltas, window, options, ModulusMetric::Bichordal, thresholds);
  r.first = component_modulus(family, grid, Component::First, deltas, window, options, thresholds);
  r.second = component_modulus(family, grid, Component::Second, deltas, window, options, thresholds);
  const bool both = r.first.verdict == Verdict::EvidenceForNormal && r.second.verdict == Verdict::EvidenceForNormal;
  r.coherent = (r.joint.verdict == Verdict::EvidenceForNormal) == both;
  return r;
}

std::vector<SeparationCheck> check_separations(const std::vector<LabeledValue>& values) {
  std::vector<SeparationCheck> out;
  const std::size_t n = values.size();
  const std::size_t pairs = n == 2 ? 1 : n;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto& a = values[i];
    const auto& b = values[(i + 1) % n];
    out.push_back({a.label, b.label, separated(a.value, b.value)});
  }
  for (const auto& s : out)
    if (!s.invertible)
      throw Error(Errc::NotInvertibleSeparation, s.first + " - " + s.second + " lies in the null-cone");
  return out;
}

FNTReport fnt_holomorphic(const FamilySpec& family, const Discus& d, const Bicomplexd& alpha,
                          const Bicomplexd& beta, std::optional<IndexWindow> window) {
  const std::vector<LabeledValue> values{{"alpha", alpha}, {"beta", beta}};
  FNTReport report;
  report.separations = check_separations(values);
  const auto members = family.members(window);
  for (const auto& m : members)
    if (!is_holomorphic_on(m.f, d))
      throw Error(Errc::NotHolomorphic, "member " + std::to_string(m.index) + " has a pole in the discus");
  auto result = check_omissions(members, d, values);
  report.omitted = std::move(result.checks);
  report.witness = result.witness;
  report.conclusion = report.witness ? Conclusion::HypothesesViolated : Conclusion::HypothesesSatisfied;
  return report;
}

FNTReport fnt_meromorphic(const FamilySpec& family, const Discus& d, const ExtendedBicomplexd& alpha,
                          const ExtendedBicomplexd& beta, const ExtendedBicomplexd& gamma,
                          std::optional<IndexWindow> window) {
  const std::vector<LabeledValue> values{{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}};
  FNTReport report;
  report.separations = check_separations(values);
  auto result = check_omissions(family.members(window), d, values);
  report.omitted = std::move(result.checks);
  report.witness = result.witness;
  report.conclusion = report.witness ? Conclusion::HypothesesViolated : Conclusion::HypothesesSatisfied;
  return report;
}

PicardReport picard_check(const BicomplexMeromorphic& f, const ExtendedBicomplexd& alpha,
                          const ExtendedBicomplexd& beta, const ExtendedBicomplexd& gamma) {
  const std::vector<LabeledValue> values{{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}};
  PicardReport report;
  report.separations = check_separations(values);
  auto result = check_omissions({{0, f}}, std::nullopt, values);
  report.omitted = std::move(result.checks);
  report.witness = result.witness;
  report.components_constant = f.f1().is_constant() && f.f2().is_constant();
  if (report.witness)
    report.verdict = PicardVerdict::HypothesesViolated;
  else
    report.verdict = report.components_constant ? PicardVerdict::Constant : PicardVerdict::Inconsistent;
  return report;
}

}  // namespace bcx
