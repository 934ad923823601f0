#include <gtest/gtest.h>

#include <numbers>

#include "bicomplex/metric.hpp"
#include "support/generators.hpp"

namespace bcx {
namespace {

using testing::Gen;
using testing::Stratum;

const ExtendedComplexd kInf = ExtendedComplexd::infinity();

ExtendedBicomplexd point(Complexd u1, Complexd u2) { return Bicomplexd::from_idempotent(u1, u2); }

TEST(Chordal, ClassicalValues) {
  EXPECT_DOUBLE_EQ(chordal(ExtendedComplexd(0.0), kInf), 1.0);
  EXPECT_NEAR(chordal(Complexd(0, 0), Complexd(1, 0)), 1 / std::numbers::sqrt2, 1e-16);
  EXPECT_EQ(chordal(Complexd(3, 4), Complexd(3, 4)), 0.0);
  EXPECT_EQ(chordal(kInf, kInf), 0.0);
}

TEST(Chordal, MatchesTextbookFormula) {
  Gen g(31);
  for (int i = 0; i < 5000; ++i) {
    const ExtendedComplexd u = g.coin(0.1) ? kInf : ExtendedComplexd(g.complex());
    const ExtendedComplexd v = g.coin(0.1) ? kInf : ExtendedComplexd(g.complex());
    EXPECT_NEAR(chordal(u, v), testing::chordal_formula(u, v), 1e-14) << u << " " << v;
  }
}

TEST(Chordal, NoOverflowForHugeInputs) {
  const Complexd a(1e200, 0);
  const Complexd b(-1e200, 0);
  const double d = chordal(a, b);
  EXPECT_TRUE(std::isfinite(d));
  // Near the north pole: chi(a, b) ~ |1/a - 1/b| = 2e-200.
  EXPECT_NEAR(d / 2e-200, 1.0, 1e-12);
  EXPECT_NEAR(chordal(ExtendedComplexd(a), kInf), 1e-200, 1e-212);
}

TEST(Bichordal, ExampleValues) {
  const ExtendedBicomplexd zero = Bicomplexd{};
  const ExtendedBicomplexd z = point({1, 2}, {2, 3});
  const ExtendedBicomplexd w = point({1, 1}, {3, 3});
  const double cz = bichordal(zero, z);
  const double cw = bichordal(zero, w);
  EXPECT_NEAR(cz * cz, 37.0 / 42.0, 1e-12);
  EXPECT_NEAR(cw * cw, 46.0 / 57.0, 1e-12);
  EXPECT_GT(cz, cw);
  EXPECT_EQ(bichordal(zero, ExtendedBicomplexd::infinity()), 1.0);
  EXPECT_EQ(bichordal(z, z), 0.0);
}

TEST(Bichordal, SymmetryIsExact) {
  Gen g(32);
  for (int i = 0; i < 5000; ++i) {
    const auto a = g.extended();
    const auto b = g.extended();
    EXPECT_EQ(bichordal(a, b), bichordal(b, a));
  }
}

TEST(Hyperchordal, RealPartOfSquareIsBichordalSquared) {
  const ExtendedBicomplexd zero = Bicomplexd{};
  const Hyperbolicd h = hyperchordal(zero, ExtendedBicomplexd::infinity());
  EXPECT_EQ(h, (Hyperbolicd{1, 1}));
  const Hyperbolicd hz = hyperchordal(zero, point({1, 2}, {2, 3}));
  EXPECT_NEAR(re_h(hz * hz), 37.0 / 42.0, 1e-12);
}

TEST(LowerBound, KnownSides) {
  const auto same = lower_bound_check(Unitsd::j(), Unitsd::j());
  EXPECT_EQ(same.lhs, 0.0);
  EXPECT_EQ(same.rhs, 0.0);
  const auto s = lower_bound_check(Bicomplexd{}, Unitsd::one());
  EXPECT_NEAR(s.lhs, 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.rhs, 1 / std::sqrt(3.0), 1e-15);
  EXPECT_GE(s.lhs, s.rhs);
}

TEST(NormBound, ExamplesAndPrecondition) {
  const Bicomplexd z39 = Bicomplexd::from_idempotent({1, 2}, {2, 3});
  const Bicomplexd w39 = Bicomplexd::from_idempotent({1, 1}, {3, 3});
  EXPECT_NEAR(euclid_norm(z39), 3.0, 1e-15);
  EXPECT_NEAR(euclid_norm(w39), std::sqrt(10.0), 1e-15);
  EXPECT_TRUE(norm_bound_check(z39, w39));
  EXPECT_TRUE(norm_bound_check(Bicomplexd{}, w39));
  try {
    norm_bound_check(w39, z39);
    FAIL() << "expected PreconditionViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionViolation);
  }
}

TEST(Metric, FloatInstantiation) {
  const ExtendedBicomplex<float> a = Bicomplex<float>{};
  const ExtendedBicomplex<float> b = Bicomplex<float>::from_idempotent({1.f, 2.f}, {2.f, 3.f});
  const float c = bichordal(a, b);
  EXPECT_NEAR(c * c, 37.f / 42.f, 1e-6f);
}

}  // namespace
}  // namespace bcx
