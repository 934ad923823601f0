#include <gtest/gtest.h>

#include "bicomplex/extended.hpp"
#include "bicomplex/metric.hpp"
#include "support/generators.hpp"

namespace bcx {
namespace {

using testing::Gen;
using testing::Stratum;

const ExtendedComplexd kInf = ExtendedComplexd::infinity();

TEST(Extended, InfinityIsSymbolic) {
  EXPECT_TRUE(kInf.is_infinite());
  EXPECT_EQ(kInf, kInf);
  EXPECT_NE(kInf, ExtendedComplexd(Complexd(1e308, 0)));
  EXPECT_THROW(kInf.value(), Error);
  EXPECT_THROW(ExtendedBicomplexd(kInf, Complexd(1, 0)).to_bicomplex(), Error);
}

TEST(Extended, Strata) {
  EXPECT_EQ(classify_infinity(ExtendedBicomplexd::infinity()), InfinityStratum::StrongInfinity);
  EXPECT_EQ(classify_infinity(ExtendedBicomplexd(kInf, Complexd(2, 0))), InfinityStratum::P1Infinity);
  EXPECT_EQ(classify_infinity(ExtendedBicomplexd(Complexd(2, 0), kInf)), InfinityStratum::P2Infinity);
  EXPECT_EQ(classify_infinity(ExtendedBicomplexd(Unitsd::j())), InfinityStratum::Finite);
  EXPECT_TRUE(is_weak_infinity(InfinityStratum::P2Infinity));
  EXPECT_FALSE(is_weak_infinity(InfinityStratum::StrongInfinity));

  EXPECT_EQ(classify_zero(ExtendedBicomplexd(Bicomplexd{})), ZeroStratum::Zero);
  EXPECT_EQ(classify_zero(ExtendedBicomplexd(Unitsd::e2())), ZeroStratum::P1Zero);
  EXPECT_EQ(classify_zero(ExtendedBicomplexd(Unitsd::e1())), ZeroStratum::P2Zero);
  EXPECT_EQ(classify_zero(ExtendedBicomplexd(Unitsd::i1())), ZeroStratum::NonZero);
  EXPECT_EQ(to_string(ZeroStratum::P1Zero), "P1Zero");
}

TEST(Extended, InverseSwapsZeroAndInfinity) {
  EXPECT_EQ(extended_inverse(ExtendedBicomplexd(Bicomplexd{})), ExtendedBicomplexd::infinity());
  EXPECT_EQ(extended_inverse(ExtendedBicomplexd::infinity()), ExtendedBicomplexd(Bicomplexd{}));
  // e1 = (1, 0) -> (1, inf), a weak infinity.
  const auto w = extended_inverse(ExtendedBicomplexd(Unitsd::e1()));
  EXPECT_EQ(classify_infinity(w), InfinityStratum::P2Infinity);
  EXPECT_EQ(w.u1(), ExtendedComplexd(Complexd(1, 0)));
}

TEST(Extended, InverseIsInvolutionAndAgreesWithInverse) {
  Gen g(21);
  for (int i = 0; i < 1000; ++i) {
    const ExtendedBicomplexd w = g.extended();
    const ExtendedBicomplexd back = extended_inverse(extended_inverse(w));
    EXPECT_LE(bichordal(w, back), 1e-15);
  }
  for (int i = 0; i < 200; ++i) {
    const Bicomplexd w = Bicomplexd::from_idempotent(g.complex_in_disc(1) + 2.0, g.complex_in_disc(1) - 2.0);
    const Bicomplexd a = inverse(w);
    const Bicomplexd b = extended_inverse(ExtendedBicomplexd(w)).to_bicomplex();
    EXPECT_EQ(a, b);
  }
}

TEST(Extended, StereographicMatchesFormula) {
  Gen g(22);
  for (int i = 0; i < 2000; ++i) {
    const ExtendedComplexd u = g.coin(0.1) ? kInf : ExtendedComplexd(g.complex());
    const Vector3<double> p = stereographic(u);
    const Eigen::Vector3d q = testing::sphere_point_formula(u);
    EXPECT_LE((p - q).norm(), 1e-12);
    // On the sphere x^2 + y^2 + (z - 1/2)^2 = 1/4.
    EXPECT_NEAR((p - Eigen::Vector3d(0, 0, 0.5)).norm(), 0.5, 1e-12);
  }
}

TEST(Extended, SphereEmbedZeroAndInfinity) {
  const SpherePoint6d zero = sphere_embed(ExtendedBicomplexd(Bicomplexd{}));
  const SpherePoint6d inf = sphere_embed(ExtendedBicomplexd::infinity());
  EXPECT_EQ(zero.p1, Eigen::Vector3d(0, 0, 0));
  EXPECT_EQ(zero.p2, Eigen::Vector3d(0, 0, 0));
  EXPECT_EQ(inf.p1, Eigen::Vector3d(0, 0, 1));
  EXPECT_EQ(inf.p2, Eigen::Vector3d(0, 0, 1));
}

TEST(Extended, HugeValuesStayFinite) {
  const Vector3<double> p = stereographic(ExtendedComplexd(Complexd(1e200, -1e200)));
  EXPECT_TRUE(p.allFinite());
  EXPECT_NEAR(p.z(), 1.0, 1e-15);
  const ExtendedBicomplexd w(Complexd(1e300, 0), Complexd(0, 0));
  EXPECT_EQ(classify_infinity(w), InfinityStratum::Finite);
}

}  // namespace
}  // namespace bcx
