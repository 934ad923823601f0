#include <gtest/gtest.h>

#include "bicomplex/algebra.hpp"
#include "bicomplex/error.hpp"
#include "support/generators.hpp"

namespace bcx {
namespace {

using testing::Gen;

void expect_near(const Bicomplexd& a, const Bicomplexd& b, double tol) {
  EXPECT_LE(std::abs(a.u1() - b.u1()), tol) << a << " vs " << b;
  EXPECT_LE(std::abs(a.u2() - b.u2()), tol) << a << " vs " << b;
}

TEST(Algebra, UnitsSatisfyDefiningRelations) {
  const auto one = Unitsd::one();
  EXPECT_EQ(Unitsd::i1() * Unitsd::i1(), -one);
  EXPECT_EQ(Unitsd::i2() * Unitsd::i2(), -one);
  EXPECT_EQ(Unitsd::j() * Unitsd::j(), one);
  EXPECT_EQ(Unitsd::i1() * Unitsd::i2(), Unitsd::j());
  EXPECT_EQ(Unitsd::e1() * Unitsd::e2(), Bicomplexd{});
  EXPECT_EQ(Unitsd::e1() * Unitsd::e1(), Unitsd::e1());
  EXPECT_EQ(Unitsd::e1() + Unitsd::e2(), one);
}

TEST(Algebra, CartesianRoundTrip) {
  const Bicomplexd w = Bicomplexd::from_cartesian({1, 2}, {3, -4});
  EXPECT_NEAR(w.z1().real(), 1, 1e-15);
  EXPECT_NEAR(w.z1().imag(), 2, 1e-15);
  EXPECT_NEAR(w.z2().real(), 3, 1e-15);
  EXPECT_NEAR(w.z2().imag(), -4, 1e-15);
  // P1 = z1 - z2 i1, P2 = z1 + z2 i1.
  EXPECT_NEAR(std::abs(w.u1() - (Complexd(1, 2) - Complexd(3, -4) * Complexd(0, 1))), 0, 1e-15);
  EXPECT_NEAR(std::abs(w.u2() - (Complexd(1, 2) + Complexd(3, -4) * Complexd(0, 1))), 0, 1e-15);
}

TEST(Algebra, ProductMatchesCartesianFormula) {
  Gen g(11);
  for (int i = 0; i < 2000; ++i) {
    const Bicomplexd a = g.bicomplex_bounded(10);
    const Bicomplexd b = g.bicomplex_bounded(10);
    expect_near(a * b, testing::cartesian_product(a, b), 1e-12 * (1 + euclid_norm(a) * euclid_norm(b)));
  }
}

TEST(Algebra, RingAxioms) {
  Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    const Bicomplexd a = g.bicomplex_bounded(5);
    const Bicomplexd b = g.bicomplex_bounded(5);
    const Bicomplexd c = g.bicomplex_bounded(5);
    EXPECT_EQ(a * b, b * a);
    expect_near(a * (b + c), a * b + a * c, 1e-12);
    expect_near((a * b) * c, a * (b * c), 1e-11);
  }
}

TEST(Algebra, ProjectionsAreMultiplicative) {
  Gen g(13);
  for (int i = 0; i < 500; ++i) {
    const Bicomplexd a = g.bicomplex();
    const Bicomplexd b = g.bicomplex();
    EXPECT_EQ(proj(a * b, Component::First), proj(a, Component::First) * proj(b, Component::First));
    EXPECT_EQ(proj(a + b, Component::Second), proj(a, Component::Second) + proj(b, Component::Second));
  }
}

TEST(Algebra, ConjugateAndComplexNorm) {
  const Bicomplexd w = Bicomplexd::from_cartesian({1, 1}, {2, 0});
  const Complexd cn = complex_norm(w);
  // z1^2 + z2^2 = 2i + 4.
  EXPECT_NEAR(cn.real(), 4, 1e-14);
  EXPECT_NEAR(cn.imag(), 2, 1e-14);
  const Bicomplexd ww = w * conj_star(w);
  EXPECT_EQ(ww.u1(), ww.u2());
  EXPECT_NEAR(std::abs(ww.u1() - cn), 0, 1e-14);
  EXPECT_EQ(conj_star(conj_star(w)), w);
}

TEST(Algebra, EuclidNormBothCoordinates) {
  Gen g(14);
  for (int i = 0; i < 500; ++i) {
    const Bicomplexd w = g.bicomplex_bounded(100);
    const double cart = std::sqrt(std::norm(w.z1()) + std::norm(w.z2()));
    EXPECT_NEAR(euclid_norm(w), cart, 1e-12 * (1 + cart));
  }
  EXPECT_DOUBLE_EQ(euclid_norm(Unitsd::e1()), 1 / std::sqrt(2.0));
}

TEST(Algebra, NullConeAndInverse) {
  EXPECT_TRUE(is_null_cone(Unitsd::e1()));
  EXPECT_TRUE(is_null_cone(2.0 * Unitsd::e2()));
  EXPECT_TRUE(is_null_cone(Unitsd::one() + Unitsd::j()));
  EXPECT_FALSE(is_null_cone(Unitsd::i2()));
  EXPECT_THROW(inverse(Unitsd::e1()), Error);
  try {
    inverse(Bicomplexd{});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInvertible);
  }

  Gen g(15);
  for (int i = 0; i < 500; ++i) {
    const Bicomplexd w = Bicomplexd::from_idempotent(g.complex_in_disc(3) + 4.0, g.complex_in_disc(3) - 4.0);
    expect_near(w * inverse(w), Unitsd::one(), 1e-13);
  }
}

TEST(Algebra, HyperbolicNumbers) {
  const Hyperbolicd h{3, 5};
  EXPECT_EQ(re_h(h), 4);
  EXPECT_EQ(h * h, (Hyperbolicd{9, 25}));
  const Bicomplexd b = to_bicomplex(h);
  // 3 e1 + 5 e2 = 4 - j.
  expect_near(b, 4.0 * Unitsd::one() - Unitsd::j(), 1e-15);
  const Hyperbolicd m = j_modulus(Bicomplexd::from_idempotent({3, 4}, {0, -2}));
  EXPECT_EQ(m, (Hyperbolicd{5, 2}));
}

TEST(Algebra, FloatInstantiation) {
  using Bf = Bicomplex<float>;
  const Bf a = Bf::from_cartesian({1.f, 0.f}, {1.f, 0.f});
  const Bf b = a * a;
  EXPECT_NEAR(std::abs(b.z1() - Complex<float>(0.f, 0.f)), 0.f, 1e-6f);
  EXPECT_NEAR(euclid_norm(a), std::sqrt(2.f), 1e-6f);
}

}  // namespace
}  // namespace bcx
