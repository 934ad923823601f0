#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "bicomplex/polynomial.hpp"
#include "support/generators.hpp"

namespace bcx {
namespace {

using P = ComplexPolynomiald;

TEST(Polynomial, TrimsAndReportsDegree) {
  EXPECT_EQ(P{}.degree(), -1);
  EXPECT_TRUE(P({Complexd(0, 0), Complexd(0, 0)}).is_zero());
  EXPECT_EQ(P({Complexd(1, 0), Complexd(2, 0), Complexd(0, 0)}).degree(), 1);
  EXPECT_EQ(P::monomial(5).degree(), 5);
  EXPECT_EQ(P::monomial(3, {2, 0}).leading(), Complexd(2, 0));
}

TEST(Polynomial, ArithmeticAndEvaluation) {
  const P p{Complexd(1, 0), Complexd(1, 0)};   // 1 + z
  const P q{Complexd(-1, 0), Complexd(1, 0)};  // -1 + z
  const P pq = p * q;                          // z^2 - 1
  EXPECT_EQ(pq.degree(), 2);
  EXPECT_EQ(pq(Complexd(3, 0)), Complexd(8, 0));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(pq.derivative(), (P{Complexd(0, 0), Complexd(2, 0)}));
  EXPECT_EQ(pq.deflate({1, 0}), p);
}

TEST(Polynomial, TrimmedBelow) {
  const P p{Complexd(1, 0), Complexd(2, 0), Complexd(1e-14, 0)};
  EXPECT_EQ(p.trimmed_below(1e-12).degree(), 1);
  EXPECT_EQ(p.trimmed_below(1e-16).degree(), 2);
}

TEST(Roots, RootsOfUnityScaled) {
  for (int n : {1, 2, 5, 17, 64}) {
    const P p = P::monomial(n) - P::constant({2, 0});
    const auto roots = p.roots();
    ASSERT_EQ(roots.size(), static_cast<std::size_t>(n));
    for (const auto& r : roots) {
      EXPECT_EQ(r.multiplicity, 1);
      EXPECT_NEAR(std::abs(r.value), std::pow(2.0, 1.0 / n), 1e-12);
      EXPECT_LE(std::abs(p(r.value)), 1e-12 * 4);
    }
  }
}

TEST(Roots, ZeroRootsAreExact) {
  const P p = P::monomial(4) * P{Complexd(-3, 0), Complexd(1, 0)};
  const auto roots = p.roots();
  ASSERT_EQ(roots.size(), 2u);
  const auto zero = std::find_if(roots.begin(), roots.end(), [](const Rootd& r) { return r.value == Complexd(0, 0); });
  ASSERT_NE(zero, roots.end());
  EXPECT_EQ(zero->multiplicity, 4);
}

TEST(Roots, MultiplicityClustering) {
  // (z - 1 - i)^2 (z + 2)
  const P a{Complexd(-1, -1), Complexd(1, 0)};
  const P p = a * a * P{Complexd(2, 0), Complexd(1, 0)};
  const auto roots = p.roots();
  ASSERT_EQ(roots.size(), 2u);
  int total = 0;
  for (const auto& r : roots) {
    total += r.multiplicity;
    if (r.multiplicity == 2) EXPECT_LE(std::abs(r.value - Complexd(1, 1)), 1e-7);
  }
  EXPECT_EQ(total, 3);
}

TEST(Roots, RandomPolynomialsHaveSmallResiduals) {
  testing::Gen g(41);
  for (int t = 0; t < 200; ++t) {
    const int n = g.integer(1, 12);
    std::vector<Complexd> c;
    for (int i = 0; i <= n; ++i) c.push_back(g.complex_in_disc(3));
    c.back() += Complexd(1, 0);
    const P p(c);
    int total = 0;
    for (const auto& r : p.roots()) {
      total += r.multiplicity;
      const double scale = p.max_abs_coefficient() * std::pow(1 + std::abs(r.value), p.degree());
      EXPECT_LE(std::abs(p(r.value)), 1e-9 * scale);
    }
    EXPECT_EQ(total, p.degree());
  }
}

TEST(Roots, CoincidenceTolerance) {
  EXPECT_TRUE(roots_coincide(Complexd(1, 0), Complexd(1 + 1e-10, 0)));
  EXPECT_FALSE(roots_coincide(Complexd(1, 0), Complexd(1 + 1e-6, 0)));
  EXPECT_TRUE(roots_coincide(Complexd(1e6, 0), Complexd(1e6 + 1e-4, 0)));
}

}  // namespace
}  // namespace bcx
