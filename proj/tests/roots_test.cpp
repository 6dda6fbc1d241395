#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gcdft/roots.hpp"

namespace gcdft {
namespace {

double nearest_root(const RootSet& rs, std::complex<double> z) {
  double best = INFINITY;
  for (const auto& r : rs.roots) best = std::min(best, std::abs(r - z));
  return best;
}

TEST(FindRoots, Quadratics) {
  const RootSet a = find_roots(PolyZ{-1, 0, 1});
  ASSERT_EQ(a.roots.size(), 2u);
  EXPECT_NEAR(a.roots[0].real(), -1.0, 1e-12);
  EXPECT_NEAR(a.roots[1].real(), 1.0, 1e-12);

  const RootSet b = find_roots(PolyZ{1, 0, 1});
  ASSERT_EQ(b.roots.size(), 2u);
  EXPECT_LT(nearest_root(b, {0, 1}), 1e-12);
  EXPECT_LT(nearest_root(b, {0, -1}), 1e-12);

  const RootSet c = find_roots(poly_p(2));
  EXPECT_LT(nearest_root(c, {-2 + std::sqrt(3.0), 0}), 1e-12);
  EXPECT_LT(nearest_root(c, {-2 - std::sqrt(3.0), 0}), 1e-12);
}

TEST(FindRoots, Linear) {
  const RootSet r = find_roots(PolyZ{3, 2});
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_NEAR(r.roots[0].real(), -1.5, 1e-14);
}

TEST(FindRoots, RejectsConstants) {
  EXPECT_THROW(find_roots(PolyZ{5}), std::invalid_argument);
  EXPECT_THROW(find_roots(PolyZ{}), std::invalid_argument);
  EXPECT_THROW(find_roots(PolyZ{1, 1}, 0.0), std::invalid_argument);
}

TEST(FindRoots, PolyP37) {
  const PolyZ p = poly_p(37);
  const RootSet rs = find_roots(p, kDefaultRootTolerance, "p[37]");
  ASSERT_EQ(rs.roots.size(), 72u);
  ASSERT_EQ(rs.residuals.size(), 72u);
  const double bound = 1e-8 * p.abs_coeff_sum().get_d();
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    EXPECT_LT(rs.residuals[i], bound);
    EXPECT_LT(nearest_root(rs, std::conj(rs.roots[i])), 1e-8);
  }
  EXPECT_EQ(rs.poly_id, "p[37]");
}

TEST(FindRoots, SelfReciprocalRootsComeInInversePairs) {
  for (std::uint64_t a = 2; a <= 40; ++a) {
    const RootSet rs = find_roots(poly_p(a));
    for (const auto& z : rs.roots) {
      const std::complex<double> inv = 1.0 / z;
      ASSERT_LT(nearest_root(rs, inv), 1e-6 * std::max(1.0, std::abs(inv))) << a;
    }
  }
}

TEST(FindRoots, ConjugatePairsForQ) {
  for (std::uint64_t a = 1; a <= 20; ++a) {
    const RootSet rs = find_roots(poly_q(a));
    ASSERT_EQ(rs.roots.size(), 4 * a - 2);
    for (const auto& z : rs.roots) ASSERT_LT(nearest_root(rs, std::conj(z)), 1e-7) << a;
  }
}

TEST(FindRoots, RootsOutsideUnitDiskConverge) {
  // p[10] has a real root near -3.64; rounding it to double alone leaves
  // |p(z)| around 1e-7.
  const RootSet rs = find_roots(poly_p(10));
  ASSERT_EQ(rs.roots.size(), 18u);
  EXPECT_LT(nearest_root(rs, {-3.6367626256291792, 0}), 1e-12);
  for (std::uint64_t a = 2; a <= 60; ++a) {
    EXPECT_EQ(find_roots(poly_p(a)).roots.size(), 2 * a - 2) << a;
    EXPECT_EQ(find_roots(poly_q(a)).roots.size(), 4 * a - 2) << a;
  }
}

TEST(FindRoots, Deterministic) {
  const RootSet a = find_roots(poly_q(9));
  const RootSet b = find_roots(poly_q(9));
  EXPECT_EQ(a.roots, b.roots);
}

TEST(UnityDistances, Examples) {
  RootSet rs = find_roots(PolyZ{1, 0, 1});
  rs = unity_distances(std::move(rs), 4, UnityTarget::kRootsOfUnity);
  EXPECT_EQ(rs.reference_order, 4u);
  ASSERT_EQ(rs.distances.size(), 2u);
  for (double d : rs.distances) EXPECT_LT(d, 1e-12);

  RootSet minus = unity_distances(find_roots(PolyZ{1, 0, 1}), 1, UnityTarget::kRootsOfMinusOne);
  for (double d : minus.distances) EXPECT_NEAR(d, std::sqrt(2.0), 1e-12);

  RootSet unity = unity_distances(find_roots(PolyZ{-1, 0, 1}), 2, UnityTarget::kRootsOfMinusOne);
  for (double d : unity.distances) EXPECT_NEAR(d, std::sqrt(2.0), 1e-12);

  EXPECT_THROW(unity_distances(find_roots(PolyZ{1, 1}), 0, UnityTarget::kRootsOfUnity),
               std::invalid_argument);
  EXPECT_EQ(parse_unity_target("minus-one"), UnityTarget::kRootsOfMinusOne);
  EXPECT_THROW(parse_unity_target("two"), std::invalid_argument);
}

}  // namespace
}  // namespace gcdft
