#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vq/combinatorics.hpp"

using namespace vq;

TEST(Stirling, MatchesFallingProductExpansion) {
  for (int k = 1; k <= 12; ++k) {
    const std::vector<BigInt> c = oracle::falling_product(k);
    for (int m = 1; m <= k; ++m) EXPECT_EQ(stirling_first(k, m), c[static_cast<std::size_t>(m - 1)]) << k << "," << m;
  }
}

TEST(ElementarySymmetric, SmallCases) {
  const PointSet x{Rational(1), Rational(2), Rational(3)};
  EXPECT_EQ(elementary_symmetric(x, 0), Rational(1));
  EXPECT_EQ(elementary_symmetric(x, 1), Rational(6));
  EXPECT_EQ(elementary_symmetric(x, 2), Rational(11));
  EXPECT_EQ(elementary_symmetric(x, 3), Rational(6));
  EXPECT_THROW(elementary_symmetric(x, 4), RangeError);
  EXPECT_EQ(elementary_symmetric(PointSet{Rational(0), Rational(1), Rational(2)}, 3), Rational(0));
  EXPECT_EQ(esym_omit(x, 2, 2), Rational(3));
}

TEST(Vandermonde, DeterminantAndDiscriminant) {
  const PointSet x{Rational(0), Rational(1), Rational(3)};
  EXPECT_EQ(vandermonde_det(x), Rational(6));
  EXPECT_EQ(discriminant(x), Rational(-36));
  EXPECT_EQ(vandermonde_matrix(x).determinant(), Rational(6));
}

TEST(Vandermonde, SolveRejectsRepeatedNodes) {
  const PointSet x{Rational(1), Rational(1)};
  EXPECT_THROW(vandermonde_solve(x, PointSet{Rational(0), Rational(1)}), SingularError);
}

TEST(Interpolation, AgreesWithLagrangeOracle) {
  for (int k = 2; k <= 12; ++k) {
    const InterpolationCoeffs c = interp_coeffs(k);
    EXPECT_EQ(c.coeffs, oracle::lagrange_step_poly(k)) << k;
  }
}

TEST(Interpolation, SmallValues) {
  const InterpolationCoeffs c3 = interp_coeffs(3);
  EXPECT_EQ(c3.p(1), rational(3, 2));
  EXPECT_EQ(c3.p(2), rational(-1, 2));
  EXPECT_THROW((void)c3.p(3), RangeError);
  EXPECT_THROW(interp_coeffs(1), RangeError);
}

TEST(FloorFormula, ReproducesIntegerDivision) {
  for (int k = 2; k <= 16; ++k)
    for (long n = 0; n <= 300; ++n) ASSERT_EQ(floor_via_formula(n, k), n / k) << n << "/" << k;
}

TEST(RootsOfUnity, IdentityAndDiscriminant) {
  for (int k = 2; k <= 9; ++k) {
    const RootOfUnityCoeffs rc = roots_of_unity_coeff(k);
    for (int j = 1; j < k; ++j) {
      const auto z = rc.zeta[static_cast<std::size_t>(j)];
      EXPECT_LT(std::abs((z - 1.0) * rc.C(j) - z / static_cast<double>(k)), 1e-12);
    }
    const double expected = (k % 2 == 0 ? -1.0 : 1.0) * std::pow(static_cast<double>(k), k);
    EXPECT_NEAR(roots_of_unity_discriminant(k).real(), expected, 1e-9 * std::abs(expected));
  }
}
