#include <gtest/gtest.h>

#include <random>

#include "vq/exact/dense_matrix.hpp"
#include "vq/exact/qseries.hpp"
#include "vq/exact/rational.hpp"

using namespace vq;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(rational(2, 4), rational(1, 2));
  EXPECT_EQ(rational(3, -6), rational(-1, 2));
  EXPECT_EQ(rational(-4, -2), Rational(2));
  EXPECT_EQ(to_string(rational(-6, 4)), "-3/2");
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(ipow(rational(-2, 3), 3), rational(-8, 27));
}

TEST(GaussianRational, Arithmetic) {
  const GaussianRational i = GaussianRational::i();
  EXPECT_EQ(i * i, GaussianRational(Rational(-1)));
  const GaussianRational z(rational(1, 2), rational(3, 4));
  EXPECT_EQ(z * z.conj(), GaussianRational(z.norm2()));
}

TEST(DenseMatrix, HilbertDeterminantAndInverse) {
  RationalMatrix h(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = rational(1, static_cast<long>(i + j + 1));
  EXPECT_EQ(h.determinant(), rational(1, 2160));
  const RationalMatrix inv = h.inverse();
  EXPECT_EQ(inv(0, 0), Rational(9));
  EXPECT_EQ(inv(1, 1), Rational(192));
  EXPECT_EQ(h * inv, RationalMatrix::identity(3));
}

TEST(DenseMatrix, SingularAndShapeErrors) {
  RationalMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  EXPECT_EQ(sgn(m.determinant()), 0);
  EXPECT_THROW(m.inverse(), SingularError);
  EXPECT_THROW(RationalMatrix(2, 3).determinant(), ConfigError);
  EXPECT_THROW(RationalMatrix(2, 3) * RationalMatrix(2, 3), ConfigError);
}

TEST(DenseMatrix, SolveMatchesInverse) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  RationalMatrix m(4, 4);
  do {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = d(rng);
  } while (sgn(m.determinant()) == 0);
  const std::vector<Rational> b{1, 2, 3, 4};
  const std::vector<Rational> x = m.solve(b);
  for (std::size_t i = 0; i < 4; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < 4; ++j) acc += m(i, j) * x[j];
    EXPECT_EQ(acc, b[i]);
  }
}

TEST(QSeries, GeometricSquareHasLinearCoefficients) {
  constexpr int order = 30;
  const QSeries geo = QSeries::from_coefficients(0, std::vector<Rational>(order + 1, Rational(1)), Rational(order));
  const QSeries sq = geo * geo;
  for (int n = 0; n <= order; ++n) EXPECT_EQ(sq.coefficient(Rational(n)), Rational(n + 1)) << n;
  EXPECT_THROW(sq.coefficient(Rational(order + 1)), RangeError);
}

TEST(QSeries, TruncationOfProduct) {
  // (q^(1/2) + O(q^3)) * (q^(-1/3) + O(q^2)) is known to min(3 - 1/3, 2 + 1/2) = 5/2.
  const QSeries a = QSeries::monomial(1, rational(1, 2), Rational(3));
  const QSeries b = QSeries::monomial(1, rational(-1, 3), Rational(2));
  const QSeries p = a * b;
  ASSERT_TRUE(p.truncation());
  EXPECT_EQ(*p.truncation(), rational(5, 2));
  EXPECT_EQ(p.coefficient(rational(1, 6)), Rational(1));
}

TEST(QSeries, DerivationOnPuiseuxTerms) {
  const QSeries a = QSeries::monomial(3, rational(2, 3));
  EXPECT_EQ(a.qderiv(), QSeries::monomial(2, rational(2, 3)));
}

TEST(QSeries, ExactSeriesEquality) {
  const QSeries q = QSeries::monomial(1, 1);
  const QSeries one = QSeries::constant(1);
  EXPECT_EQ((one + q) * (one - q), one - q * q);
  EXPECT_TRUE((q - q).is_zero());
}

TEST(QSeries, AgreementAtSharedOrder) {
  const QSeries a = QSeries::from_coefficients(0, {1, 2, 3}, Rational(2));
  const QSeries b = QSeries::from_coefficients(0, {1, 2, 3, 4}, Rational(3));
  EXPECT_FALSE(a == b);
  EXPECT_TRUE(agree_to_shared_order(a, b));
}

TEST(SeriesDet, ThreeByThreeMatchesCofactorExpansion) {
  const QSeries q = QSeries::monomial(1, 1);
  const QSeries one = QSeries::constant(1);
  const QSeries zero;
  const SeriesMatrix m{{one, q, zero}, {q, one, q}, {zero, q, one}};
  // 1*(1 - q^2) - q*(q - 0) = 1 - 2q^2
  EXPECT_EQ(series_det(m), one - QSeries::monomial(2, 2));
}

TEST(SeriesDet, RejectsNonSquare) {
  const QSeries one = QSeries::constant(1);
  EXPECT_THROW(series_det({{one, one}, {one}}), ConfigError);
}
