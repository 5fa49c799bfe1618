#include <gtest/gtest.h>

#include "planefock/exactnum.hpp"

using namespace planefock;

TEST(CoefScalar, Sqrt2SquaresToTwo) {
    const CoefScalar r2 = CoefScalar::sqrt2();
    EXPECT_EQ(r2 * r2, CoefScalar(2));
    EXPECT_EQ((CoefScalar(1) + r2) * (CoefScalar(1) - r2), CoefScalar(-1));
}

TEST(CoefScalar, InverseOfQuadraticSurd) {
    const CoefScalar x(Rational(3, 4), Rational(-1, 2));
    EXPECT_EQ(x * x.inverse(), CoefScalar(1));
    EXPECT_THROW(CoefScalar(0).inverse(), std::domain_error);
}

TEST(CoefScalar, Rendering) {
    EXPECT_EQ(CoefScalar(3).to_string(), "3");
    EXPECT_EQ(CoefScalar(Rational(-1, 2)).to_string(), "-1/2");
    EXPECT_EQ(CoefScalar(0, 2).to_string(), "2*sqrt2");
    EXPECT_EQ(CoefScalar(1, 1).to_string(), "1+sqrt2");
}

TEST(CoefScalar, CanonicalizesFractions) {
    EXPECT_EQ(CoefScalar(Rational(2, 4)), CoefScalar(Rational(1, 2)));
}

TEST(QSeries, DropsTermsAboveCap) {
    QSeries s(4);
    s.add_term(4, 1);
    s.add_term(5, 1);
    EXPECT_EQ(s.terms().size(), 1u);
    EXPECT_EQ(s.coefficient(5), CoefScalar(0));
}

TEST(QSeries, CancellationErasesTerm) {
    QSeries s(4);
    s.add_term(2, 3);
    s.add_term(2, -3);
    EXPECT_TRUE(s.is_zero());
}

TEST(QSeries, HalfIntegerRendering) {
    QSeries s(4);
    s.add_term(0, 1);
    s.add_term(1, 2);
    s.add_term(2, -1);
    EXPECT_EQ(s.to_string(), "1 + 2*q^(1/2) - q");
    EXPECT_EQ(render_half_integer(3), "3/2");
    EXPECT_EQ(render_half_integer(-1), "-1/2");
    EXPECT_EQ(render_half_integer(4), "2");
}

TEST(QSeries, ParseHalfInteger) {
    EXPECT_EQ(parse_half_integer("-1/2"), -1);
    EXPECT_EQ(parse_half_integer("3"), 6);
    EXPECT_EQ(parse_half_integer("1.5"), 3);
}

TEST(QSeries, GeometricInverse) {
    // 1/(1 - q) = 1 + q + q^2 + ...
    QSeries f = QSeries::one(10);
    f.add_term(2, -1);
    const QSeries g = series_inv_unit(f);
    for (int e = 0; e <= 10; e += 2) {
        EXPECT_EQ(g.coefficient(e), CoefScalar(1)) << e;
    }
    EXPECT_EQ(g.coefficient(1), CoefScalar(0));
    EXPECT_EQ(series_mul(f, g), QSeries::one(10));
}

TEST(QSeries, InverseNeedsUnitConstant) {
    QSeries f(4);
    f.add_term(2, 1);
    EXPECT_THROW(series_inv_unit(f), std::domain_error);
}

TEST(QSeries, CapMismatchRejected) {
    EXPECT_THROW(series_mul(QSeries::one(2), QSeries::one(4)), std::invalid_argument);
}

TEST(QSeries, ShiftAllowsNegativeExponents) {
    const QSeries s = QSeries::one(4).shifted(-3);
    EXPECT_EQ(s.coefficient(-3), CoefScalar(1));
    EXPECT_EQ(s.min_exponent2(), -3);
    EXPECT_EQ(QSeries::one(4).shifted(5).is_zero(), true);
}
