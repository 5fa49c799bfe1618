#include <gtest/gtest.h>

#include "brute.hpp"
#include "planefock/neutral_vertex.hpp"

using namespace planefock;

namespace {

const CoefScalar kSqrt2 = CoefScalar::sqrt2();

NeutralVector sket(std::vector<int> parts, int cap2 = 0) {
    return NeutralVector::basis(StrictPartition(std::move(parts)), cap2);
}

}  // namespace

TEST(HalfMaya, OddLengthGetsZeroSite) {
    EXPECT_EQ(half_maya_of(StrictPartition({3})).whites, (std::vector<int>{0, 3}));
    EXPECT_EQ(half_maya_of(StrictPartition({3, 1})).whites, (std::vector<int>{1, 3}));
    EXPECT_EQ(neutral_modes(StrictPartition({4, 2, 1})), (std::vector<int>{4, 2, 1, 0}));
    EXPECT_EQ(neutral_alpha(StrictPartition({2})), kSqrt2);
    EXPECT_EQ(neutral_alpha(StrictPartition({2, 1})), CoefScalar(1));
}

TEST(HalfMaya, RoundTrip) {
    for (const auto& mu : strict_partitions_up_to(12)) {
        const HalfMaya s = half_maya_of(mu);
        EXPECT_EQ(s.weight(), mu.weight());
        EXPECT_EQ(strict_partition_of(s), mu);
    }
    EXPECT_FALSE(strict_partition_of(HalfMaya{{2}}).has_value());
}

TEST(Phi, ZeroModeSquaresToHalf) {
    for (const auto& mu : strict_partitions_up_to(5)) {
        const NeutralVector v = NeutralVector::basis(mu, 0);
        EXPECT_EQ(apply_phi(0, apply_phi(0, v)), v.scaled(CoefScalar(Rational(1, 2))));
    }
}

TEST(Phi, NegativeModesKillVacuum) {
    for (int m = -4; m < 0; ++m) {
        EXPECT_TRUE(apply_phi(m, NeutralVector::vacuum(0)).is_zero()) << m;
    }
}

TEST(Phi, CanonicalKetReproducesBasis) {
    for (const auto& mu : strict_partitions_up_to(9)) {
        const auto k = neutral_ket_monomial(mu);
        EXPECT_EQ(apply_phi_monomial(k.word, NeutralVector::vacuum(0)).scaled(k.factor),
                  NeutralVector::basis(mu, 0))
            << mu.to_string();
    }
}

TEST(Phi, BraContractionIsDual) {
    for (const auto& mu : strict_partitions_up_to(7)) {
        for (const auto& nu : strict_partitions_up_to(7)) {
            const QSeries expected = mu == nu ? QSeries::one(0) : QSeries(0);
            EXPECT_EQ(neutral_inner_by_contraction(mu, NeutralVector::basis(nu, 0)), expected);
        }
    }
}

TEST(Lambda, EvenModeRejected) {
    EXPECT_THROW(apply_lambda(2, NeutralVector::vacuum(0)), std::invalid_argument);
}

TEST(Lambda, VacuumAnnihilatedByLowering) {
    for (int m : {1, 3, 5}) {
        EXPECT_TRUE(apply_lambda(m, NeutralVector::vacuum(0)).is_zero());
    }
}

TEST(VertexHat, PlusOnSingleBox) {
    // z = q^(-1/2): |1> - sqrt2 q^(1/2) |0>
    const auto v = gamma_hat_plus_comb(NeutralVertexSpec::plus(-1), StrictPartition({1}), 4);
    NeutralVector expected = sket({1}, 4);
    expected.add(half_maya_of(StrictPartition()), 1, -kSqrt2);
    EXPECT_EQ(v, expected);
}

TEST(VertexHat, PlusOnTwo) {
    const auto v = gamma_hat_plus_comb(NeutralVertexSpec::plus(-1), StrictPartition({2}), 4);
    EXPECT_EQ(v.coefficient(StrictPartition({2})), QSeries::one(4));
    EXPECT_EQ(v.coefficient(StrictPartition({1})), QSeries::monomial(4, 1, CoefScalar(2)));
    EXPECT_EQ(v.coefficient(StrictPartition()), QSeries::monomial(4, 2, -kSqrt2));
}

TEST(VertexHat, MinusMatrixElementOnVacuum) {
    EXPECT_EQ(gamma_hat_minus_element(NeutralVertexSpec::minus(1), StrictPartition({1}),
                                      StrictPartition(), 4),
              QSeries::monomial(4, 1, -kSqrt2));
}

TEST(VertexHat, ElementVanishesWithoutInterlacing) {
    EXPECT_TRUE(gamma_hat_plus_element(NeutralVertexSpec::plus(-1), StrictPartition({3}),
                                       StrictPartition({2}), 8)
                    .is_zero());
}

TEST(VertexHat, RoutesAgreeOnSmallStates) {
    for (const auto& mu : strict_partitions_up_to(7)) {
        const auto spec = NeutralVertexSpec::plus(-1);
        const auto comb = gamma_hat_plus_comb(spec, mu, 8);
        EXPECT_EQ(gamma_hat_plus_fermionic(spec, mu, 8), comb) << mu.to_string();
        EXPECT_EQ(gamma_hat_plus_exp(spec, mu, 8), comb) << mu.to_string();
    }
    for (const auto& nu : strict_partitions_up_to(4)) {
        const auto spec = NeutralVertexSpec::minus(1);
        const auto comb = gamma_hat_minus_comb(spec, nu, 6, 6);
        EXPECT_EQ(gamma_hat_minus_fermionic(spec, nu, 6, 6), comb) << nu.to_string();
        EXPECT_EQ(gamma_hat_minus_exp(spec, nu, 6, 6), comb) << nu.to_string();
    }
}

TEST(VertexHat, InverseAtOppositeArgument) {
    EXPECT_TRUE(check_gamma_hat_inverse(NeutralVertexSpec::plus(-1), 6));
    EXPECT_TRUE(check_gamma_hat_inverse(NeutralVertexSpec::minus(1), 6));
}

TEST(VertexHat, ConjugationOfModes) {
    for (int j = -2; j <= 2; ++j) {
        const auto plus = gamma_hat_plus_conjugation(-1, j, StrictPartition({2, 1}), 20);
        EXPECT_EQ(plus.lhs, plus.rhs) << j;
        const auto minus = gamma_hat_minus_conjugation(1, j, StrictPartition({1}), 5);
        EXPECT_EQ(minus.lhs, minus.rhs) << j;
    }
    EXPECT_THROW(gamma_hat_plus_conjugation(1, 0, StrictPartition(), 4), std::invalid_argument);
}

TEST(VertexHat, Commutation) {
    for (const auto& mu : strict_partitions_up_to(3)) {
        EXPECT_TRUE(check_gamma_hat_commutation(-1, 1, mu, 12)) << mu.to_string();
    }
}

TEST(Series, StrictGeneratingFunction) {
    const auto expected = brute::strict_product(10);
    const QSeries vertex = compute_sb(10);
    const QSeries product = product_b(10);
    for (int n = 0; n <= 10; ++n) {
        EXPECT_EQ(vertex.coefficient(2 * n), CoefScalar(expected[n])) << n;
        EXPECT_EQ(product.coefficient(2 * n), CoefScalar(expected[n])) << n;
        EXPECT_EQ(weighted_dspp_count(n), expected[n]) << n;
    }
    const long first[] = {1, 2, 6, 16, 38};
    for (int n = 0; n < 5; ++n) {
        EXPECT_EQ(vertex.coefficient(2 * n), CoefScalar(first[n]));
    }
}

TEST(Series, StrictRoutesAgree) {
    const QSeries comb = compute_sb(5);
    EXPECT_EQ(compute_sb(5, Route::fermionic), comb);
    EXPECT_EQ(compute_sb(5, Route::exponential), comb);
}

TEST(ChainWeight, PowerOfTwoPerPath) {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& pi : enumerate_dspp(n)) {
            const int cap2 = 2 * n;
            EXPECT_EQ(chain_weight(pi),
                      QSeries::monomial(cap2, cap2, CoefScalar(1L << brute::components(pi.rows()))))
                << pi.to_text();
        }
    }
    EXPECT_THROW(chain_weight(PlanePartition(std::vector<std::vector<int>>{{1, 1}, {1, 1}})),
                 std::invalid_argument);
}
