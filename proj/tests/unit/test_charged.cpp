#include <gtest/gtest.h>

#include "brute.hpp"
#include "planefock/charged_vertex.hpp"

using namespace planefock;

namespace {

FockVector ket(std::vector<int> parts, int cap2 = 0) {
    return FockVector::basis(Partition(std::move(parts)), cap2);
}

}  // namespace

TEST(Maya, SingleBox) {
    const MayaState s = maya_of(Partition({1}));
    EXPECT_EQ(s.holes, (std::vector<int>{0}));
    EXPECT_EQ(s.particles, (std::vector<int>{-1}));
    EXPECT_EQ(s.charge(), 0);
    EXPECT_EQ(s.weight(), 1);
}

TEST(Maya, RoundTripAndModes) {
    for (const auto& mu : partitions_up_to(9)) {
        const MayaState s = maya_of(mu);
        EXPECT_EQ(s.weight(), mu.weight());
        EXPECT_EQ(partition_of(s), mu);
        const auto fc = to_frobenius(mu.conjugate());
        const auto modes = charged_modes(mu);
        EXPECT_EQ(modes.arms, fc.arms);
        EXPECT_EQ(modes.legs, fc.legs);
    }
}

TEST(Maya, NonzeroChargeHasNoPartition) {
    const FockVector v = apply_psi(0, FockVector::vacuum(0));
    ASSERT_EQ(v.size(), 1u);
    EXPECT_NE(v.terms().begin()->first.charge(), 0);
    EXPECT_FALSE(partition_of(v.terms().begin()->first).has_value());
}

TEST(Fermions, VacuumIsAnnihilated) {
    const FockVector vac = FockVector::vacuum(0);
    for (int m = 0; m <= 4; ++m) {
        EXPECT_TRUE(apply_psi_star(m, vac).is_zero()) << m;
    }
    for (int m = -4; m < 0; ++m) {
        EXPECT_TRUE(apply_psi(m, vac).is_zero()) << m;
    }
}

TEST(Fermions, NilpotentModes) {
    for (const auto& mu : partitions_up_to(5)) {
        const FockVector v = FockVector::basis(mu, 0);
        for (int m = -4; m <= 4; ++m) {
            EXPECT_TRUE(apply_psi(m, apply_psi(m, v)).is_zero());
            EXPECT_TRUE(apply_psi_star(m, apply_psi_star(m, v)).is_zero());
        }
    }
}

TEST(Bosons, LowersSingleBox) {
    EXPECT_EQ(apply_H(1, ket({1})), ket({}).scaled(CoefScalar(-1)));
    EXPECT_THROW(apply_H(0, ket({})), std::invalid_argument);
}

TEST(Bosons, RaisingAndLoweringAreAdjoint) {
    for (const auto& mu : partitions_up_to(5)) {
        for (const auto& nu : partitions_up_to(5)) {
            for (int m = 1; m <= 3; ++m) {
                const QSeries down = apply_H(m, FockVector::basis(mu, 0)).coefficient(nu);
                const QSeries up = apply_H(-m, FockVector::basis(nu, 0)).coefficient(mu);
                EXPECT_EQ(down, up);
            }
        }
    }
}

TEST(Monomials, CanonicalKetReproducesBasis) {
    for (const auto& mu : partitions_up_to(7)) {
        const auto k = ket_monomial(mu);
        EXPECT_EQ(apply_monomial(k.word, FockVector::vacuum(0)).scaled(CoefScalar(k.sign)),
                  FockVector::basis(mu, 0))
            << mu.to_string();
    }
}

TEST(Monomials, BraContractionIsDual) {
    for (const auto& mu : partitions_up_to(5)) {
        for (const auto& nu : partitions_up_to(5)) {
            const QSeries expected = mu == nu ? QSeries::one(0) : QSeries(0);
            EXPECT_EQ(inner_product_by_contraction(mu, FockVector::basis(nu, 0)), expected);
            EXPECT_EQ(inner_product(mu, FockVector::basis(nu, 0)), expected);
        }
    }
}

TEST(Vertex, PlusOnSingleBox) {
    const auto v = gamma_plus_comb(VertexSpec::plus(-1), Partition({1}), 4);
    FockVector expected = ket({1}, 4);
    expected.add(maya_of(Partition()), 1, CoefScalar(1));
    EXPECT_EQ(v, expected);
}

TEST(Vertex, PlusFixesVacuum) {
    for (Route r : {Route::combinatorial, Route::fermionic, Route::exponential}) {
        EXPECT_EQ(gamma_on_basis(r, VertexSpec::plus(-3), Partition(), 0, 6),
                  FockVector::vacuum(6));
    }
}

TEST(Vertex, MinusOnVacuumIsOneRowSum) {
    const auto v = gamma_minus_comb(VertexSpec::minus(1), Partition(), 3, 6);
    FockVector expected(6);
    for (int n = 0; n <= 3; ++n) {
        expected.add(maya_of(n == 0 ? Partition() : Partition({n})), n, CoefScalar(1));
    }
    EXPECT_EQ(v, expected);
}

TEST(Vertex, NegatedSpecFlipsOddPowers) {
    const auto v = gamma_plus_comb(VertexSpec::plus(-1, true), Partition({2}), 4);
    EXPECT_EQ(v.coefficient(Partition({1})), QSeries::monomial(4, 1, CoefScalar(-1)));
    EXPECT_EQ(v.coefficient(Partition()), QSeries::monomial(4, 2, CoefScalar(1)));
}

TEST(Vertex, RoutesAgreeOnSmallStates) {
    for (const auto& mu : partitions_up_to(6)) {
        const auto comb = gamma_plus_comb(VertexSpec::plus(-1), mu, 6);
        EXPECT_EQ(gamma_plus_fermionic(VertexSpec::plus(-1), mu, 6), comb) << mu.to_string();
        EXPECT_EQ(gamma_plus_exp(VertexSpec::plus(-1), mu, 6), comb) << mu.to_string();
    }
    for (const auto& nu : partitions_up_to(4)) {
        const auto comb = gamma_minus_comb(VertexSpec::minus(1), nu, 6, 6);
        EXPECT_EQ(gamma_minus_fermionic(VertexSpec::minus(1), nu, 6, 6), comb);
        EXPECT_EQ(gamma_minus_exp(VertexSpec::minus(1), nu, 6, 6), comb);
    }
}

TEST(Vertex, MinusNeedsPositiveGrading) {
    EXPECT_THROW(gamma_minus_comb(VertexSpec::minus(-1), Partition(), 3, 6),
                 std::invalid_argument);
}

TEST(Vertex, ApplyRejectsChargedStates) {
    const FockVector v = apply_psi(0, FockVector::vacuum(4));
    EXPECT_THROW(apply_gamma(Route::combinatorial, VertexSpec::plus(-1), v, 4),
                 std::invalid_argument);
}

TEST(Commutation, HoldsOnSmallStates) {
    for (const auto& mu : partitions_up_to(3)) {
        EXPECT_TRUE(check_gamma_commutation(-1, 1, mu, 12)) << mu.to_string();
    }
    EXPECT_THROW(gamma_commutation_sides(1, 1, Partition(), 8), std::invalid_argument);
    EXPECT_THROW(gamma_commutation_sides(-1, -1, Partition(), 8), std::invalid_argument);
}

TEST(Series, PlanePartitionGeneratingFunction) {
    const auto expected = brute::macmahon(12);
    const QSeries vertex = compute_sa(12);
    const QSeries product = macmahon_product(12);
    for (int n = 0; n <= 12; ++n) {
        EXPECT_EQ(vertex.coefficient(2 * n), CoefScalar(expected[n])) << n;
        EXPECT_EQ(product.coefficient(2 * n), CoefScalar(expected[n])) << n;
    }
}

TEST(Series, RoutesAgree) {
    const QSeries comb = compute_sa(6);
    EXPECT_EQ(compute_sa(6, Route::fermionic), comb);
    EXPECT_EQ(compute_sa(6, Route::exponential), comb);
    EXPECT_EQ(compute_sa(0), QSeries::one(0));
}
