#include <gtest/gtest.h>

#include "planefock/partitions.hpp"

using namespace planefock;

TEST(Partition, RejectsIncreasingParts) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
    EXPECT_EQ(Partition({3, 1, 0, 0}).parts(), (std::vector<int>{3, 1}));
}

TEST(Partition, ParseAndRender) {
    EXPECT_EQ(Partition::parse("5,4,4,2,2,1").weight(), 18);
    EXPECT_EQ(Partition::parse("-"), Partition());
    EXPECT_EQ(Partition().to_string(), "-");
    EXPECT_EQ(Partition({3, 1}).to_string(), "3,1");
}

TEST(Partition, ConjugateIsInvolution) {
    for (const auto& mu : partitions_up_to(9)) {
        EXPECT_EQ(mu.conjugate().conjugate(), mu);
        EXPECT_EQ(mu.conjugate().weight(), mu.weight());
    }
    EXPECT_EQ(Partition({4, 2, 1}).conjugate(), Partition({3, 2, 1, 1}));
}

TEST(Frobenius, WorkedExample) {
    const auto fc = to_frobenius(Partition({5, 4, 4, 2, 2, 1}));
    EXPECT_EQ(fc.arms, (std::vector<int>{4, 2, 1}));
    EXPECT_EQ(fc.legs, (std::vector<int>{-6, -4, -1}));
}

TEST(Frobenius, EmptyAndSingleBox) {
    EXPECT_TRUE(to_frobenius(Partition()).arms.empty());
    const auto fc = to_frobenius(Partition({1}));
    EXPECT_EQ(fc.arms, (std::vector<int>{0}));
    EXPECT_EQ(fc.legs, (std::vector<int>{-1}));
}

TEST(Frobenius, RoundTripAndWeight) {
    for (const auto& mu : partitions_up_to(10)) {
        const auto fc = to_frobenius(mu);
        EXPECT_EQ(from_frobenius(fc), mu);
        int w = 0;
        for (std::size_t k = 0; k < fc.arms.size(); ++k) {
            w += fc.arms[k] - fc.legs[k];
        }
        EXPECT_EQ(w, mu.weight()) << mu.to_string();
    }
}

TEST(Frobenius, MalformedRejected) {
    EXPECT_THROW(from_frobenius({{1, 2}, {-2, -1}}), std::invalid_argument);
    EXPECT_THROW(from_frobenius({{1}, {}}), std::invalid_argument);
}

TEST(Interlacing, Definition) {
    EXPECT_TRUE(interlaces(Partition({2, 1}), Partition({3, 1})));
    EXPECT_TRUE(interlaces(Partition({3}), Partition({3, 1})));
    EXPECT_FALSE(interlaces(Partition({2, 2}), Partition({3, 1})));
    EXPECT_TRUE(interlaces(Partition(), Partition({5})));
    EXPECT_FALSE(interlaces(Partition(), Partition({1, 1})));
}

TEST(Interlacing, EnumerationMatchesFilter) {
    for (const auto& mu : partitions_up_to(7)) {
        std::vector<Partition> expected;
        for (const auto& nu : partitions_up_to(mu.weight())) {
            if (interlaces(nu, mu)) {
                expected.push_back(nu);
            }
        }
        EXPECT_EQ(enumerate_interlacing(mu), expected) << mu.to_string();
    }
    for (const auto& nu : partitions_up_to(4)) {
        std::vector<Partition> expected;
        for (const auto& mu : partitions_up_to(7)) {
            if (interlaces(nu, mu)) {
                expected.push_back(mu);
            }
        }
        EXPECT_EQ(enumerate_interlaced_by(nu, 7), expected) << nu.to_string();
    }
}

TEST(Interlacing, StrictEnumerationMatchesFilter) {
    for (const auto& mu : strict_partitions_up_to(9)) {
        std::vector<StrictPartition> expected;
        for (const auto& nu : strict_partitions_up_to(mu.weight())) {
            if (strict_interlaces(nu, mu)) {
                expected.push_back(nu);
            }
        }
        EXPECT_EQ(enumerate_strict_interlacing(mu), expected) << mu.to_string();
    }
}

TEST(Enumeration, PartitionCounts) {
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    const int q[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
    for (int n = 0; n <= 10; ++n) {
        EXPECT_EQ(static_cast<int>(partitions_of(n).size()), p[n]);
        EXPECT_EQ(static_cast<int>(strict_partitions_of(n).size()), q[n]);
    }
}

TEST(StrictPartition, RejectsRepeats) {
    EXPECT_THROW(StrictPartition({2, 2}), std::invalid_argument);
    EXPECT_TRUE(StrictPartition({4, 1}).contains(1));
    EXPECT_FALSE(StrictPartition({4, 1}).contains(2));
}
