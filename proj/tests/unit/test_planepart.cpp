#include <gtest/gtest.h>

#include "brute.hpp"
#include "json.hpp"
#include "planefock/planepart.hpp"

using namespace planefock;

namespace {

using Rows = std::vector<std::vector<int>>;

const Rows kSlicedFigure{{4, 2, 1, 1, 1}, {3, 2, 1, 1}, {2, 1, 1}, {1}};
const Rows kPathFigure{{4, 2, 1, 1, 1}, {3, 2, 1}, {2, 1, 1}, {1}};

}  // namespace

TEST(PlanePartition, ValidatesMonotonicity) {
    try {
        PlanePartition(Rows{{1, 2}});
        FAIL() << "row increase accepted";
    } catch (const PlanePartitionError& e) {
        EXPECT_EQ(e.row(), 1);
        EXPECT_EQ(e.col(), 2);
    }
    try {
        PlanePartition(Rows{{2, 1}, {1, 2}});
        FAIL() << "column increase accepted";
    } catch (const PlanePartitionError& e) {
        EXPECT_EQ(e.row(), 2);
        EXPECT_EQ(e.col(), 2);
    }
}

TEST(PlanePartition, TextRoundTrip) {
    const PlanePartition pi(kSlicedFigure);
    EXPECT_EQ(PlanePartition::parse_text(pi.to_text()), pi);
    EXPECT_EQ(PlanePartition::parse_text("\n3 1\n\n1\n"), PlanePartition(Rows{{3, 1}, {1}}));
    EXPECT_THROW(PlanePartition::parse_text("1 2\n"), PlanePartitionError);
}

TEST(Slices, SlicedFigure) {
    const auto chain = diagonal_slices(PlanePartition(kSlicedFigure));
    EXPECT_EQ(chain.slice(-3), Partition({1}));
    EXPECT_EQ(chain.slice(-2), Partition({2}));
    EXPECT_EQ(chain.slice(-1), Partition({3, 1}));
    EXPECT_EQ(chain.slice(0), Partition({4, 2, 1}));
    EXPECT_EQ(chain.slice(1), Partition({2, 1}));
    EXPECT_EQ(chain.slice(2), Partition({1, 1}));
    EXPECT_EQ(chain.slice(3), Partition({1}));
    EXPECT_EQ(chain.slice(4), Partition({1}));
    EXPECT_TRUE(chain.slice(5).empty());
    EXPECT_TRUE(chain.slice(-4).empty());
    EXPECT_TRUE(chain.is_interlacing_chain());
}

TEST(Slices, EmptyPlanePartition) {
    const auto chain = diagonal_slices(PlanePartition());
    EXPECT_EQ(chain.first_index, 0);
    EXPECT_EQ(chain.slices.size(), 1u);
    EXPECT_EQ(from_slices(chain), PlanePartition());
}

TEST(Slices, BrokenChainRejected) {
    SliceChain chain;
    chain.first_index = -1;
    chain.slices = {Partition(), Partition({1, 1}), Partition()};
    EXPECT_THROW(from_slices(chain), std::invalid_argument);
}

TEST(Slices, RoundTripOverAllSmallPlanePartitions) {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& pi : enumerate_pp(n)) {
            EXPECT_EQ(from_slices(diagonal_slices(pi)), pi);
        }
    }
}

TEST(Paths, PathFigure) {
    const PlanePartition pi(kPathFigure);
    EXPECT_TRUE(is_diagonally_strict(pi));
    EXPECT_EQ(pi.weight(), 20);
    EXPECT_EQ(path_count(pi), 6);
    EXPECT_EQ(brute::components(kPathFigure), 6);
}

TEST(Paths, NonStrictRejected) {
    const PlanePartition pi(Rows{{1, 1}, {1, 1}});
    EXPECT_FALSE(is_diagonally_strict(pi));
    EXPECT_THROW(path_count(pi), std::invalid_argument);
    EXPECT_FALSE(is_diagonally_strict(PlanePartition(kSlicedFigure)));
}

TEST(Paths, AgreeWithConnectedComponents) {
    for (int n = 0; n <= 9; ++n) {
        for (const auto& pi : enumerate_dspp(n)) {
            EXPECT_EQ(path_count(pi), brute::components(pi.rows())) << pi.to_text();
        }
    }
}

TEST(Enumeration, PlanePartitionCountsMatchBruteForce) {
    const int frozen[] = {1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859, 1479};
    for (int n = 0; n <= 12; ++n) {
        const auto list = enumerate_pp(n, kPlanePartitionOracleCap, 4);
        EXPECT_EQ(static_cast<int>(list.size()), frozen[n]);
        if (n <= 9) {
            auto grids = brute::plane_partitions(n);
            std::vector<PlanePartition> expected;
            for (auto& g : grids) {
                expected.emplace_back(std::move(g));
            }
            std::sort(expected.begin(), expected.end());
            EXPECT_EQ(list, expected) << n;
        }
    }
}

TEST(Enumeration, ChainGenerationMatchesRowFilling) {
    for (int n = 0; n <= 9; ++n) {
        EXPECT_EQ(enumerate_pp_by_chains(n), enumerate_pp(n)) << n;
        EXPECT_EQ(enumerate_dspp_by_chains(n), enumerate_dspp(n)) << n;
    }
}

TEST(Enumeration, StrictFilterMatchesBruteForce) {
    for (int n = 0; n <= 9; ++n) {
        std::int64_t weighted = 0;
        std::size_t count = 0;
        for (const auto& g : brute::plane_partitions(n)) {
            if (brute::diagonally_strict(g)) {
                ++count;
                weighted += std::int64_t{1} << brute::components(g);
            }
        }
        EXPECT_EQ(enumerate_dspp(n).size(), count) << n;
        EXPECT_EQ(weighted_dspp_count(n), weighted) << n;
    }
}

TEST(Enumeration, CapsEnforced) {
    EXPECT_THROW(enumerate_pp(kPlanePartitionOracleCap + 1), std::out_of_range);
    EXPECT_THROW(enumerate_dspp(kStrictPlanePartitionOracleCap + 1), std::out_of_range);
    EXPECT_THROW(enumerate_pp(-1), std::invalid_argument);
    EXPECT_EQ(enumerate_pp(13, 13).size(), 2485u);
}

TEST(Enumeration, ThreadCountDoesNotChangeOrder) {
    EXPECT_EQ(enumerate_pp(10, kPlanePartitionOracleCap, 1),
              enumerate_pp(10, kPlanePartitionOracleCap, 7));
}

TEST(Json, StrictListingShape) {
    const auto j = nlohmann::json::parse(dspp_to_json(PlanePartition(kPathFigure)));
    EXPECT_EQ(j["weight"], 20);
    EXPECT_EQ(j["paths"], 6);
    EXPECT_EQ(j["rows"][1], nlohmann::json::array({3, 2, 1}));
}
