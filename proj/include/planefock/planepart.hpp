#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "planefock/partitions.hpp"

namespace planefock {

/// Raised when a matrix is not a plane partition; carries the 1-based
/// offending cell.
class PlanePartitionError : public std::invalid_argument {
public:
    PlanePartitionError(const std::string& what, int row, int col)
        : std::invalid_argument(what), row_(row), col_(col) {}
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

/// Finite array of positive heights, weakly decreasing along rows and
/// columns; cells outside the stored rows are 0.
class PlanePartition {
public:
    PlanePartition() = default;
    /// Zeros are trimmed; throws PlanePartitionError on a monotonicity violation.
    explicit PlanePartition(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    /// pi(i, j), 1-based; 0 outside the support.
    int at(int i, int j) const;
    int weight() const { return weight_; }
    bool empty() const { return rows_.empty(); }

    /// One row per line, entries separated by single spaces.
    std::string to_text() const;
    /// Blank lines are ignored; throws PlanePartitionError with the offending cell.
    static PlanePartition parse_text(const std::string& text);

    friend bool operator==(const PlanePartition& a, const PlanePartition& b) {
        return a.rows_ == b.rows_;
    }
    friend auto operator<=>(const PlanePartition& a, const PlanePartition& b) {
        if (auto c = a.weight_ <=> b.weight_; c != 0) {
            return c;
        }
        return a.rows_ <=> b.rows_;
    }

private:
    std::vector<std::vector<int>> rows_;
    int weight_ = 0;
};

/// Diagonal slices mu_first, ..., mu_last with empty slices at both ends.
/// The empty plane partition has the single slice mu_0 = empty.
struct SliceChain {
    int first_index = 0;
    std::vector<Partition> slices;

    int last_index() const { return first_index + static_cast<int>(slices.size()) - 1; }
    /// mu_m, empty outside the stored window.
    Partition slice(int m) const;
    /// Checks mu_first < ... < mu_0 > ... > mu_last with empty ends.
    bool is_interlacing_chain() const;

    friend bool operator==(const SliceChain&, const SliceChain&) = default;
};

SliceChain diagonal_slices(const PlanePartition& pi);
/// Throws std::invalid_argument if the chain does not interlace or does not
/// start and end with the empty partition.
PlanePartition from_slices(const SliceChain& chain);

bool is_diagonally_strict(const PlanePartition& pi);

/// Number of cells where a path begins; throws std::invalid_argument if pi
/// is not diagonally strict.
int path_count(const PlanePartition& pi);

/// Oracle caps; enumerations beyond them throw unless an override is given.
inline constexpr int kPlanePartitionOracleCap = 12;
inline constexpr int kStrictPlanePartitionOracleCap = 10;

/// All plane partitions of weight exactly n, sorted. Generated by filling
/// rows directly.
std::vector<PlanePartition> enumerate_pp(int n, int cap = kPlanePartitionOracleCap,
                                         int threads = 1);
/// Same set generated from interlacing slice chains.
std::vector<PlanePartition> enumerate_pp_by_chains(int n, int cap = kPlanePartitionOracleCap);

/// Diagonally strict plane partitions of weight exactly n, sorted.
std::vector<PlanePartition> enumerate_dspp(int n, int cap = kStrictPlanePartitionOracleCap);
/// Same set generated from strict interlacing chains.
std::vector<PlanePartition> enumerate_dspp_by_chains(int n,
                                                     int cap = kStrictPlanePartitionOracleCap);

/// sum over enumerate_dspp(n) of 2^{path_count}.
std::int64_t weighted_dspp_count(int n, int cap = kStrictPlanePartitionOracleCap);

/// {"weight": n, "rows": [[...]], "paths": p}
std::string dspp_to_json(const PlanePartition& pi);

}  // namespace planefock
