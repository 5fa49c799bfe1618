#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace planefock {

/// Weakly decreasing sequence of positive integers; empty is the empty
/// partition. Trailing zeros are never stored.
class Partition {
public:
    Partition() = default;
    /// Drops trailing zeros; throws std::invalid_argument unless the
    /// sequence is weakly decreasing and non-negative.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    /// 1-based part, 0 beyond the length.
    int part(int j) const { return j >= 1 && j <= length() ? parts_[j - 1] : 0; }

    Partition conjugate() const;

    /// "5,4,4,2,2,1"; the empty partition renders as "-".
    std::string to_string() const;
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.weight_ <=> b.weight_; c != 0) {
            return c;
        }
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Strictly decreasing sequence of positive integers.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    /// Number of nonzero parts, n(mu).
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    int part(int j) const { return j >= 1 && j <= length() ? parts_[j - 1] : 0; }
    bool contains(int value) const;

    Partition as_partition() const { return Partition(parts_); }

    std::string to_string() const;
    static StrictPartition parse(const std::string& text);

    friend bool operator==(const StrictPartition& a, const StrictPartition& b) {
        return a.parts_ == b.parts_;
    }
    friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) {
        if (auto c = a.weight_ <=> b.weight_; c != 0) {
            return c;
        }
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Diagonal hook decomposition. arms: m_1 > ... > m_r >= 0 (boxes right of
/// the diagonal in each row); legs: n_1 < ... < n_r < 0, where -n_j is the
/// number of boxes in column j from the diagonal down, diagonal included.
struct FrobeniusCoords {
    std::vector<int> arms;
    std::vector<int> legs;

    friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

FrobeniusCoords to_frobenius(const Partition& mu);
/// Throws std::invalid_argument on malformed coordinate lists.
Partition from_frobenius(const FrobeniusCoords& fc);

/// nu < mu in the interlacing order: mu_j >= nu_j >= mu_{j+1} for all j,
/// with missing parts read as 0.
bool interlaces(const Partition& nu, const Partition& mu);
bool strict_interlaces(const StrictPartition& nu, const StrictPartition& mu);

/// All nu with nu < mu, in canonical sorted order.
std::vector<Partition> enumerate_interlacing(const Partition& mu);
/// All mu with nu < mu and |mu| <= max_weight, sorted.
std::vector<Partition> enumerate_interlaced_by(const Partition& nu, int max_weight);

std::vector<StrictPartition> enumerate_strict_interlacing(const StrictPartition& mu);
std::vector<StrictPartition> enumerate_strict_interlaced_by(const StrictPartition& nu,
                                                            int max_weight);

/// All partitions of exactly n, sorted.
std::vector<Partition> partitions_of(int n);
/// All partitions with weight <= n, sorted by weight then parts.
std::vector<Partition> partitions_up_to(int n);
std::vector<StrictPartition> strict_partitions_of(int n);
std::vector<StrictPartition> strict_partitions_up_to(int n);

}  // namespace planefock
