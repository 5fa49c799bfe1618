#include "planefock/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace planefock {

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text == "-" || text.empty()) {
        return parts;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad partition text: '" + text + "'");
        }
        if (pos != item.size()) {
            throw std::invalid_argument("bad partition text: '" + text + "'");
        }
        parts.push_back(v);
    }
    return parts;
}

std::string render_parts(const std::vector<int>& parts) {
    if (parts.empty()) {
        return "-";
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += std::to_string(parts[i]);
    }
    return out;
}

// Calls visit(parts) for every sequence with lo[j] <= parts[j] <= hi[j],
// weakly decreasing, summing to at most max_weight. Trailing zeros are kept
// in the callback and stripped by the Partition constructor.
void for_each_bounded(const std::vector<int>& lo, const std::vector<int>& hi, int max_weight,
                      const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur(lo.size());
    int lo_rest = std::accumulate(lo.begin(), lo.end(), 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t j, int used, int lo_left) {
        if (j == lo.size()) {
            visit(cur);
            return;
        }
        int lo_after = lo_left - lo[j];
        int top = hi[j];
        if (j > 0) {
            top = std::min(top, cur[j - 1]);
        }
        top = std::min(top, max_weight - used - lo_after);
        for (int v = lo[j]; v <= top; ++v) {
            cur[j] = v;
            rec(j + 1, used + v, lo_after);
        }
    };
    rec(0, 0, lo_rest);
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
        }
        weight_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_) {
        for (int c = 0; c < p; ++c) {
            ++conj[c];
        }
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const { return render_parts(parts_); }

Partition Partition::parse(const std::string& text) { return Partition(parse_parts(text)); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])) {
            throw std::invalid_argument("StrictPartition: parts must be strictly decreasing");
        }
        weight_ += parts_[i];
    }
}

bool StrictPartition::contains(int value) const {
    return std::find(parts_.begin(), parts_.end(), value) != parts_.end();
}

std::string StrictPartition::to_string() const { return render_parts(parts_); }

StrictPartition StrictPartition::parse(const std::string& text) {
    return StrictPartition(parse_parts(text));
}

FrobeniusCoords to_frobenius(const Partition& mu) {
    FrobeniusCoords fc;
    Partition conj = mu.conjugate();
    for (int i = 1; mu.part(i) >= i; ++i) {
        fc.arms.push_back(mu.part(i) - i);
        fc.legs.push_back(-(conj.part(i) - i + 1));
    }
    return fc;
}

Partition from_frobenius(const FrobeniusCoords& fc) {
    const auto r = fc.arms.size();
    if (fc.legs.size() != r) {
        throw std::invalid_argument("from_frobenius: arm and leg lists differ in length");
    }
    for (std::size_t j = 0; j < r; ++j) {
        if (fc.arms[j] < 0 || fc.legs[j] >= 0) {
            throw std::invalid_argument("from_frobenius: arms must be >= 0 and legs < 0");
        }
        if (j + 1 < r && (fc.arms[j] <= fc.arms[j + 1] || fc.legs[j] >= fc.legs[j + 1])) {
            throw std::invalid_argument("from_frobenius: arms must decrease, legs increase");
        }
    }
    // Row i <= r holds the diagonal box plus its arm; below the Durfee
    // square row i counts the columns j <= r reaching down to it.
    std::vector<int> parts;
    const int rr = static_cast<int>(r);
    for (int i = 1; i <= rr; ++i) {
        parts.push_back(fc.arms[i - 1] + i);
    }
    for (int i = rr + 1;; ++i) {
        int count = 0;
        for (int j = 1; j <= rr; ++j) {
            int column_length = -fc.legs[j - 1] + j - 1;
            if (column_length >= i) {
                ++count;
            }
        }
        if (count == 0) {
            break;
        }
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

bool interlaces(const Partition& nu, const Partition& mu) {
    const int l = std::max(mu.length(), nu.length());
    for (int j = 1; j <= l; ++j) {
        if (nu.part(j) > mu.part(j) || nu.part(j) < mu.part(j + 1)) {
            return false;
        }
    }
    return true;
}

bool strict_interlaces(const StrictPartition& nu, const StrictPartition& mu) {
    return interlaces(nu.as_partition(), mu.as_partition());
}

std::vector<Partition> enumerate_interlacing(const Partition& mu) {
    const int l = mu.length();
    std::vector<int> lo(l), hi(l);
    for (int j = 1; j <= l; ++j) {
        lo[j - 1] = mu.part(j + 1);
        hi[j - 1] = mu.part(j);
    }
    std::vector<Partition> out;
    for_each_bounded(lo, hi, mu.weight(), [&](const std::vector<int>& p) { out.emplace_back(p); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_interlaced_by(const Partition& nu, int max_weight) {
    std::vector<Partition> out;
    if (nu.weight() > max_weight) {
        return out;
    }
    const int l = nu.length() + 1;
    std::vector<int> lo(l), hi(l);
    lo[0] = nu.part(1);
    hi[0] = max_weight;
    for (int j = 2; j <= l; ++j) {
        lo[j - 1] = nu.part(j);
        hi[j - 1] = nu.part(j - 1);
    }
    for_each_bounded(lo, hi, max_weight, [&](const std::vector<int>& p) { out.emplace_back(p); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool strictly_decreasing_nonzero(const std::vector<int>& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i + 1] != 0 && p[i] <= p[i + 1]) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<StrictPartition> enumerate_strict_interlacing(const StrictPartition& mu) {
    std::vector<StrictPartition> out;
    for (const auto& p : enumerate_interlacing(mu.as_partition())) {
        if (strictly_decreasing_nonzero(p.parts())) {
            out.emplace_back(p.parts());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StrictPartition> enumerate_strict_interlaced_by(const StrictPartition& nu,
                                                            int max_weight) {
    std::vector<StrictPartition> out;
    for (const auto& p : enumerate_interlaced_by(nu.as_partition(), max_weight)) {
        if (strictly_decreasing_nonzero(p.parts())) {
            out.emplace_back(p.parts());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) {
        return out;
    }
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(rem, maxp); v >= 1; --v) {
            cur.push_back(v);
            rec(rem - v, v);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int w = 0; w <= n; ++w) {
        auto part = partitions_of(w);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<StrictPartition> strict_partitions_of(int n) {
    std::vector<StrictPartition> out;
    for (const auto& p : partitions_of(n)) {
        if (strictly_decreasing_nonzero(p.parts())) {
            out.emplace_back(p.parts());
        }
    }
    return out;
}

std::vector<StrictPartition> strict_partitions_up_to(int n) {
    std::vector<StrictPartition> out;
    for (int w = 0; w <= n; ++w) {
        auto part = strict_partitions_of(w);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace planefock
