#include "planefock/planepart.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace planefock {

PlanePartition::PlanePartition(std::vector<std::vector<int>> rows) {
    auto raw = [&](int i, int j) -> int {
        if (i < 1 || i > static_cast<int>(rows.size())) {
            return 0;
        }
        const auto& row = rows[i - 1];
        return j >= 1 && j <= static_cast<int>(row.size()) ? row[j - 1] : 0;
    };
    for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
        for (int j = 1; j <= static_cast<int>(rows[i - 1].size()); ++j) {
            int v = raw(i, j);
            if (v < 0) {
                throw PlanePartitionError("negative entry", i, j);
            }
            if (j > 1 && v > raw(i, j - 1)) {
                throw PlanePartitionError("entry exceeds its left neighbour", i, j);
            }
            if (i > 1 && v > raw(i - 1, j)) {
                throw PlanePartitionError("entry exceeds the entry above it", i, j);
            }
        }
    }
    for (auto& row : rows) {
        while (!row.empty() && row.back() == 0) {
            row.pop_back();
        }
    }
    while (!rows.empty() && rows.back().empty()) {
        rows.pop_back();
    }
    rows_ = std::move(rows);
    for (const auto& row : rows_) {
        for (int v : row) {
            weight_ += v;
        }
    }
}

int PlanePartition::at(int i, int j) const {
    if (i < 1 || j < 1 || i > static_cast<int>(rows_.size())) {
        return 0;
    }
    const auto& row = rows_[i - 1];
    return j <= static_cast<int>(row.size()) ? row[j - 1] : 0;
}

std::string PlanePartition::to_text() const {
    std::ostringstream os;
    for (const auto& row : rows_) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            os << (j ? " " : "") << row[j];
        }
        os << "\n";
    }
    return os.str();
}

PlanePartition PlanePartition::parse_text(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        std::string token;
        while (ls >> token) {
            const int i = static_cast<int>(rows.size()) + 1;
            const int j = static_cast<int>(row.size()) + 1;
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(token, &pos);
            } catch (const std::logic_error&) {
                throw PlanePartitionError("not an integer: '" + token + "'", i, j);
            }
            if (pos != token.size()) {
                throw PlanePartitionError("not an integer: '" + token + "'", i, j);
            }
            row.push_back(v);
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    return PlanePartition(std::move(rows));
}

Partition SliceChain::slice(int m) const {
    if (m < first_index || m > last_index()) {
        return Partition();
    }
    return slices[m - first_index];
}

bool SliceChain::is_interlacing_chain() const {
    if (slices.empty() || !slices.front().empty() || !slices.back().empty()) {
        return false;
    }
    if (first_index > 0 || last_index() < 0) {
        return false;
    }
    for (int m = first_index; m < last_index(); ++m) {
        bool ok = m < 0 ? interlaces(slice(m), slice(m + 1)) : interlaces(slice(m + 1), slice(m));
        if (!ok) {
            return false;
        }
    }
    return true;
}

SliceChain diagonal_slices(const PlanePartition& pi) {
    SliceChain chain;
    if (pi.empty()) {
        chain.slices.emplace_back();
        return chain;
    }
    const int nrows = static_cast<int>(pi.rows().size());
    const int ncols = static_cast<int>(pi.rows().front().size());
    chain.first_index = -nrows;
    for (int m = -nrows; m <= ncols; ++m) {
        std::vector<int> parts;
        for (int k = 1;; ++k) {
            int v = m <= 0 ? pi.at(-m + k, k) : pi.at(k, m + k);
            if (v == 0) {
                break;
            }
            parts.push_back(v);
        }
        chain.slices.emplace_back(std::move(parts));
    }
    return chain;
}

PlanePartition from_slices(const SliceChain& chain) {
    if (!chain.is_interlacing_chain()) {
        throw std::invalid_argument("from_slices: slices do not form an interlacing chain");
    }
    std::vector<std::vector<int>> rows;
    auto put = [&](int i, int j, int v) {
        if (static_cast<int>(rows.size()) < i) {
            rows.resize(i);
        }
        auto& row = rows[i - 1];
        if (static_cast<int>(row.size()) < j) {
            row.resize(j, 0);
        }
        row[j - 1] = v;
    };
    for (int m = chain.first_index; m <= chain.last_index(); ++m) {
        const Partition slice = chain.slice(m);
        const auto& parts = slice.parts();
        for (int k = 1; k <= static_cast<int>(parts.size()); ++k) {
            if (m >= 0) {
                put(k, m + k, parts[k - 1]);
            } else {
                put(-m + k, k, parts[k - 1]);
            }
        }
    }
    return PlanePartition(std::move(rows));
}

bool is_diagonally_strict(const PlanePartition& pi) {
    const auto chain = diagonal_slices(pi);
    for (const auto& s : chain.slices) {
        const auto& p = s.parts();
        if (std::adjacent_find(p.begin(), p.end()) != p.end()) {
            return false;
        }
    }
    return true;
}

int path_count(const PlanePartition& pi) {
    if (!is_diagonally_strict(pi)) {
        throw std::invalid_argument("path_count: plane partition is not diagonally strict");
    }
    int count = 0;
    for (int i = 1; i <= static_cast<int>(pi.rows().size()); ++i) {
        for (int j = 1; j <= static_cast<int>(pi.rows()[i - 1].size()); ++j) {
            const int v = pi.at(i, j);
            if (pi.at(i + 1, j) != v && pi.at(i, j - 1) != v) {
                ++count;
            }
        }
    }
    return count;
}

namespace {

void check_cap(int n, int cap, const char* who) {
    if (n < 0) {
        throw std::invalid_argument(std::string(who) + ": negative weight");
    }
    if (n > cap) {
        throw std::out_of_range(std::string(who) + ": weight " + std::to_string(n) +
                                " exceeds oracle cap " + std::to_string(cap));
    }
}

// Row-major filling: each cell is bounded by its left and upper neighbours
// and by the remaining weight.
void fill_rows(std::vector<std::vector<int>>& rows, int remaining,
               std::vector<PlanePartition>& out) {
    if (remaining == 0) {
        out.emplace_back(rows);
        return;
    }
    const std::vector<int> above = rows.back();
    rows.emplace_back();
    std::function<void(int)> cell = [&](int rem) {
        const std::size_t j = rows.back().size();
        if (j > 0) {
            // Close the row here and move on to the next one.
            fill_rows(rows, rem, out);
        }
        if (j >= above.size()) {
            return;
        }
        int top = std::min(above[j], rem);
        if (j > 0) {
            top = std::min(top, rows.back().back());
        }
        for (int v = top; v >= 1; --v) {
            rows.back().push_back(v);
            cell(rem - v);
            rows.back().pop_back();
        }
    };
    cell(remaining);
    rows.pop_back();
}

void enumerate_with_corner(int n, int corner, std::vector<PlanePartition>& out) {
    // The first row is filled with the fixed corner height, then fill_rows
    // handles the remainder; the first row is unbounded above.
    std::vector<std::vector<int>> rows{{corner}};
    std::function<void(int)> first_row = [&](int rem) {
        fill_rows(rows, rem, out);
        int top = std::min(rows[0].back(), rem);
        for (int v = top; v >= 1; --v) {
            rows[0].push_back(v);
            first_row(rem - v);
            rows[0].pop_back();
        }
    };
    first_row(n - corner);
}

// Sequences nu_1 < mu, nu_2 < nu_1, ..., ending at the first empty slice,
// with total weight <= budget. Each entry holds the slices and their weight.
struct Tail {
    std::vector<Partition> slices;
    int weight = 0;
};

void tails_from(const Partition& mu, int budget, bool strict, std::vector<Partition>& cur,
                int used, std::vector<Tail>& out) {
    for (const auto& nu : enumerate_interlacing(mu)) {
        if (used + nu.weight() > budget) {
            continue;
        }
        if (strict) {
            const auto& p = nu.parts();
            if (std::adjacent_find(p.begin(), p.end()) != p.end()) {
                continue;
            }
        }
        cur.push_back(nu);
        if (nu.empty()) {
            out.push_back({cur, used});
        } else {
            tails_from(nu, budget, strict, cur, used + nu.weight(), out);
        }
        cur.pop_back();
    }
}

std::vector<PlanePartition> chains_of_weight(int n, bool strict) {
    std::vector<PlanePartition> out;
    for (const auto& center : partitions_up_to(n)) {
        if (strict) {
            const auto& p = center.parts();
            if (std::adjacent_find(p.begin(), p.end()) != p.end()) {
                continue;
            }
        }
        const int budget = n - center.weight();
        std::vector<Tail> tails;
        std::vector<Partition> cur;
        if (center.empty()) {
            if (n == 0) {
                out.emplace_back();
            }
            continue;
        }
        tails_from(center, budget, strict, cur, 0, tails);
        for (const auto& left : tails) {
            for (const auto& right : tails) {
                if (left.weight + right.weight != budget) {
                    continue;
                }
                SliceChain chain;
                chain.first_index = -static_cast<int>(left.slices.size());
                chain.slices.assign(left.slices.rbegin(), left.slices.rend());
                chain.slices.push_back(center);
                chain.slices.insert(chain.slices.end(), right.slices.begin(), right.slices.end());
                out.push_back(from_slices(chain));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<PlanePartition> enumerate_pp(int n, int cap, int threads) {
    check_cap(n, cap, "enumerate_pp");
    if (n == 0) {
        return {PlanePartition()};
    }
    // Fan out over the corner height pi(1,1).
    std::vector<std::vector<PlanePartition>> buckets(n);
    const int workers = std::max(1, std::min(threads, n));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int corner = 1 + w; corner <= n; corner += workers) {
                enumerate_with_corner(n, corner, buckets[corner - 1]);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    std::vector<PlanePartition> out;
    for (auto& b : buckets) {
        out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PlanePartition> enumerate_pp_by_chains(int n, int cap) {
    check_cap(n, cap, "enumerate_pp_by_chains");
    return chains_of_weight(n, false);
}

std::vector<PlanePartition> enumerate_dspp(int n, int cap) {
    check_cap(n, cap, "enumerate_dspp");
    std::vector<PlanePartition> out;
    for (auto& pi : enumerate_pp(n, std::max(n, cap))) {
        if (is_diagonally_strict(pi)) {
            out.push_back(std::move(pi));
        }
    }
    return out;
}

std::vector<PlanePartition> enumerate_dspp_by_chains(int n, int cap) {
    check_cap(n, cap, "enumerate_dspp_by_chains");
    return chains_of_weight(n, true);
}

std::int64_t weighted_dspp_count(int n, int cap) {
    std::int64_t total = 0;
    for (const auto& pi : enumerate_dspp(n, cap)) {
        total += std::int64_t{1} << path_count(pi);
    }
    return total;
}

std::string dspp_to_json(const PlanePartition& pi) {
    nlohmann::ordered_json j;
    j["weight"] = pi.weight();
    j["rows"] = pi.rows();
    j["paths"] = path_count(pi);
    return j.dump();
}

}  // namespace planefock
