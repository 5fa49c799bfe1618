// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "planefock/charged_vertex.hpp"
#include "planefock/neutral_vertex.hpp"
#include "planefock/planepart.hpp"
#include "planefock/verify.hpp"

using namespace planefock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome from_reports(const std::vector<RunReport>& reports) {
    Outcome o;
    std::ostringstream os;
    for (const auto& r : reports) {
        o.ok = o.ok && r.passed();
        os << r.suite << " " << r.cases << " cases " << r.failures.size() << " failures; ";
        for (std::size_t k = 0; k < r.failures.size() && k < 3; ++k) {
            os << "[" << r.failures[k].check << " " << r.failures[k].inputs << "] ";
        }
    }
    o.detail = os.str();
    return o;
}

VerifyOptions opts() {
    VerifyOptions o;
    o.threads = 4;
    return o;
}

// compute_sa(12), macmahon_product(12) and the plane partition counts.
Outcome plane_partition_identity() {
    const QSeries vertex = compute_sa(12);
    const QSeries product = macmahon_product(12);
    Outcome o;
    std::ostringstream os;
    for (int n = 0; n <= 12; ++n) {
        const CoefScalar count(static_cast<long>(enumerate_pp(n, 12, 4).size()));
        if (!(vertex.coefficient(2 * n) == count && product.coefficient(2 * n) == count)) {
            o.ok = false;
            os << "n=" << n << " vertex " << vertex.coefficient(2 * n).to_string() << " product "
               << product.coefficient(2 * n).to_string() << " oracle " << count.to_string()
               << "; ";
        }
    }
    o.detail = o.ok ? "n = 0..12 agree" : os.str();
    return o;
}

Outcome strict_identity() {
    const QSeries vertex = compute_sb(10);
    const QSeries product = product_b(10);
    Outcome o;
    std::ostringstream os;
    for (int n = 0; n <= 10; ++n) {
        const CoefScalar count(static_cast<long>(weighted_dspp_count(n, 10)));
        if (!(vertex.coefficient(2 * n) == count && product.coefficient(2 * n) == count)) {
            o.ok = false;
            os << "n=" << n << " vertex " << vertex.coefficient(2 * n).to_string() << " product "
               << product.coefficient(2 * n).to_string() << " oracle " << count.to_string()
               << "; ";
        }
    }
    const long first[] = {1, 2, 6, 16, 38};
    for (int n = 0; n < 5; ++n) {
        if (!(vertex.coefficient(2 * n) == CoefScalar(first[n]))) {
            o.ok = false;
            os << "leading coefficient " << n << " is " << vertex.coefficient(2 * n).to_string()
               << "; ";
        }
    }
    o.detail = o.ok ? "n = 0..10 agree, leading 1 2 6 16 38" : os.str();
    return o;
}

Outcome figures() {
    using Rows = std::vector<std::vector<int>>;
    Outcome o;
    std::ostringstream os;
    const auto chain = diagonal_slices(PlanePartition(Rows{{4, 2, 1, 1, 1}, {3, 2, 1, 1}, {2, 1, 1}, {1}}));
    const std::vector<std::pair<int, std::vector<int>>> expected{
        {-3, {1}}, {-2, {2}}, {-1, {3, 1}}, {0, {4, 2, 1}}, {1, {2, 1}}, {2, {1, 1}}, {3, {1}}, {4, {1}}};
    for (const auto& [m, parts] : expected) {
        if (chain.slice(m) != Partition(parts)) {
            o.ok = false;
            os << "mu_" << m << " = " << chain.slice(m).to_string() << "; ";
        }
    }
    if (chain.first_index != -4 || chain.last_index() != 5) {
        o.ok = false;
        os << "chain spans " << chain.first_index << ".." << chain.last_index() << "; ";
    }
    const PlanePartition paths(Rows{{4, 2, 1, 1, 1}, {3, 2, 1}, {2, 1, 1}, {1}});
    const bool strict = is_diagonally_strict(paths);
    const int count = strict ? path_count(paths) : -1;
    if (!strict || paths.weight() != 20 || count != 6) {
        o.ok = false;
        os << "strict=" << strict << " weight=" << paths.weight() << " paths=" << count;
    }
    o.detail = o.ok ? "slices and path count as drawn" : os.str();
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 plane partition generating function", plane_partition_identity},
        {"2 weighted strict generating function", strict_identity},
        {"3 charged vertex operators, three routes", [] { return from_reports({verify_lemma1(opts())}); }},
        {"4 neutral vertex operators, three routes", [] { return from_reports({verify_lemma2(opts())}); }},
        {"5 fermion and boson algebra",
         [] { return from_reports({verify_clifford(opts()), verify_heisenberg(opts())}); }},
        {"6 vertex operator commutation", [] { return from_reports({verify_commutation(opts())}); }},
        {"7 slices, chains and chain weights",
         [] { return from_reports({verify_slices(opts()), verify_paths(opts())}); }},
        {"8 figure examples", figures},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << o.detail
                  << ", " << secs << " s)\n";
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
