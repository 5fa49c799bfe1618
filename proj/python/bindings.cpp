#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "planefock/charged_vertex.hpp"
#include "planefock/neutral_vertex.hpp"
#include "planefock/planepart.hpp"
#include "planefock/verify.hpp"

namespace py = pybind11;
using namespace planefock;

namespace {

using Rows = std::vector<std::vector<int>>;

// Integer coefficients become Python ints, the rest stay exact strings.
py::object coef(const CoefScalar& c) {
    if (c.sqrt2_part() == 0 && c.rat_part().get_den() == 1) {
        return py::int_(py::str(c.rat_part().get_num().get_str()));
    }
    return py::str(c.to_string());
}

py::list integer_coefficients(const QSeries& s, int order) {
    py::list out;
    for (int n = 0; n <= order; ++n) {
        out.append(coef(s.coefficient(2 * n)));
    }
    return out;
}

py::dict series_dict(const QSeries& s) {
    py::dict out;
    for (const auto& [e2, c] : s.terms()) {
        out[py::int_(e2)] = coef(c);
    }
    return out;
}

Route route_of(const std::string& name) {
    if (name == "combinatorial") return Route::combinatorial;
    if (name == "fermionic") return Route::fermionic;
    if (name == "exponential") return Route::exponential;
    throw py::value_error("unknown route: " + name);
}

void rows_of(const std::vector<PlanePartition>& list, py::list& out) {
    for (const auto& pi : list) {
        out.append(py::cast(pi.rows()));
    }
}

}  // namespace

PYBIND11_MODULE(_planefock, m) {
    m.doc() = "Exact free-fermion vertex operators and plane partition counts";

    py::register_exception<PlanePartitionError>(m, "PlanePartitionError", PyExc_ValueError);

    m.def("compute_sa", [](int order, const std::string& route) {
        return integer_coefficients(compute_sa(order, route_of(route)), order);
    }, py::arg("order"), py::arg("route") = "combinatorial",
       "Coefficients of q^0..q^order from the charged vertex operator product.");
    m.def("compute_sb", [](int order, const std::string& route) {
        return integer_coefficients(compute_sb(order, route_of(route)), order);
    }, py::arg("order"), py::arg("route") = "combinatorial");
    m.def("macmahon_product", [](int order) {
        return integer_coefficients(macmahon_product(order), order);
    });
    m.def("product_b", [](int order) { return integer_coefficients(product_b(order), order); });

    m.def("enumerate_pp", [](int n, int cap, int threads) {
        py::list out;
        rows_of(enumerate_pp(n, cap, threads), out);
        return out;
    }, py::arg("n"), py::arg("cap") = kPlanePartitionOracleCap, py::arg("threads") = 1);
    m.def("enumerate_dspp", [](int n, int cap) {
        py::list out;
        rows_of(enumerate_dspp(n, cap), out);
        return out;
    }, py::arg("n"), py::arg("cap") = kStrictPlanePartitionOracleCap);
    m.def("weighted_dspp_count", [](int n) { return weighted_dspp_count(n); });

    m.def("diagonal_slices", [](const Rows& rows) {
        const auto chain = diagonal_slices(PlanePartition(rows));
        py::dict out;
        for (int k = chain.first_index; k <= chain.last_index(); ++k) {
            out[py::int_(k)] = chain.slice(k).parts();
        }
        return out;
    }, "Map from diagonal index to slice parts, empty ends included.");
    m.def("is_diagonally_strict", [](const Rows& rows) {
        return is_diagonally_strict(PlanePartition(rows));
    });
    m.def("path_count", [](const Rows& rows) { return path_count(PlanePartition(rows)); });

    m.def("gamma", [](const std::string& state, bool plus, int grading2, bool neutral,
                      const std::string& route, int max_weight) {
        const VertexSpec spec = plus ? VertexSpec::plus(grading2) : VertexSpec::minus(grading2);
        const int g = grading2 < 0 ? -grading2 : grading2;
        py::dict out;
        if (neutral) {
            const auto mu = StrictPartition::parse(state);
            const int cap2 = g * (plus ? mu.weight() : max_weight);
            const auto v = gamma_hat_on_basis(route_of(route), spec, mu, max_weight, cap2);
            for (const auto& [s, c] : v.terms()) {
                out[py::str(strict_partition_of(s)->to_string())] = series_dict(c);
            }
        } else {
            const auto mu = Partition::parse(state);
            const int cap2 = g * (plus ? mu.weight() : max_weight);
            const auto v = gamma_on_basis(route_of(route), spec, mu, max_weight, cap2);
            for (const auto& [s, c] : v.terms()) {
                out[py::str(partition_of(s)->to_string())] = series_dict(c);
            }
        }
        return out;
    }, py::arg("state"), py::arg("plus") = true, py::arg("grading2") = -1,
       py::arg("neutral") = false, py::arg("route") = "combinatorial", py::arg("max_weight") = 6,
       "Vertex operator applied to a basis state. Keys of the inner dicts are doubled q-exponents.");

    m.def("verify", [](const std::string& suite, int threads) {
        VerifyOptions opts;
        opts.threads = threads;
        std::vector<RunReport> reports;
        {
            py::gil_scoped_release release;
            reports = run_suite(suite, opts);
        }
        py::list out;
        for (const auto& r : reports) {
            py::dict d;
            d["suite"] = r.suite;
            d["cases"] = r.cases;
            d["failures"] = r.failures.size();
            d["seconds"] = r.seconds;
            out.append(d);
        }
        return out;
    }, py::arg("suite"), py::arg("threads") = 1);
}
