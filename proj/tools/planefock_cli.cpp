// planefock: coefficient tables, oracle listings and invariant suites.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "planefock/charged_vertex.hpp"
#include "planefock/neutral_vertex.hpp"
#include "planefock/planepart.hpp"
#include "planefock/verify.hpp"

using namespace planefock;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integers go out as JSON numbers; anything else keeps its exact text.
json coef_json(const CoefScalar& c) {
    if (c.sqrt2_part() == 0 && c.rat_part().get_den() == 1 && c.rat_part().get_num().fits_slong_p()) {
        return c.rat_part().get_num().get_si();
    }
    return c.to_string();
}

json series_json(const QSeries& s) {
    json terms = json::array();
    for (const auto& [e2, c] : s.terms()) {
        terms.push_back({{"exp2", e2}, {"coef", coef_json(c)}});
    }
    return terms;
}

Route parse_route(const std::string& name) {
    if (name == "combinatorial" || name == "comb") {
        return Route::combinatorial;
    }
    if (name == "fermionic") {
        return Route::fermionic;
    }
    if (name == "exponential" || name == "exp") {
        return Route::exponential;
    }
    throw UsageError("unknown route: " + name);
}

struct SeriesOpts {
    int order = 6;
    std::string format = "text";
    bool cap_override = false;
    int threads = 1;
    std::string route = "combinatorial";
};

// Shared body of sa and sb: three columns, one row per power of q.
int cmd_series(bool strict, const SeriesOpts& o) {
    const int cap = strict ? kStrictPlanePartitionOracleCap : kPlanePartitionOracleCap;
    if (o.order < 0) {
        throw UsageError("--order must be non-negative");
    }
    if (o.order > cap && !o.cap_override) {
        throw UsageError("--order " + std::to_string(o.order) + " exceeds the oracle cap " +
                         std::to_string(cap) + " (pass --cap-override)");
    }
    const int limit = o.cap_override ? o.order : cap;
    const Route route = parse_route(o.route);
    const QSeries vertex = strict ? compute_sb(o.order, route) : compute_sa(o.order, route);
    const QSeries product = strict ? product_b(o.order) : macmahon_product(o.order);

    json rows = json::array();
    bool agree = true;
    std::ostringstream text;
    text << "n\tvertex\tproduct\toracle\n";
    for (int n = 0; n <= o.order; ++n) {
        const CoefScalar oracle =
            strict ? CoefScalar(static_cast<long>(weighted_dspp_count(n, limit)))
                   : CoefScalar(static_cast<long>(enumerate_pp(n, limit, o.threads).size()));
        const CoefScalar v = vertex.coefficient(2 * n);
        const CoefScalar p = product.coefficient(2 * n);
        agree = agree && v == p && p == oracle;
        rows.push_back({{"n", n}, {"vertex", coef_json(v)}, {"product", coef_json(p)},
                        {"oracle", coef_json(oracle)}});
        text << n << '\t' << v.to_string() << '\t' << p.to_string() << '\t' << oracle.to_string()
             << '\n';
    }
    if (o.format == "json") {
        std::cout << rows.dump() << '\n';
    } else {
        std::cout << text.str();
        if (!agree) {
            std::cout << "columns disagree\n";
        }
    }
    return agree ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& suite, const std::string& format, int threads) {
    if (!is_suite(suite)) {
        throw UsageError("unknown suite: " + suite);
    }
    VerifyOptions opts;
    opts.threads = threads;
    const auto reports = run_suite(suite, opts);
    bool ok = true;
    json all = json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        if (format == "json") {
            all.push_back(json::parse(r.to_json()));
        } else {
            std::cout << r.to_text();
        }
    }
    if (format == "json") {
        std::cout << all.dump() << '\n';
    }
    return ok ? kExitPass : kExitFail;
}

PlanePartition load_plane_partition(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return PlanePartition::parse_text(buf.str());
}

int cmd_slices(const std::string& path, const std::string& format) {
    const PlanePartition pi = load_plane_partition(path);
    const auto chain = diagonal_slices(pi);
    const bool strict = is_diagonally_strict(pi);
    if (format == "json") {
        json slices = json::array();
        for (int m = chain.first_index; m <= chain.last_index(); ++m) {
            if (!chain.slice(m).parts().empty()) {
                slices.push_back({{"index", m}, {"parts", chain.slice(m).parts()}});
            }
        }
        json out{{"slices", slices}, {"strict", strict}, {"weight", pi.weight()}};
        out["paths"] = strict ? json(path_count(pi)) : json(nullptr);
        std::cout << out.dump() << '\n';
        return kExitPass;
    }
    for (int m = chain.first_index; m <= chain.last_index(); ++m) {
        if (!chain.slice(m).parts().empty()) {
            std::cout << "mu_" << m << " = (" << chain.slice(m).to_string() << ")\n";
        }
    }
    std::cout << "strict: " << (strict ? "true" : "false") << '\n';
    std::cout << "weight: " << pi.weight() << '\n';
    if (strict) {
        std::cout << "paths: " << path_count(pi) << '\n';
    }
    return kExitPass;
}

int cmd_list(const std::string& kind, int weight, const std::string& format, bool cap_override,
             int threads) {
    if (kind != "pp" && kind != "dspp") {
        throw UsageError("list expects pp or dspp");
    }
    const bool strict = kind == "dspp";
    const int cap = strict ? kStrictPlanePartitionOracleCap : kPlanePartitionOracleCap;
    if (weight < 0) {
        throw UsageError("--weight must be non-negative");
    }
    if (weight > cap && !cap_override) {
        throw UsageError("--weight exceeds the oracle cap " + std::to_string(cap) +
                         " (pass --cap-override)");
    }
    const int limit = cap_override ? weight : cap;
    const auto list = strict ? enumerate_dspp(weight, limit) : enumerate_pp(weight, limit, threads);
    if (format == "json") {
        json out = json::array();
        for (const auto& pi : list) {
            if (strict) {
                out.push_back(json::parse(dspp_to_json(pi)));
            } else {
                out.push_back({{"weight", pi.weight()}, {"rows", pi.rows()}});
            }
        }
        std::cout << out.dump() << '\n';
        return kExitPass;
    }
    for (const auto& pi : list) {
        std::cout << pi.to_text();
        if (strict) {
            std::cout << "paths: " << path_count(pi) << '\n';
        }
        std::cout << '\n';
    }
    std::cout << list.size() << " plane partitions of weight " << weight << '\n';
    return kExitPass;
}

struct GammaOpts {
    std::string state = "-";
    std::string direction = "plus";
    std::string grading = "";
    bool neutral = false;
    std::string route = "combinatorial";
    int max_weight = 6;
    std::string format = "text";
};

template <typename Vector>
json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& [state, series] : v.terms()) {
        std::string label;
        if constexpr (std::is_same_v<Vector, NeutralVector>) {
            const auto p = strict_partition_of(state);
            label = p ? p->to_string() : state.to_string();
        } else {
            const auto p = partition_of(state);
            label = p ? p->to_string() : state.to_string();
        }
        out.push_back({{"state", label}, {"series", series_json(series)}});
    }
    return out;
}

int cmd_gamma(const GammaOpts& o) {
    if (o.direction != "plus" && o.direction != "minus") {
        throw UsageError("--direction must be plus or minus");
    }
    const bool plus = o.direction == "plus";
    const int g2 = o.grading.empty() ? (plus ? -1 : 1) : parse_half_integer(o.grading);
    if (!plus && g2 <= 0) {
        throw UsageError("the minus operator needs a positive grading");
    }
    if (g2 == 0) {
        throw UsageError("grading must be nonzero");
    }
    const Route route = parse_route(o.route);
    const VertexSpec spec = plus ? VertexSpec::plus(g2) : VertexSpec::minus(g2);
    const int absg = g2 < 0 ? -g2 : g2;
    json out;
    std::string text;
    if (o.neutral) {
        const StrictPartition mu = StrictPartition::parse(o.state);
        const int cap2 = absg * (plus ? mu.weight() : o.max_weight);
        const auto v = gamma_hat_on_basis(route, spec, mu, o.max_weight, cap2);
        out = vector_json(v);
        text = v.to_string();
    } else {
        const Partition mu = Partition::parse(o.state);
        const int cap2 = absg * (plus ? mu.weight() : o.max_weight);
        const auto v = gamma_on_basis(route, spec, mu, o.max_weight, cap2);
        out = vector_json(v);
        text = v.to_string();
    }
    if (o.format == "json") {
        std::cout << out.dump() << '\n';
    } else {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free-fermion vertex operators and plane partition counting"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "json"};

    SeriesOpts sa_opts;
    auto* sa = app.add_subcommand("sa", "Plane partition generating function, three ways");
    SeriesOpts sb_opts;
    auto* sb = app.add_subcommand("sb", "Weighted strict plane partition generating function");
    for (auto [cmd, o] : {std::pair{sa, &sa_opts}, std::pair{sb, &sb_opts}}) {
        cmd->add_option("--order", o->order, "Highest power of q")->capture_default_str();
        cmd->add_option("--format", o->format)->check(CLI::IsMember(formats));
        cmd->add_flag("--cap-override", o->cap_override, "Allow orders above the oracle cap");
        cmd->add_option("--threads", o->threads)->check(CLI::PositiveNumber);
        cmd->add_option("--route", o->route, "combinatorial, fermionic or exponential");
    }

    std::string suite;
    std::string verify_format = "text";
    int verify_threads = 1;
    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("suite", suite, "clifford, heisenberg, lemma1, lemma2, commutation, slices, paths or all")
        ->required();
    verify->add_option("--format", verify_format)->check(CLI::IsMember(formats));
    verify->add_option("--threads", verify_threads)->check(CLI::PositiveNumber);

    std::string slices_file;
    std::string slices_format = "text";
    auto* slices = app.add_subcommand("slices", "Diagonal slices and path count of a plane partition file");
    slices->add_option("file", slices_file)->required();
    slices->add_option("--format", slices_format)->check(CLI::IsMember(formats));

    std::string list_kind;
    int list_weight = 0;
    std::string list_format = "text";
    bool list_override = false;
    int list_threads = 1;
    auto* list = app.add_subcommand("list", "Enumerate plane partitions (pp) or strict ones (dspp)");
    list->add_option("kind", list_kind)->required()->check(CLI::IsMember({"pp", "dspp"}));
    list->add_option("--weight", list_weight)->required();
    list->add_option("--format", list_format)->check(CLI::IsMember(formats));
    list->add_flag("--cap-override", list_override);
    list->add_option("--threads", list_threads)->check(CLI::PositiveNumber);

    GammaOpts gamma_opts;
    auto* gamma = app.add_subcommand("gamma", "Apply a vertex operator to a basis state");
    gamma->add_option("--state", gamma_opts.state, "Partition such as 3,1; '-' is empty");
    gamma->add_option("--direction", gamma_opts.direction)
        ->check(CLI::IsMember({"plus", "minus"}));
    gamma->add_option("--grading", gamma_opts.grading, "z = q^grading, e.g. -1/2");
    gamma->add_flag("--neutral", gamma_opts.neutral, "Use the neutral operators on strict states");
    gamma->add_option("--route", gamma_opts.route);
    gamma->add_option("--max-weight", gamma_opts.max_weight, "Weight cap for the minus operator");
    gamma->add_option("--format", gamma_opts.format)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*sa) {
            return cmd_series(false, sa_opts);
        }
        if (*sb) {
            return cmd_series(true, sb_opts);
        }
        if (*verify) {
            return cmd_verify(suite, verify_format, verify_threads);
        }
        if (*slices) {
            return cmd_slices(slices_file, slices_format);
        }
        if (*list) {
            return cmd_list(list_kind, list_weight, list_format, list_override, list_threads);
        }
        if (*gamma) {
            return cmd_gamma(gamma_opts);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PlanePartitionError& e) {
        std::cerr << "error at (" << e.row() << "," << e.col() << "): " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
