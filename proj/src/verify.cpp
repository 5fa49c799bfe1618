#include "planefock/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "planefock/charged_vertex.hpp"
#include "planefock/neutral_vertex.hpp"
#include "planefock/planepart.hpp"

namespace planefock {

void CaseSink::expect(bool ok, const std::string& check, const std::string& inputs,
                      const std::function<std::string()>& lhs,
                      const std::function<std::string()>& rhs) {
    ++cases;
    if (!ok) {
        failures.push_back({check, inputs, lhs(), rhs()});
    }
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << ": " << cases << " cases, " << failures.size() << " failures ("
       << seconds << " s)\n";
    for (const auto& f : failures) {
        os << "  FAIL " << f.check << " [" << f.inputs << "]\n";
        os << "    lhs: " << f.lhs << "\n";
        os << "    rhs: " << f.rhs << "\n";
    }
    return os.str();
}

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["cases"] = cases;
    j["seconds"] = seconds;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        j["failures"].push_back({{"check", f.check}, {"inputs", f.inputs}, {"lhs", f.lhs},
                                 {"rhs", f.rhs}});
    }
    return j.dump();
}

RunReport run_tasks(const std::string& suite, const std::vector<SuiteTask>& tasks, int threads) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CaseSink> sinks(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            tasks[i](sinks[i]);
        }
    };
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    RunReport report;
    report.suite = suite;
    for (auto& s : sinks) {
        report.cases += s.cases;
        for (auto& f : s.failures) {
            report.failures.push_back(std::move(f));
        }
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

std::string label(const std::string& key, int v) { return key + "=" + std::to_string(v); }

template <typename... Parts>
std::string inputs(const Parts&... parts) {
    std::string out;
    ((out += (out.empty() ? "" : ", ") + std::string(parts)), ...);
    return out;
}

std::string pp_text(const PlanePartition& pi) {
    std::string t = pi.to_text();
    std::replace(t.begin(), t.end(), '\n', '/');
    return t.empty() ? "-" : t;
}

QSeries delta(bool same) { return same ? QSeries::one(0) : QSeries(0); }

// Charged Clifford relations, bra duality and canonical forms.
void add_charged_clifford(std::vector<SuiteTask>& tasks) {
    for (const auto& mu : partitions_up_to(6)) {
        tasks.push_back([mu](CaseSink& sink) {
            const FockVector v = FockVector::basis(mu, 0);
            const FockVector zero(0);
            for (int m = -5; m <= 5; ++m) {
                for (int n = -5; n <= 5; ++n) {
                    const auto in = inputs("mu=" + mu.to_string(), label("m", m), label("n", n));
                    sink.expect_eq(apply_psi(m, apply_psi(n, v)) + apply_psi(n, apply_psi(m, v)),
                                   zero, "{psi_m, psi_n} = 0", in);
                    sink.expect_eq(apply_psi_star(m, apply_psi_star(n, v)) +
                                       apply_psi_star(n, apply_psi_star(m, v)),
                                   zero, "{psi*_m, psi*_n} = 0", in);
                    sink.expect_eq(apply_psi(m, apply_psi_star(n, v)) +
                                       apply_psi_star(n, apply_psi(m, v)),
                                   m == n ? v : zero, "{psi_m, psi*_n} = delta", in);
                }
            }
            for (const auto& nu : partitions_up_to(6)) {
                sink.expect_eq(inner_product_by_contraction(nu, v), delta(nu == mu),
                               "<nu|mu> by contraction",
                               inputs("nu=" + nu.to_string(), "mu=" + mu.to_string()));
            }
        });
    }
    tasks.push_back([](CaseSink& sink) {
        for (const auto& mu : partitions_up_to(8)) {
            const auto k = ket_monomial(mu);
            FockVector built = apply_monomial(k.word, FockVector::vacuum(0));
            if (k.sign < 0) {
                built = built.scaled(CoefScalar(-1));
            }
            sink.expect_eq(built, FockVector::basis(mu, 0), "canonical charged monomial",
                           "mu=" + mu.to_string());
        }
    });
}

void add_neutral_clifford(std::vector<SuiteTask>& tasks) {
    for (const auto& mu : strict_partitions_up_to(6)) {
        tasks.push_back([mu](CaseSink& sink) {
            const NeutralVector v = NeutralVector::basis(mu, 0);
            const NeutralVector zero(0);
            for (int m = -5; m <= 5; ++m) {
                for (int n = -5; n <= 5; ++n) {
                    const auto in = inputs("mu=" + mu.to_string(), label("m", m), label("n", n));
                    const int s = (m + n == 0) ? ((m % 2 == 0) ? 1 : -1) : 0;
                    sink.expect_eq(apply_phi(m, apply_phi(n, v)) + apply_phi(n, apply_phi(m, v)),
                                   v.scaled(CoefScalar(s)), "{phi_m, phi_n} = (-1)^m delta", in);
                }
            }
            sink.expect_eq(apply_phi(0, apply_phi(0, v)).scaled(CoefScalar(2)), v,
                           "2 phi_0 phi_0 = 1", "mu=" + mu.to_string());
            for (const auto& nu : strict_partitions_up_to(6)) {
                sink.expect_eq(neutral_inner_by_contraction(nu, v), delta(nu == mu),
                               "<nu|mu> neutral by contraction",
                               inputs("nu=" + nu.to_string(), "mu=" + mu.to_string()));
            }
        });
    }
    tasks.push_back([](CaseSink& sink) {
        for (const auto& mu : strict_partitions_up_to(10)) {
            const auto k = neutral_ket_monomial(mu);
            NeutralVector built =
                apply_phi_monomial(k.word, NeutralVector::vacuum(0)).scaled(k.factor);
            sink.expect_eq(built, NeutralVector::basis(mu, 0), "canonical neutral monomial",
                           "mu=" + mu.to_string());
        }
    });
}

void add_charged_heisenberg(std::vector<SuiteTask>& tasks) {
    for (const auto& mu : partitions_up_to(6)) {
        tasks.push_back([mu](CaseSink& sink) {
            const FockVector v = FockVector::basis(mu, 0);
            for (int m = -5; m <= 5; ++m) {
                if (m == 0) {
                    continue;
                }
                for (int n = -5; n <= 5; ++n) {
                    const auto in = inputs("mu=" + mu.to_string(), label("m", m), label("n", n));
                    if (n != 0) {
                        sink.expect_eq(apply_H(m, apply_H(n, v)) - apply_H(n, apply_H(m, v)),
                                       v.scaled(CoefScalar(m + n == 0 ? m : 0)),
                                       "[H_m, H_n] = m delta", in);
                    }
                    sink.expect_eq(apply_H(m, apply_psi(n, v)) - apply_psi(n, apply_H(m, v)),
                                   apply_psi(n - m, v), "[H_m, psi_n] = psi_{n-m}", in);
                    sink.expect_eq(
                        apply_H(m, apply_psi_star(n, v)) - apply_psi_star(n, apply_H(m, v)),
                        apply_psi_star(m + n, v).scaled(CoefScalar(-1)),
                        "[H_m, psi*_n] = -psi*_{m+n}", in);
                }
            }
        });
    }
}

void add_neutral_heisenberg(std::vector<SuiteTask>& tasks) {
    static const int odd[] = {-5, -3, -1, 1, 3, 5};
    for (const auto& mu : strict_partitions_up_to(6)) {
        tasks.push_back([mu](CaseSink& sink) {
            const NeutralVector v = NeutralVector::basis(mu, 0);
            for (int m : odd) {
                for (int n : odd) {
                    const auto in = inputs("mu=" + mu.to_string(), label("m", m), label("n", n));
                    const CoefScalar expected = m + n == 0 ? CoefScalar(Rational(m, 2)) : 0;
                    sink.expect_eq(
                        apply_lambda(m, apply_lambda(n, v)) - apply_lambda(n, apply_lambda(m, v)),
                        v.scaled(expected), "[lambda_m, lambda_n] = m/2 delta", in);
                }
                for (int n = -5; n <= 5; ++n) {
                    sink.expect_eq(
                        apply_lambda(m, apply_phi(n, v)) - apply_phi(n, apply_lambda(m, v)),
                        apply_phi(n - m, v), "[lambda_m, phi_n] = phi_{n-m}",
                        inputs("mu=" + mu.to_string(), label("m", m), label("n", n)));
                }
            }
        });
    }
}

}  // namespace

RunReport verify_clifford(const VerifyOptions& opts) {
    std::vector<SuiteTask> tasks;
    add_charged_clifford(tasks);
    add_neutral_clifford(tasks);
    return run_tasks("clifford", tasks, opts.threads);
}

RunReport verify_heisenberg(const VerifyOptions& opts) {
    std::vector<SuiteTask> tasks;
    add_charged_heisenberg(tasks);
    add_neutral_heisenberg(tasks);
    return run_tasks("heisenberg", tasks, opts.threads);
}

RunReport verify_lemma1(const VerifyOptions& opts) {
    std::vector<SuiteTask> tasks;
    for (int a2 : {-1, -3}) {
        for (const auto& mu : partitions_up_to(8)) {
            tasks.push_back([a2, mu](CaseSink& sink) {
                const auto spec = VertexSpec::plus(a2);
                const int cap2 = -a2 * 8;
                const auto in = inputs("mu=" + mu.to_string(), "a=" + render_half_integer(a2));
                const FockVector comb = gamma_plus_comb(spec, mu, cap2);
                sink.expect_eq(gamma_plus_fermionic(spec, mu, cap2), comb,
                               "Gamma_+ fermionic = combinatorial", in);
                sink.expect_eq(gamma_plus_exp(spec, mu, cap2), comb,
                               "Gamma_+ exponential = combinatorial", in);
            });
        }
    }
    for (int b2 : {1, 3}) {
        for (const auto& nu : partitions_up_to(6)) {
            tasks.push_back([b2, nu](CaseSink& sink) {
                const auto spec = VertexSpec::minus(b2);
                const int cap2 = b2 * 8;
                const auto in = inputs("nu=" + nu.to_string(), "b=" + render_half_integer(b2));
                const FockVector comb = gamma_minus_comb(spec, nu, 8, cap2);
                const FockVector ferm = gamma_minus_fermionic(spec, nu, 8, cap2);
                sink.expect_eq(ferm, comb, "Gamma_- fermionic = combinatorial", in);
                sink.expect_eq(gamma_minus_exp(spec, nu, 8, cap2), comb,
                               "Gamma_- exponential = combinatorial", in);
                // <mu|Gamma_-(q^b)|nu> = <nu|Gamma_+(q^-b)|mu>
                for (const auto& mu : partitions_up_to(6)) {
                    const FockVector up = gamma_plus_fermionic(VertexSpec::plus(-b2), mu, cap2);
                    sink.expect_eq(ferm.coefficient(mu), up.coefficient(nu), "adjointness",
                                   inputs(in, "mu=" + mu.to_string()));
                }
            });
        }
    }
    tasks.push_back([](CaseSink& sink) {
        for (int a2 : {-1, 1, 3}) {
            sink.expect_eq(gamma_plus_exp(VertexSpec::plus(a2), Partition(), 8),
                           FockVector::vacuum(8), "Gamma_+ fixes the vacuum",
                           "a=" + render_half_integer(a2));
        }
    });
    return run_tasks("lemma1", tasks, opts.threads);
}

RunReport verify_lemma2(const VerifyOptions& opts) {
    std::vector<SuiteTask> tasks;
    for (int a2 : {-1, -3}) {
        for (const auto& mu : strict_partitions_up_to(10)) {
            tasks.push_back([a2, mu](CaseSink& sink) {
                const auto spec = NeutralVertexSpec::plus(a2);
                const int cap2 = -a2 * 10;
                const auto in = inputs("mu=" + mu.to_string(), "a=" + render_half_integer(a2));
                const NeutralVector comb = gamma_hat_plus_comb(spec, mu, cap2);
                sink.expect_eq(gamma_hat_plus_fermionic(spec, mu, cap2), comb,
                               "Gamma-hat_+ fermionic = combinatorial", in);
                sink.expect_eq(gamma_hat_plus_exp(spec, mu, cap2), comb,
                               "Gamma-hat_+ exponential = combinatorial", in);
            });
        }
    }
    for (int b2 : {1, 3}) {
        for (const auto& nu : strict_partitions_up_to(6)) {
            tasks.push_back([b2, nu](CaseSink& sink) {
                const auto spec = NeutralVertexSpec::minus(b2);
                const int cap2 = b2 * 8;
                const auto in = inputs("nu=" + nu.to_string(), "b=" + render_half_integer(b2));
                const NeutralVector comb = gamma_hat_minus_comb(spec, nu, 8, cap2);
                const NeutralVector ferm = gamma_hat_minus_fermionic(spec, nu, 8, cap2);
                sink.expect_eq(ferm, comb, "Gamma-hat_- fermionic = combinatorial", in);
                sink.expect_eq(gamma_hat_minus_exp(spec, nu, 8, cap2), comb,
                               "Gamma-hat_- exponential = combinatorial", in);
                for (const auto& mu : strict_partitions_up_to(8)) {
                    const NeutralVector up =
                        gamma_hat_plus_fermionic(NeutralVertexSpec::plus(-b2), mu, cap2);
                    sink.expect_eq(ferm.coefficient(mu), up.coefficient(nu), "adjointness",
                                   inputs(in, "mu=" + mu.to_string()));
                }
            });
        }
    }
    tasks.push_back([](CaseSink& sink) {
        for (auto spec : {NeutralVertexSpec::plus(-1), NeutralVertexSpec::plus(-3),
                          NeutralVertexSpec::minus(1), NeutralVertexSpec::minus(3)}) {
            const bool ok = check_gamma_hat_inverse(spec, 8);
            sink.expect(
                ok, "Gamma-hat(z) Gamma-hat(-z) = 1",
                std::string(spec.direction == Direction::plus ? "plus" : "minus") +
                    ", grading=" + render_half_integer(spec.grading2),
                [ok] { return std::string(ok ? "identity" : "not identity"); },
                [] { return std::string("identity"); });
        }
    });
    for (const auto& v : strict_partitions_up_to(4)) {
        tasks.push_back([v](CaseSink& sink) {
            for (int j = -4; j <= 4; ++j) {
                const auto in = inputs("v=" + v.to_string(), label("j", j));
                const auto plus = gamma_hat_plus_conjugation(-1, j, v, 40);
                sink.expect_eq(plus.lhs, plus.rhs, "Gamma-hat_+ conjugation of phi_j", in);
                const auto minus = gamma_hat_minus_conjugation(1, j, v, 6);
                sink.expect_eq(minus.lhs, minus.rhs, "Gamma-hat_- conjugation of phi_j", in);
            }
        });
    }
    return run_tasks("lemma2", tasks, opts.threads);
}

RunReport verify_commutation(const VerifyOptions& opts) {
    static const std::pair<int, int> pairs[] = {{-1, 1}, {-3, 1}, {-1, 3}};
    std::vector<SuiteTask> tasks;
    for (auto [a2, b2] : pairs) {
        for (const auto& mu : partitions_up_to(4)) {
            tasks.push_back([a2, b2, mu](CaseSink& sink) {
                const auto sides = gamma_commutation_sides(a2, b2, mu, 16);
                sink.expect_eq(sides.lhs, sides.rhs, "charged vertex commutation",
                               inputs("mu=" + mu.to_string(), "a=" + render_half_integer(a2),
                                      "b=" + render_half_integer(b2)));
            });
        }
        for (const auto& mu : strict_partitions_up_to(4)) {
            tasks.push_back([a2, b2, mu](CaseSink& sink) {
                const auto sides = gamma_hat_commutation_sides(a2, b2, mu, 16);
                sink.expect_eq(sides.lhs, sides.rhs, "neutral vertex commutation",
                               inputs("mu=" + mu.to_string(), "a=" + render_half_integer(a2),
                                      "b=" + render_half_integer(b2)));
            });
        }
    }
    // Same relations through the exponential route at a lower cap.
    for (const auto& mu : partitions_up_to(2)) {
        tasks.push_back([mu](CaseSink& sink) {
            const auto sides = gamma_commutation_sides(-1, 1, mu, 8, Route::exponential);
            sink.expect_eq(sides.lhs, sides.rhs, "charged vertex commutation (exponential)",
                           "mu=" + mu.to_string());
            const StrictPartition smu(mu.parts().size() < 2 ? mu.parts() : std::vector<int>{});
            const auto nsides = gamma_hat_commutation_sides(-1, 1, smu, 8, Route::exponential);
            sink.expect_eq(nsides.lhs, nsides.rhs, "neutral vertex commutation (exponential)",
                           "mu=" + smu.to_string());
        });
    }
    return run_tasks("commutation", tasks, opts.threads);
}

RunReport verify_slices(const VerifyOptions& opts) {
    std::vector<SuiteTask> tasks;
    for (int n = 0; n <= 8; ++n) {
        tasks.push_back([n](CaseSink& sink) {
            const auto direct = enumerate_pp(n);
            const auto chains = enumerate_pp_by_chains(n);
            sink.expect(direct == chains, "row filling = chain generation", label("n", n),
                        [&] { return std::to_string(direct.size()) + " plane partitions"; },
                        [&] { return std::to_string(chains.size()) + " plane partitions"; });
            for (const auto& pi : direct) {
                const auto chain = diagonal_slices(pi);
                const auto back = from_slices(chain);
                sink.expect(back == pi, "slice round trip", pp_text(pi),
                            [&] { return pp_text(back); }, [&] { return pp_text(pi); });
                const bool ok = chain.is_interlacing_chain();
                sink.expect(ok, "slices interlace", pp_text(pi),
                            [ok] { return std::string(ok ? "true" : "false"); },
                            [] { return std::string("true"); });
                if (is_diagonally_strict(pi)) {
                    bool strict_ok = true;
                    for (int m = chain.first_index; m < chain.last_index(); ++m) {
                        const StrictPartition a(chain.slice(m).parts());
                        const StrictPartition b(chain.slice(m + 1).parts());
                        strict_ok = strict_ok &&
                                    (m < 0 ? strict_interlaces(a, b) : strict_interlaces(b, a));
                    }
                    bool plateau = false;
                    for (int i = 1; i <= static_cast<int>(pi.rows().size()); ++i) {
                        for (int j = 1; j <= static_cast<int>(pi.rows()[i - 1].size()); ++j) {
                            const int h = pi.at(i, j);
                            plateau = plateau || (h == pi.at(i + 1, j) && h == pi.at(i, j + 1) &&
                                                  h == pi.at(i + 1, j + 1));
                        }
                    }
                    sink.expect(strict_ok && !plateau, "strict chain without 2x2 plateau",
                                pp_text(pi), [&] {
                                    return std::string(strict_ok ? "" : "non-strict chain ") +
                                           (plateau ? "plateau" : "");
                                },
                                [] { return std::string("strict, no plateau"); });
                }
            }
            const auto dspp = enumerate_dspp(n);
            const auto dspp_chains = enumerate_dspp_by_chains(n);
            sink.expect(dspp == dspp_chains, "strict filter = strict chain generation",
                        label("n", n), [&] { return std::to_string(dspp.size()); },
                        [&] { return std::to_string(dspp_chains.size()); });
        });
    }
    tasks.push_back([](CaseSink& sink) {
        const PlanePartition fig({{4, 2, 1, 1, 1}, {3, 2, 1, 1}, {2, 1, 1}, {1}});
        SliceChain expected;
        expected.first_index = -4;
        for (const char* s : {"-", "1", "2", "3,1", "4,2,1", "2,1", "1,1", "1", "1", "-"}) {
            expected.slices.push_back(Partition::parse(s));
        }
        const auto got = diagonal_slices(fig);
        auto render = [](const SliceChain& c) {
            std::string out;
            for (int m = c.first_index; m <= c.last_index(); ++m) {
                out += "mu_" + std::to_string(m) + "=" + c.slice(m).to_string() + " ";
            }
            return out;
        };
        sink.expect(got == expected, "first figure slices", pp_text(fig),
                    [&] { return render(got); }, [&] { return render(expected); });
        const auto back = from_slices(got);
        sink.expect(back == fig, "first figure round trip", pp_text(fig),
                    [&] { return pp_text(back); }, [&] { return pp_text(fig); });
    });
    return run_tasks("slices", tasks, opts.threads);
}

RunReport verify_paths(const VerifyOptions& opts) {
    std::vector<SuiteTask> tasks;
    for (int n = 0; n <= 8; ++n) {
        tasks.push_back([n](CaseSink& sink) {
            for (const auto& pi : enumerate_dspp(n)) {
                const int cap2 = 2 * pi.weight();
                const QSeries expected =
                    QSeries::monomial(cap2, 2 * pi.weight(), CoefScalar(1L << path_count(pi)));
                sink.expect_eq(chain_weight(pi), expected, "chain weight = 2^p q^|pi|",
                               pp_text(pi));
            }
        });
    }
    tasks.push_back([](CaseSink& sink) {
        const PlanePartition fig({{4, 2, 1, 1, 1}, {3, 2, 1}, {2, 1, 1}, {1}});
        const bool strict = is_diagonally_strict(fig);
        sink.expect(strict, "second figure is diagonally strict", pp_text(fig),
                    [&] { return std::string(strict ? "true" : "false"); },
                    [] { return std::string("true"); });
        sink.expect_eq(fig.weight(), 20, "second figure weight", pp_text(fig));
        if (strict) {
            sink.expect_eq(path_count(fig), 6, "second figure paths", pp_text(fig));
        }
        sink.expect_eq(path_count(PlanePartition(std::vector<std::vector<int>>{{1}})), 1, "single box paths", "1");
        sink.expect_eq(path_count(PlanePartition(std::vector<std::vector<int>>{{1}, {1}})), 1, "column paths", "1/1/");
    });
    return run_tasks("paths", tasks, opts.threads);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"clifford", "heisenberg", "lemma1", "lemma2",
                                                "commutation", "slices", "paths", "all"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<RunReport> run_suite(const std::string& name, const VerifyOptions& opts) {
    using Runner = RunReport (*)(const VerifyOptions&);
    static const std::pair<const char*, Runner> runners[] = {
        {"clifford", verify_clifford}, {"heisenberg", verify_heisenberg},
        {"lemma1", verify_lemma1},     {"lemma2", verify_lemma2},
        {"commutation", verify_commutation}, {"slices", verify_slices},
        {"paths", verify_paths}};
    std::vector<RunReport> out;
    for (const auto& [n, run] : runners) {
        if (name == "all" || name == n) {
            out.push_back(run(opts));
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return out;
}

}  // namespace planefock
