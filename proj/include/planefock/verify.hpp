#pragma once

#include <functional>
#include <string>
#include <vector>

namespace planefock {

struct Failure {
    std::string check;
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct RunReport {
    std::string suite;
    long cases = 0;
    std::vector<Failure> failures;
    double seconds = 0.0;

    bool passed() const { return failures.empty(); }
    std::string to_text() const;
    std::string to_json() const;
};

/// Records checks made by one task; merged into a RunReport in task order.
class CaseSink {
public:
    void expect(bool ok, const std::string& check, const std::string& inputs,
                const std::function<std::string()>& lhs,
                const std::function<std::string()>& rhs);
    template <typename T>
    void expect_eq(const T& lhs, const T& rhs, const std::string& check,
                   const std::string& inputs) {
        expect(lhs == rhs, check, inputs, [&] { return render(lhs); }, [&] { return render(rhs); });
    }

    long cases = 0;
    std::vector<Failure> failures;

private:
    template <typename T>
    static std::string render(const T& v) {
        if constexpr (requires { v.to_string(); }) {
            return v.to_string();
        } else {
            return std::to_string(v);
        }
    }
};

using SuiteTask = std::function<void(CaseSink&)>;

/// Runs tasks on up to `threads` workers; the report lists failures in task
/// order regardless of scheduling.
RunReport run_tasks(const std::string& suite, const std::vector<SuiteTask>& tasks, int threads);

struct VerifyOptions {
    int threads = 1;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one named suite; "all" runs every suite and concatenates the
/// reports. Throws std::invalid_argument for an unknown name.
std::vector<RunReport> run_suite(const std::string& name, const VerifyOptions& opts = {});

RunReport verify_clifford(const VerifyOptions& opts = {});
RunReport verify_heisenberg(const VerifyOptions& opts = {});
RunReport verify_lemma1(const VerifyOptions& opts = {});
RunReport verify_lemma2(const VerifyOptions& opts = {});
RunReport verify_commutation(const VerifyOptions& opts = {});
RunReport verify_slices(const VerifyOptions& opts = {});
RunReport verify_paths(const VerifyOptions& opts = {});

}  // namespace planefock
