#include <gtest/gtest.h>

#include "json.hpp"
#include "planefock/verify.hpp"

using namespace planefock;

TEST(RunTasks, FailuresKeepTaskOrder) {
    std::vector<SuiteTask> tasks;
    for (int i = 0; i < 40; ++i) {
        tasks.push_back([i](CaseSink& sink) {
            sink.expect_eq(i % 7, 0, "divisible by 7", std::to_string(i));
        });
    }
    const RunReport one = run_tasks("t", tasks, 1);
    const RunReport many = run_tasks("t", tasks, 8);
    EXPECT_EQ(one.cases, 40);
    ASSERT_EQ(one.failures.size(), many.failures.size());
    for (std::size_t k = 0; k < one.failures.size(); ++k) {
        EXPECT_EQ(one.failures[k].inputs, many.failures[k].inputs);
    }
    EXPECT_EQ(one.failures.front().inputs, "1");
    EXPECT_EQ(one.failures.front().lhs, "1");
    EXPECT_EQ(one.failures.front().rhs, "0");
    EXPECT_FALSE(one.passed());
}

TEST(RunReport, JsonShape) {
    RunReport r;
    r.suite = "x";
    r.cases = 3;
    r.failures.push_back({"c", "i", "l", "r"});
    const auto j = nlohmann::json::parse(r.to_json());
    EXPECT_EQ(j["suite"], "x");
    EXPECT_EQ(j["cases"], 3);
    EXPECT_EQ(j["failures"][0]["lhs"], "l");
}

TEST(Suites, NamesAndUnknown) {
    EXPECT_TRUE(is_suite("all"));
    EXPECT_TRUE(is_suite("lemma2"));
    EXPECT_FALSE(is_suite("nosuch"));
    EXPECT_THROW(run_suite("nosuch"), std::invalid_argument);
}

TEST(Suites, FastSuitesPass) {
    VerifyOptions opts;
    opts.threads = 4;
    for (const char* name : {"slices", "paths"}) {
        const auto reports = run_suite(name, opts);
        ASSERT_EQ(reports.size(), 1u);
        EXPECT_TRUE(reports[0].passed()) << reports[0].to_text();
        EXPECT_GT(reports[0].cases, 0);
    }
}
