#include <set>

#include <gtest/gtest.h>

#include <ggk/verify.hpp>

using namespace ggk;

TEST(Verify, SerialAndParallelReportsAgree) {
    VerifyConfig cfg;
    cfg.max_n = 9;
    VerifyReport serial = run_verify(cfg);
    cfg.parallelism = 4;
    VerifyReport parallel = run_verify(cfg);
    EXPECT_EQ(serial.text(), parallel.text());
    EXPECT_TRUE(serial.ok()) << serial.text();
    EXPECT_EQ(serial.trees, 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
    EXPECT_EQ(serial.check_ids.size(), registered_checks().size());
}

TEST(Verify, SingleVertex) {
    VerifyConfig cfg;
    cfg.max_n = 1;
    VerifyReport r = run_verify(cfg);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.trees, 1);
    EXPECT_EQ(r.text().rfind("verify max_n=1 trees=1 checks=", 0), 0u);
}

TEST(Verify, InjectedViolationIsReported) {
    VerifyConfig cfg;
    cfg.max_n = 3;
    cfg.checks = {"oracle"};
    cfg.inject_violation = true;
    VerifyReport r = run_verify(cfg);
    EXPECT_FALSE(r.ok());
    ASSERT_EQ(r.violation_lines.size(), 1u);
    EXPECT_EQ(r.violation_lines[0].rfind("VIOLATION harness:injected ", 0), 0u);
    EXPECT_NE(r.text().find("violations 1\n"), std::string::npos);
}

TEST(Verify, SelectedChecksOnly) {
    VerifyConfig cfg;
    cfg.max_n = 6;
    cfg.checks = {"k23", "stems"};
    VerifyReport r = run_verify(cfg);
    EXPECT_EQ(r.check_ids, (std::vector<std::string>{"k23", "stems"}));
    EXPECT_GT(r.instances[0], 0);
    EXPECT_TRUE(r.ok());
}

TEST(Verify, RejectsBadConfig) {
    VerifyConfig cfg;
    cfg.checks = {"nope"};
    EXPECT_THROW(run_verify(cfg), precondition_error);
    cfg.checks.clear();
    cfg.max_n = 0;
    EXPECT_THROW(run_verify(cfg), precondition_error);
    cfg.max_n = verify_cap() + 1;
    EXPECT_THROW(run_verify(cfg), precondition_error);
    cfg.max_n = 3;
    cfg.parallelism = 0;
    EXPECT_THROW(run_verify(cfg), precondition_error);
}

TEST(Verify, CheckIdsAreUnique) {
    std::set<std::string> ids;
    for (const auto& c : registered_checks()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_EQ(ids.size(), 21u);
}
