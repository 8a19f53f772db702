#include <gtest/gtest.h>

#include <sstream>

#include <popdist/verify.hpp>

using namespace popdist;
using namespace popdist::verify;

namespace {

void expect_all_pass(const std::vector<Check>& checks) {
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

}  // namespace

TEST(Suites, ClosedVsOracle) { expect_all_pass(run_suite("closed-vs-oracle", {8})); }
TEST(Suites, Thm4VsOracle) { expect_all_pass(run_suite("thm4-vs-oracle", {8})); }
TEST(Suites, Thm4VsClosed) { expect_all_pass(run_suite("thm4-vs-closed", {8})); }
TEST(Suites, Symmetry) { expect_all_pass(run_suite("symmetry", {8})); }
TEST(Suites, Structure) { expect_all_pass(run_suite("structure", {8})); }

TEST(Suites, SmallOrdersStillRun) {
  expect_all_pass(run_suite("all", {2}));
  expect_all_pass(run_suite("thm4-vs-oracle", {0}));
}

TEST(Suites, UnknownName) {
  EXPECT_FALSE(is_suite("everything"));
  EXPECT_THROW(run_suite("everything", {8}), DomainError);
}

TEST(Compare, ReportsFirstDifference) {
  using namespace popdist::vars;
  const auto c = compare("demo", (1 + u() * x()).truncate(2), (1 + 2 * u() * x()).truncate(2));
  EXPECT_FALSE(c.passed);
  EXPECT_EQ(c.detail, "first difference at u*x: 1 vs 2");
  std::ostringstream os;
  EXPECT_FALSE(report(os, {c, expect("fine", true)}));
  EXPECT_EQ(os.str(), "FAIL demo: first difference at u*x: 1 vs 2\nPASS fine\n");
}
