#include <gtest/gtest.h>

#include "cqsym/error.hpp"
#include "cqsym/verify.hpp"

namespace cqsym {
namespace {

VerifyOptions small() {
  VerifyOptions options;
  options.colors = 2;
  options.max_size = 3;
  options.max_degree = 3;
  options.alphabet = 2;
  return options;
}

TEST(Verify, EverySuitePassesOnASmallGrid) {
  for (const auto& info : suites()) {
    const auto report = run_suite(info.name, small());
    EXPECT_TRUE(report.passed()) << info.name << ": " << (report.counterexamples.empty() ? "" : report.counterexamples[0]);
    EXPECT_GT(report.checks, 0U) << info.name;
    EXPECT_EQ(report.suite, info.name);
  }
}

TEST(Verify, UnknownSuiteAndBadGrid) {
  EXPECT_THROW(run_suite("nope", small()), ParseError);
  auto options = small();
  options.colors = 0;
  EXPECT_THROW(run_suite("hopf-axioms", options), InvariantError);
}

TEST(Verify, ReportKeepsFirstCounterexamples) {
  SuiteReport report;
  int described = 0;
  for (int i = 0; i < 10; ++i) {
    report.expect(i % 2 == 0, [&] {
      ++described;
      return std::to_string(i);
    });
  }
  EXPECT_EQ(report.checks, 10U);
  EXPECT_EQ(report.failures, 5U);
  EXPECT_EQ(described, 5);
  EXPECT_EQ(report.counterexamples.front(), "1");
  EXPECT_FALSE(report.passed());
  SuiteReport total;
  total.absorb(report);
  total.absorb(report);
  EXPECT_EQ(total.failures, 10U);
  EXPECT_EQ(total.counterexamples.size(), SuiteReport::kMaxCounterexamples);
}

TEST(Verify, DimensionRows) {
  const auto rows = dimension_rows(3, 4);
  ASSERT_EQ(rows.size(), 4U);
  const std::uint64_t qsym[] = {3, 12, 48, 192};
  const std::uint64_t peak[] = {3, 9, 30, 99};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(rows[i].qsym_enumerated, qsym[i]);
    EXPECT_EQ(rows[i].qsym_formula, qsym[i]);
    EXPECT_EQ(rows[i].peak_recurrence, peak[i]);
    EXPECT_EQ(rows[i].peak_enumerated, peak[i]);
    EXPECT_EQ(rows[i].peak_rank, peak[i]);
  }
}

}  // namespace
}  // namespace cqsym
