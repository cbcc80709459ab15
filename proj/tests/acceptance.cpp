// Acceptance run: one PASS/FAIL line per criterion, each an exact check over
// a fixed grid within a wall-clock limit. Exits nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "cqsym/verify.hpp"

namespace {

using cqsym::SuiteReport;
using cqsym::VerifyOptions;

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
  VerifyOptions grid;
  std::optional<double> limit_seconds;
  std::string scope;
};

VerifyOptions grid(int colors, int max_size, int max_degree, int alphabet = 3) {
  VerifyOptions out;
  out.colors = colors;
  out.max_size = max_size;
  out.max_degree = max_degree;
  out.alphabet = alphabet;
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "dimension tables", {"dimension-counts"}, grid(3, 0, 5), 10.0, "m<=3, n<=5"},
      {2, "worked examples", {"golden-examples"}, grid(1, 0, 0), 1.0, "fixed examples"},
      {3, "Hopf axioms", {"hopf-axioms"}, grid(2, 5, 4), 60.0, "m<=2, |P|<=5, n<=4"},
      {4, "morphisms", {"gamma-morphism", "lambda-morphism", "theta-morphism"}, grid(2, 5, 5), 60.0, "m<=2, |P|<=5, n<=5"},
      {5, "oracle differential", {"oracle-equivalence"}, grid(2, 4, 4, 3), 120.0, "m<=2, |P|<=4, N<=3"},
      {6, "antipode formulas", {"antipode-consistency"}, grid(2, 4, 4), std::nullopt, "m<=2, n<=4, |P|<=4"},
      {7, "characters", {"character-group", "nu-counting"}, grid(2, 4, 4), std::nullopt, "m<=2, |P|<=4"},
      {8, "universality", {"universality"}, grid(2, 4, 4), std::nullopt, "m<=2, |P|<=4"},
  };

  bool all_passed = true;
  for (const auto& criterion : criteria) {
    SuiteReport total;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      for (const auto& suite : criterion.suites) total.absorb(cqsym::run_suite(suite, criterion.grid));
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = !criterion.limit_seconds || seconds < *criterion.limit_seconds;
    const bool passed = error.empty() && total.passed() && total.checks > 0 && in_time;
    all_passed = all_passed && passed;

    const std::string limit =
        criterion.limit_seconds ? "limit " + std::to_string(static_cast<int>(*criterion.limit_seconds)) + " s" : "no limit";
    std::printf("%s %d %-20s %8zu checks %4zu failures %7.2f s (%s) [%s]\n", passed ? "PASS" : "FAIL", criterion.number,
                criterion.title.c_str(), total.checks, total.failures, seconds, limit.c_str(),
                criterion.scope.c_str());
    if (!error.empty()) std::printf("     error: %s\n", error.c_str());
    for (const auto& example : total.counterexamples) std::printf("     %s\n", example.c_str());
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
