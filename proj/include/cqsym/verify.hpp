#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cqsym {

/// Parameter grid of a verification suite. Every suite sweeps m = 1..colors.
struct VerifyOptions {
  int colors = 2;
  /// Largest poset size.
  int max_size = 4;
  /// Largest degree of a colored composition.
  int max_degree = 4;
  /// Oracle alphabets N = 1..alphabet.
  int alphabet = 3;
  /// Seeds the sampled checks (random pairs).
  std::uint64_t seed = 1;
};

/// Outcome of one suite: how many identities were checked and the first
/// few that failed.
struct SuiteReport {
  static constexpr std::size_t kMaxCounterexamples = 5;

  std::string suite;
  VerifyOptions options;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;

  bool passed() const noexcept { return failures == 0; }

  /// Counts one check; `describe` is only called on failure.
  void expect(bool ok, const std::function<std::string()>& describe);
  /// Folds another report's counts and counterexamples into this one.
  void absorb(const SuiteReport& other);
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  /// Grid completing in well under a minute on one core.
  VerifyOptions defaults;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo& suite_info(const std::string& name);

/// Throws ParseError("suite") for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

/// One row of the dimension table for QSym^(m)_n and its peak subalgebra.
struct DimensionRow {
  int colors = 1;
  int n = 0;
  std::uint64_t qsym_formula = 0;      // m (m + 1)^(n - 1)
  std::uint64_t qsym_enumerated = 0;   // colored compositions listed
  std::uint64_t peak_recurrence = 0;   // f_{m,n}
  std::uint64_t peak_enumerated = 0;   // peak compositions listed
  std::uint64_t peak_rank = 0;         // rank of the K expansions in M
};

std::vector<DimensionRow> dimension_rows(int colors, int max_n);

}  // namespace cqsym
