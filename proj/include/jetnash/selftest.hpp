#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jetnash {

inline constexpr std::uint64_t kDefaultSelfTestSeed = 20240917;

struct SuiteResult {
  explicit SuiteResult(std::string suiteName = {}) : name(std::move(suiteName)) {}

  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;
};

struct SelfTestReport {
  std::uint64_t seed = kDefaultSelfTestSeed;
  std::vector<SuiteResult> suites;

  bool ok() const;
  /// One line per suite, then a final PASS or FAIL line.
  std::string render() const;
};

/// Runs the bundled golden suite (or `goldenJson` in its place) followed by
/// randomized property suites seeded with `seed`. Failures are reported,
/// never thrown.
SelfTestReport runSelfTest(std::uint64_t seed = kDefaultSelfTestSeed,
                           const std::optional<std::string>& goldenJson = std::nullopt);

/// The bundled golden problem document.
const char* bundledGoldenProblem();

}  // namespace jetnash
