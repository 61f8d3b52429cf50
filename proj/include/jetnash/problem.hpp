#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "jetnash/errors.hpp"
#include "jetnash/nash.hpp"

namespace jetnash {

/// Malformed problem document. Maps to exit code 2 in the CLI.
class InputError : public Error {
 public:
  using Error::Error;
};

struct ResourceLimits {
  unsigned maxJetOrder = 8;
  std::size_t maxMinorSize = 16;
  std::size_t maxPairs = 1'000'000;
  std::size_t maxMinorCount = 100'000;
  std::uint64_t maxInputDegree = 64;
};

/// Problem document: a module presentation plus the jet orders to compute
/// and, optionally, expected ideal presentations keyed by jet order.
struct ProblemSpec {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> relations;
  std::vector<std::vector<std::string>> matrix;
  std::size_t rank = 1;
  std::vector<unsigned> jetOrders;
  std::map<unsigned, std::string> expected;
  std::optional<std::string> witness;
  ResourceLimits limits;
};

ProblemSpec problemSpecFromJson(const nlohmann::json& doc);
ProblemSpec parseProblemSpec(std::string_view jsonText);

struct RunOptions {
  std::optional<unsigned> jetOrder;  ///< replaces spec.jetOrders
  bool interreduce = true;
  unsigned threads = 1;
};

struct OrderVerification {
  std::string expression;
  bool equal = false;
  std::string report;
};

struct OrderResult {
  unsigned jetOrder = 0;
  std::size_t blockRows = 0;  ///< r
  std::size_t blockCols = 0;  ///< s
  std::vector<std::vector<std::string>> jetMatrix;
  std::vector<std::string> generators;
  std::vector<std::string> jetRelations;
  std::optional<std::vector<std::string>> mainComponent;
  std::optional<OrderVerification> verification;
  double elapsedMs = 0;
};

struct ResultDocument {
  std::string name;
  std::vector<std::string> variables;
  std::size_t rank = 1;
  std::vector<std::string> relations;
  std::vector<std::string> warnings;
  std::vector<OrderResult> orders;

  bool hasVerification() const;
  bool allVerified() const;
};

/// Runs the pipeline for every requested jet order (plus any order named
/// only in `expected`). Throws InputError for invalid documents and
/// ResourceLimitError when a cap is exceeded.
ResultDocument runCompute(const ProblemSpec& spec, const RunOptions& options = {});

/// Canonical JSON rendering. Timings are omitted unless requested so that
/// the default output is byte-stable.
nlohmann::ordered_json toJson(const ResultDocument& doc, bool includeTimings = false);
std::string renderText(const ResultDocument& doc, bool includeTimings = false);

/// Draws M_n with block separators, one line per row.
std::string renderBlockMatrix(const std::vector<std::vector<std::string>>& entries,
                              std::size_t blockRows, std::size_t blockCols);

}  // namespace jetnash
