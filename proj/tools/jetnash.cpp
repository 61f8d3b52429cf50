// jetnash: ideals whose blow-ups compactify Nash transformations on jet
// schemes, computed as minors of the jet block matrix M_n.
//
// Exit codes: 0 success / verified, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jetnash/problem.hpp"
#include "jetnash/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw jetnash::InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Flags {
  std::string file;
  std::string format = "text";
  int jetOrder = -1;
  bool noInterreduce = false;
  unsigned threads = 1;
  bool timings = false;
};

jetnash::ResultDocument run(const Flags& flags) {
  jetnash::ProblemSpec spec = jetnash::parseProblemSpec(readFile(flags.file));
  jetnash::RunOptions options;
  if (flags.jetOrder >= 0) options.jetOrder = static_cast<unsigned>(flags.jetOrder);
  options.interreduce = !flags.noInterreduce;
  options.threads = flags.threads;
  return jetnash::runCompute(spec, options);
}

int compute(const Flags& flags) {
  const auto doc = run(flags);
  if (flags.format == "json")
    std::cout << jetnash::toJson(doc, flags.timings).dump(2) << "\n";
  else
    std::cout << jetnash::renderText(doc, flags.timings);
  return doc.allVerified() ? kExitOk : kExitVerificationFailed;
}

int verify(const Flags& flags) {
  jetnash::ProblemSpec spec = jetnash::parseProblemSpec(readFile(flags.file));
  if (spec.expected.empty()) throw jetnash::InputError("verify: the problem has no 'expected' presentations");
  const auto doc = run(flags);
  if (flags.format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& o : doc.orders)
      if (o.verification)
        out.push_back({{"jetOrder", o.jetOrder},
                       {"equal", o.verification->equal},
                       {"report", o.verification->report}});
    std::cout << nlohmann::ordered_json{{"verified", doc.allVerified()}, {"results", out}}.dump(2) << "\n";
  } else {
    for (const auto& o : doc.orders)
      if (o.verification)
        std::cout << (o.verification->equal ? "PASS" : "FAIL") << " a_" << o.jetOrder << ": "
                  << o.verification->report << "\n";
    std::cout << (doc.allVerified() ? "VERIFIED" : "NOT VERIFIED") << "\n";
  }
  return doc.allVerified() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jet-scheme Nash transformation ideals"};
  app.require_subcommand(1);
  Flags flags;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("file", flags.file, "Problem document (JSON)")->required();
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--jet-order", flags.jetOrder, "Compute only this jet order")
        ->check(CLI::Range(0, 1000));
    cmd->add_flag("--no-interreduce", flags.noInterreduce, "Report the raw deduplicated minors");
    cmd->add_option("--threads", flags.threads, "Worker threads for minor determinants")
        ->check(CLI::Range(1u, 256u));
    cmd->add_flag("--timings", flags.timings, "Include per-order timings in the output");
  };

  auto* computeCmd = app.add_subcommand("compute", "Compute a_n for the requested jet orders");
  addCommon(computeCmd);
  auto* verifyCmd = app.add_subcommand("verify", "Check a_n against the expected presentations");
  addCommon(verifyCmd);

  auto* selftestCmd = app.add_subcommand("selftest", "Run the golden and randomized self-test suites");
  std::uint64_t seed = jetnash::kDefaultSelfTestSeed;
  std::string goldenFile;
  selftestCmd->add_option("--seed", seed, "Seed for the randomized suites");
  selftestCmd->add_option("--golden", goldenFile, "Use this problem document as the golden suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*computeCmd) return compute(flags);
    if (*verifyCmd) return verify(flags);
    if (*selftestCmd) {
      std::optional<std::string> golden;
      if (!goldenFile.empty()) golden = readFile(goldenFile);
      const auto report = jetnash::runSelfTest(seed, golden);
      std::cout << report.render();
      return report.ok() ? kExitOk : kExitVerificationFailed;
    }
  } catch (const jetnash::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
