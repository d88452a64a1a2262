#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tclass/semigroup_oracle.hpp"
#include "tclass/spec_io.hpp"

namespace tclass {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 pass, 1 usage or parse error, 2 verification failure.
enum ExitCode : int { kExitPass = 0, kExitUsage = 1, kExitVerifyFailed = 2 };

struct CommandResult {
  int exit_code = kExitPass;
  OrderedJson report;
};

CommandResult cmd_classify(const DomainSpec& spec, const Json& ideal);
CommandResult cmd_decompose(const DomainSpec& spec);

struct VerifyOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t closure_budget = 256;
  /// Expected Cayley table of the closure of the spec's seeds.
  std::optional<FiniteCommSemigroup> table;
};

CommandResult cmd_verify(const DomainSpec& spec, const VerifyOptions& options);

/// The plain-text rendering of a report.
std::string render_text(const OrderedJson& report);

/// Entry point of the command line tool; argv[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tclass
