#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "deltanil/group_type.hpp"
#include "deltanil/render.hpp"

namespace deltanil {

enum class Subcommand { kAlpha, kUas, kClass, kUcs, kOracle, kCheck };

struct RenderOptions {
  RenderFormat format = RenderFormat::kText;
  std::optional<std::string> output_path;  // stdout when empty
  std::optional<int> step;                 // -t for alpha/ucs
  std::uint64_t max_order = 0;             // oracle guard (0 = default)
  std::uint64_t seed = 0;                  // check
  int count = 0;                           // check
};

struct CliInvocation {
  Subcommand sub = Subcommand::kClass;
  std::optional<GroupType> group;  // absent for `check`
  RenderOptions options;
};

/// Thrown by parse_args when --help is requested; carries the help text.
struct HelpRequested {
  std::string text;
};

/// Parses the argument vector (without argv[0]). Throws UsageError with a
/// one-line hint on malformed input, including group validation failures.
CliInvocation parse_args(const std::vector<std::string>& args);

/// Runs a parsed invocation. Returns the process exit code: 0 on success,
/// 1 on a computational assertion failure (reported to `err`).
int run_cli(const CliInvocation& inv, std::ostream& out, std::ostream& err);

/// Full entry point used by the binary; maps UsageError to exit code 2.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace deltanil
