#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace trinodiv::cli {

enum class OutputFormat { kText, kJson };

enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitResourceError = 2,
  kExitCounterexample = 3,
};

/// Outcome of one invocation. Serialized as a single record.
struct CommandResult {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
  bool ok = true;
  std::string message;
  int exit_code = kExitOk;
  OutputFormat format = OutputFormat::kText;
  /// Human-readable lines for text mode.
  std::vector<std::string> text;
};

/// Parses and executes argv (without the program name). Never throws.
CommandResult run(const std::vector<std::string>& args);

/// Text mode: the human lines, or "error: ..." on failure. JSON mode: one
/// object {command, inputs, outputs, status} on a single line.
std::string render(const CommandResult& result);

}  // namespace trinodiv::cli
