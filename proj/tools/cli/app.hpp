#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace schurpol::cli {

/// Result of one CLI invocation, before anything is written.
struct Outcome {
  int exit_code = 0;          // 0 ok / identity holds, 1 identity fails, 2 usage error
  nlohmann::json document;    // {command, params, result[, elapsed_ms]}
  bool pretty = false;
  std::string message;        // usage text or error for standard error
  std::string help;           // --help output for standard output
};

/// Parses and runs one invocation (argv without the program name). Does no I/O.
Outcome execute(const std::vector<std::string>& args);

/// execute() plus output: JSON (or --pretty text) to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable rendering used by --pretty.
std::string render_pretty(const nlohmann::json& document);

/// Thread budget: explicit value if positive, else SCHURPOL_THREADS, else hardware concurrency.
int resolve_threads(int requested);

}  // namespace schurpol::cli
