#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pbound/caps.hpp"

namespace pbound {

struct CliConfig {
  std::string command;  // mul, bound, darboux, lv, analyze
  std::string system_text;
  std::string file;
  std::string at;      // "z0,w0" or "z0,inf"
  std::string line;    // "a,b,c"
  std::string params;  // "a,b,c"
  int max_degree = 2;
  bool json = false;
  std::string caps;  // same syntax as PBOUND_CAPS, applied after it
  int threads = 1;
};

enum ExitCode { kOk = 0, kFailure = 1, kParseError = 2, kInconclusive = 3 };

/// Runs one command and writes the report to `out`. Errors go to `out` as a
/// report with an "error" object.
int run(const CliConfig& config, std::ostream& out);

/// Parses argv with CLI11 and runs the command.
int run_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pbound
