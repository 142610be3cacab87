#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "antiunify/generator.hpp"
#include "json_output.hpp"

namespace antiunify::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  /// A decision came out negative ("check" found no witness, ...).
  kExitNo = 1,
  kExitUsage = 2,
  kExitTooLarge = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads generator settings from a JSON object whose keys are the
/// GeneratorConfig field names. Unknown keys throw InvalidConfig.
GeneratorConfig generator_config_from_json(const Json& j, GeneratorConfig base = {});

}  // namespace antiunify::cli
