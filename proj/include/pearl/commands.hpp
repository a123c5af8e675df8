#pragma once

// Drivers behind the `engine` executable. Each command is a pure function of
// the dataset file and options; output ordering is stable.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "pearl/pearl_core.hpp"

namespace pearl {

enum ExitCode : int {
  kExitOk = 0,
  kExitStructural = 1,
  kExitExpectation = 2,
  kExitInput = 3,
};

struct CommandOptions {
  std::optional<DegreeWindow> window;
  bool ambient = false;
  bool json = false;
  bool write = false;  // fmt: rewrite the file in place
};

/// "a..b" with inclusive bounds; throws SchemaError when malformed.
DegreeWindow parse_window(const std::string& text);

/// The path itself if it exists, else the same name (with ".json" appended
/// if missing) under $ENGINE_CORPUS_DIR.
std::filesystem::path resolve_dataset_path(const std::string& arg);

/// command is one of check, les, euler, product, classical, periodicity, fmt.
int run_command(const std::string& command, const std::string& file, const CommandOptions& options,
                std::ostream& out, std::ostream& err);

}  // namespace pearl
