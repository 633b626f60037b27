#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubix/cli/report.hpp"

namespace cubix::cli {

// Stable exit status taxonomy.
enum class ExitCode : int {
  Ok = 0,
  VerdictFailed = 1,
  Usage = 2,         // unknown verb, missing or malformed option
  Parse = 3,         // input file syntax
  Guard = 4,         // size guards and limits
  Domain = 5,        // input parsed but violates a domain rule
  Io = 6,
  Internal = 7,
};

const std::vector<std::string>& verbs();

struct Manifest {
  std::string command;
  std::map<std::string, std::string> inputs;   // complex, wallspace, action, partition -> path
  std::map<std::string, std::string> options;  // subset, walls, from, to, generator, kind, params, seed, max-length
  std::optional<std::string> output;           // directory; stdout when absent
  bool dot = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Builds the report without touching the filesystem beyond reading inputs.
Report execute(const Manifest& manifest);

// execute + write (atomically into the output directory, or the text report
// and payloads to `out`). Errors go to `err` and map onto ExitCode.
int run(const Manifest& manifest, std::ostream& out, std::ostream& err);

}  // namespace cubix::cli
