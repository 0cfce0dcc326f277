#pragma once

// Command-line frontend. `run` is the whole program minus process setup, so
// tests can drive it in-process.

#include <ostream>

namespace bqc::cli {

inline constexpr const char *kSchemaVersion = "1";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,       // bad flag or parameter outside its domain
  kUnwritable = 3,  // output path cannot be opened
  kInternal = 4,
};

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace bqc::cli
