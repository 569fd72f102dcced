#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dualhs/field.hpp"

namespace dualhs {

struct SessionFlags {
  std::uint64_t seed = 0;
  /// Overrides the script's field statement.
  std::optional<Field> field;
  std::size_t window = 0;
  int nmax = -1;
  /// json, csv or text; overrides report statements. Without it, reports
  /// use their own --format, and json otherwise.
  std::optional<std::string> format;
};

/// Syntax or definition error; aborts the session before any command runs.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct SessionResult {
  /// 0 when every command succeeded, 1 otherwise.
  int exit_status = 0;
  /// Everything written to standard output.
  std::string output;
  /// One line per failed command, for standard error.
  std::string diagnostics;
};

/// Parses the whole script, then runs its commands in order. Reports go to
/// stdout unless a report statement names a path. Throws ScriptError.
SessionResult run_session(const std::string& script, const SessionFlags& flags = {});

}  // namespace dualhs
