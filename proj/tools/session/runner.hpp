#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "session.hpp"

namespace pairmult::session {

struct TaskResult {
  std::size_t index = 0;
  std::string op;
  std::string name;
  bool ok = true;
  std::string error_kind;
  std::string error_message;
  /// Payload in emission order; values are integers, booleans, strings or
  /// lists of those.
  std::vector<std::pair<std::string, nlohmann::json>> fields;
  std::vector<std::string> assumptions;
  std::vector<std::string> assumption_notes;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> draws;

  /// "equal"/"holds" pass; any other verdict is an identity failure.
  bool identity_failed() const;
};

enum ExitCode : int { kExitOk = 0, kExitTaskError = 1, kExitIdentity = 2, kExitParse = 3 };

TaskResult run_task(const Session& s, std::size_t index);

/// Runs every task; up to `jobs` at a time, results in declaration order.
std::vector<TaskResult> run_session(const Session& s, unsigned jobs = 1);

int exit_code(const std::vector<TaskResult>& results);

std::string to_text(const TaskResult& r);
std::string to_json(const TaskResult& r);
/// One line per task in the session's output mode.
std::string render(const Session& s, const std::vector<TaskResult>& results);

}  // namespace pairmult::session
