#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sygus {

// Split a command line into argv words (whitespace, with '' and "" quoting).
std::vector<std::string> shell_split(const std::string& command);

// A child process with piped stdin/stdout.  stderr passes through.
class Subprocess {
public:
  Subprocess() = default;
  ~Subprocess();
  Subprocess(const Subprocess&) = delete;
  Subprocess& operator=(const Subprocess&) = delete;

  // Throws std::runtime_error when the executable cannot be spawned.
  void start(const std::vector<std::string>& argv);
  bool running() const;

  void write_stdin(const std::string& data);
  void close_stdin();

  // Read whatever is available within the deadline; empty return means the
  // deadline passed with no data.  nullopt means the child closed stdout.
  std::optional<std::string> read_some(double timeout_seconds);

  void kill_hard();
  // Reap the child; returns exit code, or -signal when signal-terminated.
  int wait();

  int pid() const { return pid_; }

private:
  int pid_ = -1;
  int stdin_fd_ = -1;
  int stdout_fd_ = -1;
  int exit_code_ = 0;
  bool reaped_ = false;
};

struct RunOutput {
  int exit_code = 0;        // -signal when signal-terminated
  bool timed_out = false;
  bool spawn_failed = false;
  double wall_seconds = 0;
  std::string stdout_text;
};

// Run argv to completion, capturing stdout, killing at the wall limit.
// On timeout, wall_seconds is capped at the limit (the charged time, not
// the harness's kill latency).  memory_mb, when set, becomes an
// address-space rlimit in the child.
RunOutput run_with_limits(const std::vector<std::string>& argv, double wall_limit_seconds,
                          std::optional<std::size_t> memory_mb = std::nullopt);

} // namespace sygus
