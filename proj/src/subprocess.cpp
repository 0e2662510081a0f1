#include "sygus/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <stdexcept>
#include <thread>

namespace sygus {

std::vector<std::string> shell_split(const std::string& command) {
  std::vector<std::string> out;
  std::string word;
  bool in_word = false;
  char quote = 0;
  for (char c : command) {
    if (quote) {
      if (c == quote) quote = 0;
      else word += c;
    } else if (c == '\'' || c == '"') {
      quote = c;
      in_word = true;
    } else if (c == ' ' || c == '\t' || c == '\n') {
      if (in_word) out.push_back(std::move(word));
      word.clear();
      in_word = false;
    } else {
      word += c;
      in_word = true;
    }
  }
  if (quote) throw std::runtime_error("unterminated quote in command: " + command);
  if (in_word) out.push_back(std::move(word));
  return out;
}

namespace {

// Set in the child between fork and exec; 0 disables.
thread_local std::size_t g_child_memory_mb = 0;

[[noreturn]] void child_exec(const std::vector<std::string>& argv, int in_fd, int out_fd) {
  dup2(in_fd, STDIN_FILENO);
  dup2(out_fd, STDOUT_FILENO);
  if (g_child_memory_mb) {
    rlimit lim;
    lim.rlim_cur = lim.rlim_max = static_cast<rlim_t>(g_child_memory_mb) * 1024 * 1024;
    setrlimit(RLIMIT_AS, &lim);
  }
  std::vector<char*> cargv;
  for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
  cargv.push_back(nullptr);
  execvp(cargv[0], cargv.data());
  // Only reached when exec fails; 127 is the shell convention.
  _exit(127);
}

} // namespace

Subprocess::~Subprocess() {
  if (pid_ > 0 && !reaped_) {
    kill_hard();
    wait();
  }
  if (stdin_fd_ >= 0) close(stdin_fd_);
  if (stdout_fd_ >= 0) close(stdout_fd_);
}

void Subprocess::start(const std::vector<std::string>& argv) {
  if (argv.empty()) throw std::runtime_error("empty command");
  if (pid_ > 0 && !reaped_) throw std::runtime_error("process already running");
  if (stdin_fd_ >= 0) close_stdin();
  if (stdout_fd_ >= 0) {
    close(stdout_fd_);
    stdout_fd_ = -1;
  }
  int to_child[2], from_child[2];
  if (pipe(to_child) != 0 || pipe(from_child) != 0)
    throw std::runtime_error("pipe failed: " + std::string(strerror(errno)));

  pid_ = fork();
  if (pid_ < 0) throw std::runtime_error("fork failed: " + std::string(strerror(errno)));
  if (pid_ == 0) {
    close(to_child[1]);
    close(from_child[0]);
    child_exec(argv, to_child[0], from_child[1]);
  }
  close(to_child[0]);
  close(from_child[1]);
  stdin_fd_ = to_child[1];
  stdout_fd_ = from_child[0];
  reaped_ = false;
}

bool Subprocess::running() const {
  if (pid_ <= 0 || reaped_) return false;
  return ::kill(pid_, 0) == 0 && waitpid(pid_, nullptr, WNOHANG) == 0;
}

void Subprocess::write_stdin(const std::string& data) {
  if (stdin_fd_ < 0) throw std::runtime_error("stdin already closed");
  // The child may die mid-write; surface that as an error, not SIGPIPE.
  signal(SIGPIPE, SIG_IGN);
  std::size_t off = 0;
  while (off < data.size()) {
    ssize_t n = write(stdin_fd_, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw std::runtime_error("write to child failed: " + std::string(strerror(errno)));
    }
    off += static_cast<std::size_t>(n);
  }
}

void Subprocess::close_stdin() {
  if (stdin_fd_ >= 0) {
    close(stdin_fd_);
    stdin_fd_ = -1;
  }
}

std::optional<std::string> Subprocess::read_some(double timeout_seconds) {
  if (stdout_fd_ < 0) return std::nullopt;
  pollfd pfd{stdout_fd_, POLLIN, 0};
  int ms = timeout_seconds <= 0 ? 0 : static_cast<int>(timeout_seconds * 1000);
  int r = poll(&pfd, 1, ms);
  if (r == 0) return std::string();  // deadline, no data
  if (r < 0) {
    if (errno == EINTR) return std::string();
    throw std::runtime_error("poll failed: " + std::string(strerror(errno)));
  }
  char buf[65536];
  ssize_t n = read(stdout_fd_, buf, sizeof buf);
  if (n > 0) return std::string(buf, static_cast<std::size_t>(n));
  return std::nullopt;  // EOF (or the child closed its end)
}

void Subprocess::kill_hard() {
  if (pid_ > 0 && !reaped_) ::kill(pid_, SIGKILL);
}

int Subprocess::wait() {
  if (pid_ <= 0) return exit_code_;
  if (!reaped_) {
    int status = 0;
    while (waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
    }
    reaped_ = true;
    if (WIFEXITED(status)) exit_code_ = WEXITSTATUS(status);
    else if (WIFSIGNALED(status)) exit_code_ = -WTERMSIG(status);
  }
  return exit_code_;
}

RunOutput run_with_limits(const std::vector<std::string>& argv, double wall_limit_seconds,
                          std::optional<std::size_t> memory_mb) {
  RunOutput out;
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  Subprocess child;
  g_child_memory_mb = memory_mb.value_or(0);
  try {
    child.start(argv);
  } catch (const std::runtime_error&) {
    g_child_memory_mb = 0;
    out.spawn_failed = true;
    out.exit_code = 127;
    return out;
  }
  g_child_memory_mb = 0;
  child.close_stdin();

  bool eof = false;
  while (!eof) {
    double left = wall_limit_seconds - elapsed();
    if (left <= 0) {
      out.timed_out = true;
      child.kill_hard();
      break;
    }
    auto chunk = child.read_some(std::min(left, 0.25));
    if (!chunk) eof = true;
    else out.stdout_text += *chunk;
  }
  // An exec failure surfaces as immediate exit 127 with no output.
  out.exit_code = child.wait();
  if (!out.timed_out && out.exit_code == 127 && out.stdout_text.empty()) out.spawn_failed = true;
  out.wall_seconds = elapsed();
  // The child was killed at the limit; kill and reap latency is the
  // harness's own time, not the child's.
  if (out.timed_out) out.wall_seconds = std::min(out.wall_seconds, wall_limit_seconds);
  return out;
}

} // namespace sygus
