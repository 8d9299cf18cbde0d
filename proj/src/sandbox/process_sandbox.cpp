// Copyright 2026 The difforacle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sandbox/process_sandbox.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <fcntl.h>
#include <poll.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include "core/errors.hpp"

namespace difforacle {

namespace {
using Clock = std::chrono::steady_clock;

std::string errno_text(const char* what) { return std::string(what) + ": " + std::strerror(errno); }
}  // namespace

ProcessSandbox::ProcessSandbox(HarnessOptions options) : options_(std::move(options)) {
  if (options_.command.empty()) throw ConfigError("harness command is empty");
}

ProcessSandbox::~ProcessSandbox() { stop(); }

void ProcessSandbox::spawn() {
  int sv[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, sv) != 0)
    throw SandboxError(errno_text("socketpair"));

  std::vector<char*> argv;
  for (auto& a : options_.command) argv.push_back(a.data());
  argv.push_back(nullptr);

  pid_t pid = ::fork();
  if (pid < 0) {
    ::close(sv[0]);
    ::close(sv[1]);
    throw SandboxError(errno_text("fork"));
  }
  if (pid == 0) {
    ::dup2(sv[1], STDIN_FILENO);
    ::dup2(sv[1], STDOUT_FILENO);
    if (!options_.inherit_stderr) {
      int devnull = ::open("/dev/null", O_WRONLY);
      if (devnull >= 0) ::dup2(devnull, STDERR_FILENO);
    }
    ::execvp(argv[0], argv.data());
    ::_exit(127);
  }
  ::close(sv[1]);
  pid_ = pid;
  fd_ = sv[0];
  buffer_.clear();
  ++spawns_;

  auto line = read_line(Clock::now() + options_.control_timeout);
  if (!line) {
    stop();
    throw HarnessCrash("harness did not announce readiness in time");
  }
  Value banner = Value::parse(*line, nullptr, false);
  if (!wire::is_banner(banner)) {
    stop();
    throw HarnessCrash("unexpected harness banner: " + *line);
  }
}

void ProcessSandbox::stop() {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
  if (pid_ > 0) {
    ::kill(pid_, SIGKILL);
    int status = 0;
    while (::waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
    }
    pid_ = -1;
  }
  buffer_.clear();
}

void ProcessSandbox::ensure_running() {
  if (pid_ <= 0) spawn();
}

void ProcessSandbox::send_line(const std::string& line) {
  std::string data = line + "\n";
  std::size_t off = 0;
  while (off < data.size()) {
    ssize_t n = ::send(fd_, data.data() + off, data.size() - off, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      stop();
      throw HarnessCrash(errno_text("write to harness"));
    }
    off += static_cast<std::size_t>(n);
  }
}

std::optional<std::string> ProcessSandbox::read_line(Clock::time_point deadline) {
  while (true) {
    auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return line;
    }
    auto remaining =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
    if (remaining <= 0) return std::nullopt;
    pollfd pfd{fd_, POLLIN, 0};
    int rc = ::poll(&pfd, 1, static_cast<int>(remaining));
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw SandboxError(errno_text("poll"));
    }
    if (rc == 0) return std::nullopt;
    char chunk[65536];
    ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      stop();
      throw HarnessCrash(errno_text("read from harness"));
    }
    if (n == 0) {
      stop();
      throw HarnessCrash("harness process exited");
    }
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

SyntaxCheck ProcessSandbox::syntax_check(const std::string& source) {
  ensure_running();
  send_line(wire::syntax_check_command(source).dump());
  auto line = read_line(Clock::now() + options_.control_timeout);
  if (!line) {
    stop();
    throw HarnessCrash("harness did not answer syntax_check");
  }
  return wire::parse_syntax_reply(Value::parse(*line, nullptr, false));
}

ExecutionResult ProcessSandbox::execute(const std::string& source, const std::string& entry_point,
                                        const std::vector<Value>& args, int timeout_ms) {
  ensure_running();
  auto start = Clock::now();
  send_line(wire::execute_command(source, entry_point, args, timeout_ms).dump());
  auto line = read_line(start + std::chrono::milliseconds(timeout_ms));
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  if (!line) {
    // The harness is still running the subject; kill it and respawn lazily.
    stop();
    return ExecutionResult::timeout(elapsed);
  }
  Value reply = Value::parse(*line, nullptr, false);
  if (reply.is_discarded()) {
    stop();
    throw HarnessCrash("unparsable harness reply: " + line->substr(0, 200));
  }
  auto result = wire::parse_execute_reply(reply);
  result.wall_time_ms = elapsed;
  return result;
}

SandboxFactory process_sandbox_factory(HarnessOptions options) {
  return [options]() -> std::unique_ptr<Sandbox> {
    return std::make_unique<ProcessSandbox>(options);
  };
}

}  // namespace difforacle
