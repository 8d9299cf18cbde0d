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

#pragma once

#include <chrono>
#include <string>
#include <sys/types.h>
#include <vector>

#include "sandbox/sandbox.hpp"

namespace difforacle {

struct HarnessOptions {
  // argv of the harness process, e.g. {"python3", "-u", "harness.py"}.
  std::vector<std::string> command;
  // Deadline for the startup banner and for syntax_check replies.
  std::chrono::milliseconds control_timeout{10000};
  bool inherit_stderr = false;
};

// Host side of the harness protocol: one long-lived child process speaking
// newline-delimited JSON over a socketpair bound to its stdin/stdout. A reply
// that misses its deadline kills the child; the next command respawns it.
class ProcessSandbox final : public Sandbox {
 public:
  explicit ProcessSandbox(HarnessOptions options);
  ~ProcessSandbox() override;

  ProcessSandbox(const ProcessSandbox&) = delete;
  ProcessSandbox& operator=(const ProcessSandbox&) = delete;

  SyntaxCheck syntax_check(const std::string& source) override;
  ExecutionResult execute(const std::string& source, const std::string& entry_point,
                          const std::vector<Value>& args, int timeout_ms) override;

  // Number of harness processes spawned so far (restarts included).
  int spawn_count() const { return spawns_; }

 private:
  void ensure_running();
  void spawn();
  void stop();
  void send_line(const std::string& line);
  // Empty optional on deadline expiry. Throws HarnessCrash on EOF.
  std::optional<std::string> read_line(std::chrono::steady_clock::time_point deadline);

  HarnessOptions options_;
  pid_t pid_ = -1;
  int fd_ = -1;
  std::string buffer_;
  int spawns_ = 0;
};

SandboxFactory process_sandbox_factory(HarnessOptions options);

}  // namespace difforacle
