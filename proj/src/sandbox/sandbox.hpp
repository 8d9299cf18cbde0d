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

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "core/taxonomy.hpp"

namespace difforacle {

struct SyntaxCheck {
  bool ok = false;
  std::string diagnostic;
  std::vector<std::string> warnings;
};

// Executes subject programs. One instance serves one worker at a time.
class Sandbox {
 public:
  virtual ~Sandbox() = default;

  virtual SyntaxCheck syntax_check(const std::string& source) = 0;

  // Subject exceptions and timeouts are reported in the result; only
  // infrastructure failures throw (SandboxError).
  virtual ExecutionResult execute(const std::string& source, const std::string& entry_point,
                                  const std::vector<Value>& args,
                                  int timeout_ms = kDefaultTimeoutMs) = 0;
};

using SandboxFactory = std::function<std::unique_ptr<Sandbox>()>;

// Wire protocol (newline-delimited JSON), shared by hosts and harnesses.
namespace wire {
inline constexpr int kProtocolVersion = 1;

Value syntax_check_command(const std::string& source);
Value execute_command(const std::string& source, const std::string& entry_point,
                      const std::vector<Value>& args, int timeout_ms);
SyntaxCheck parse_syntax_reply(const Value& reply);
ExecutionResult parse_execute_reply(const Value& reply);
bool is_banner(const Value& line);
}  // namespace wire

}  // namespace difforacle
