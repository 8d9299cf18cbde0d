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

#include "core/errors.hpp"
#include "sandbox/sandbox.hpp"

namespace difforacle::wire {

Value syntax_check_command(const std::string& source) {
  return Value{{"op", "syntax_check"}, {"source", source}};
}

Value execute_command(const std::string& source, const std::string& entry_point,
                      const std::vector<Value>& args, int timeout_ms) {
  return Value{{"op", "execute"},
               {"source", source},
               {"entry_point", entry_point},
               {"args", Value(args)},
               {"timeout_ms", timeout_ms}};
}

SyntaxCheck parse_syntax_reply(const Value& reply) {
  if (!reply.is_object() || !reply.contains("ok") || !reply["ok"].is_boolean())
    throw SandboxError("malformed syntax_check reply: " + reply.dump());
  SyntaxCheck sc;
  sc.ok = reply["ok"].get<bool>();
  if (reply.contains("diagnostic") && reply["diagnostic"].is_string())
    sc.diagnostic = reply["diagnostic"].get<std::string>();
  if (reply.contains("warnings") && reply["warnings"].is_array())
    for (const auto& w : reply["warnings"])
      if (w.is_string()) sc.warnings.push_back(w.get<std::string>());
  return sc;
}

ExecutionResult parse_execute_reply(const Value& reply) {
  if (!reply.is_object() || !reply.contains("status"))
    throw SandboxError("malformed execute reply: " + reply.dump());
  if (reply["status"] == "error")
    throw SandboxError("harness error: " + reply.value("message", std::string("unknown")));
  return execution_result_from_json(reply);
}

bool is_banner(const Value& line) {
  return line.is_object() && line.value("ready", false) &&
         line.value("proto", 0) == kProtocolVersion;
}

}  // namespace difforacle::wire
