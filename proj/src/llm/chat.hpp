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

#include <string>
#include <vector>

#include "core/value.hpp"

namespace difforacle {

enum class Role { System, User, Assistant };

struct ChatMessage {
  Role role = Role::User;
  std::string content;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

inline constexpr const char* kDefaultModel = "gpt-3.5-turbo-0301";

struct ChatRequest {
  std::string model = kDefaultModel;
  double temperature = 1.0;
  std::vector<ChatMessage> messages;

  friend bool operator==(const ChatRequest&, const ChatRequest&) = default;
};

struct ChatResponse {
  std::string content;
  std::string finish_reason = "stop";
  std::int64_t usage_tokens = 0;

  friend bool operator==(const ChatResponse&, const ChatResponse&) = default;
};

std::string_view to_string(Role r);
Role parse_role(std::string_view s);

// Throws ConfigError unless messages are non-empty, the last one is from the
// user and temperature lies in [0, 2].
void validate(const ChatRequest& req);

Value to_json(const ChatRequest& req);
ChatRequest chat_request_from_json(const Value& j);
Value to_json(const ChatResponse& resp);
ChatResponse chat_response_from_json(const Value& j);

// Collapses whitespace runs to one space and trims both ends.
std::string normalize_whitespace(std::string_view text);

// SHA-256 hex of (model, temperature, messages) with normalized content.
std::string fingerprint(const ChatRequest& req);

std::string sha256_hex(std::string_view data);

}  // namespace difforacle
