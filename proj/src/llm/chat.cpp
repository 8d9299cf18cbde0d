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

#include "llm/chat.hpp"

#include <cctype>
#include <openssl/evp.h>

#include "core/errors.hpp"

namespace difforacle {

std::string_view to_string(Role r) {
  switch (r) {
    case Role::System: return "system";
    case Role::User: return "user";
    case Role::Assistant: return "assistant";
  }
  return "user";
}

Role parse_role(std::string_view s) {
  if (s == "system") return Role::System;
  if (s == "user") return Role::User;
  if (s == "assistant") return Role::Assistant;
  throw ConfigError("unknown chat role '" + std::string(s) + "'");
}

void validate(const ChatRequest& req) {
  if (req.messages.empty()) throw ConfigError("chat request has no messages");
  if (req.messages.back().role != Role::User)
    throw ConfigError("last chat message must come from the user");
  if (!(req.temperature >= 0.0 && req.temperature <= 2.0))
    throw ConfigError("temperature must lie in [0, 2]");
}

Value to_json(const ChatRequest& req) {
  Value msgs = Value::array();
  for (const auto& m : req.messages)
    msgs.push_back({{"role", std::string(to_string(m.role))}, {"content", m.content}});
  return Value{{"model", req.model}, {"temperature", req.temperature}, {"messages", msgs}};
}

ChatRequest chat_request_from_json(const Value& j) {
  ChatRequest req;
  req.model = j.value("model", std::string(kDefaultModel));
  req.temperature = j.value("temperature", 1.0);
  for (const auto& m : j.at("messages"))
    req.messages.push_back({parse_role(m.at("role").get<std::string>()),
                            m.at("content").get<std::string>()});
  return req;
}

Value to_json(const ChatResponse& resp) {
  return Value{{"content", resp.content},
               {"finish_reason", resp.finish_reason},
               {"usage_tokens", resp.usage_tokens}};
}

ChatResponse chat_response_from_json(const Value& j) {
  ChatResponse r;
  r.content = j.value("content", std::string());
  r.finish_reason = j.value("finish_reason", std::string("stop"));
  r.usage_tokens = j.value("usage_tokens", std::int64_t{0});
  return r;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("CryptoError", "SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

std::string fingerprint(const ChatRequest& req) {
  ChatRequest normalized = req;
  for (auto& m : normalized.messages) m.content = normalize_whitespace(m.content);
  return sha256_hex(to_json(normalized).dump());
}

}  // namespace difforacle
