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
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "llm/cassette.hpp"
#include "llm/chat.hpp"

namespace difforacle {

// Something that can answer a chat request: an HTTP endpoint or a script.
class ChatTransport {
 public:
  virtual ~ChatTransport() = default;
  virtual ChatResponse send(const ChatRequest& req) = 0;
};

struct HttpOptions {
  std::string base_url = "https://api.openai.com/v1";
  std::string api_key;
  int max_attempts = 5;
  std::chrono::milliseconds base_delay{1000};
  std::chrono::seconds read_timeout{120};
  // Replaced in tests to avoid real sleeping.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// OpenAI-compatible POST {base_url}/chat/completions. Transient failures
// (connection errors, 429, 5xx) are retried with exponential backoff.
class HttpTransport final : public ChatTransport {
 public:
  explicit HttpTransport(HttpOptions options);
  ChatResponse send(const ChatRequest& req) override;

 private:
  HttpOptions options_;
  std::string scheme_host_port_;
  std::string path_prefix_;
};

// Offline responder driven by a JSON script:
//   {"rules": [{"contains": "<substring of the last user message>",
//               "responses": ["...", {"content": "...", "finish_reason": "stop"}]}]}
// The first rule whose `contains` matches (a rule without it matches
// everything) and still has responses left answers the request.
class ScriptedTransport final : public ChatTransport {
 public:
  explicit ScriptedTransport(const Value& script);
  static std::shared_ptr<ScriptedTransport> from_file(const std::string& path);

  ChatResponse send(const ChatRequest& req) override;
  std::size_t calls() const;

 private:
  struct Rule {
    std::string contains;
    std::vector<ChatResponse> responses;
    std::size_t next = 0;
  };
  mutable std::mutex mu_;
  std::vector<Rule> rules_;
  std::size_t calls_ = 0;
};

// Routes requests through a cassette: replay answers from the transcript,
// record forwards to the transport and appends, passthrough only forwards.
class LlmClient {
 public:
  explicit LlmClient(std::shared_ptr<ChatTransport> transport = nullptr);

  ChatResponse complete(const ChatRequest& req, Cassette& cassette);

 private:
  std::shared_ptr<ChatTransport> transport_;
};

}  // namespace difforacle
