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

#include "llm/client.hpp"

#include <fstream>
#include <thread>

#include "core/errors.hpp"

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"

namespace difforacle {

HttpTransport::HttpTransport(HttpOptions options) : options_(std::move(options)) {
  if (!options_.sleep)
    options_.sleep = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  const std::string& url = options_.base_url;
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("base URL needs a scheme: " + url);
  auto path_start = url.find('/', scheme_end + 3);
  scheme_host_port_ = url.substr(0, path_start);
  path_prefix_ = path_start == std::string::npos ? "" : url.substr(path_start);
  while (!path_prefix_.empty() && path_prefix_.back() == '/') path_prefix_.pop_back();
}

ChatResponse HttpTransport::send(const ChatRequest& req) {
  Value body = to_json(req);
  const std::string path = path_prefix_ + "/chat/completions";
  httplib::Headers headers;
  if (!options_.api_key.empty()) headers.emplace("Authorization", "Bearer " + options_.api_key);

  std::string last_error;
  bool rate_limited = false;
  for (int attempt = 0; attempt < options_.max_attempts; ++attempt) {
    if (attempt > 0) options_.sleep(options_.base_delay * (1 << (attempt - 1)));
    httplib::Client cli(scheme_host_port_);
    cli.set_read_timeout(options_.read_timeout);
    cli.set_connection_timeout(std::chrono::seconds(30));
    auto res = cli.Post(path, headers, body.dump(), "application/json");
    if (!res) {
      last_error = "connection failed: " + httplib::to_string(res.error());
      rate_limited = false;
      continue;
    }
    if (res->status == 429 || res->status >= 500) {
      rate_limited = res->status == 429;
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200)
      throw HttpError("HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 500));
    Value j = Value::parse(res->body, nullptr, false);
    if (j.is_discarded() || !j.contains("choices") || j["choices"].empty())
      throw HttpError("malformed chat completion: " + res->body.substr(0, 500));
    const auto& choice = j["choices"][0];
    ChatResponse out;
    const auto& msg = choice.value("message", Value::object());
    if (msg.contains("content") && msg["content"].is_string())
      out.content = msg["content"].get<std::string>();
    if (choice.contains("finish_reason") && choice["finish_reason"].is_string())
      out.finish_reason = choice["finish_reason"].get<std::string>();
    if (j.contains("usage") && j["usage"].contains("total_tokens"))
      out.usage_tokens = j["usage"]["total_tokens"].get<std::int64_t>();
    return out;
  }
  std::string msg = "gave up after " + std::to_string(options_.max_attempts) +
                    " attempts: " + last_error;
  if (rate_limited) throw RateLimited(msg);
  throw HttpError(msg);
}

namespace {
ChatResponse scripted_response(const Value& r) {
  if (r.is_string()) return ChatResponse{r.get<std::string>(), "stop", 0};
  return chat_response_from_json(r);
}
}  // namespace

ScriptedTransport::ScriptedTransport(const Value& script) {
  if (!script.contains("rules") || !script["rules"].is_array())
    throw ConfigError("response script needs a 'rules' array");
  for (const auto& r : script["rules"]) {
    Rule rule;
    rule.contains = r.value("contains", std::string());
    for (const auto& resp : r.value("responses", Value::array()))
      rule.responses.push_back(scripted_response(resp));
    rules_.push_back(std::move(rule));
  }
}

std::shared_ptr<ScriptedTransport> ScriptedTransport::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read response script: " + path);
  Value j = Value::parse(in, nullptr, false);
  if (j.is_discarded()) throw ConfigError("response script is not valid JSON: " + path);
  return std::make_shared<ScriptedTransport>(j);
}

ChatResponse ScriptedTransport::send(const ChatRequest& req) {
  std::lock_guard lock(mu_);
  ++calls_;
  const std::string& prompt = req.messages.empty() ? std::string() : req.messages.back().content;
  for (auto& rule : rules_) {
    if (!rule.contains.empty() && prompt.find(rule.contains) == std::string::npos) continue;
    if (rule.next >= rule.responses.size()) continue;
    return rule.responses[rule.next++];
  }
  throw ScriptExhausted("no scripted response left for prompt: " + prompt.substr(0, 120));
}

std::size_t ScriptedTransport::calls() const {
  std::lock_guard lock(mu_);
  return calls_;
}

LlmClient::LlmClient(std::shared_ptr<ChatTransport> transport) : transport_(std::move(transport)) {}

ChatResponse LlmClient::complete(const ChatRequest& req, Cassette& cassette) {
  validate(req);
  if (cassette.mode() == CassetteMode::Replay) {
    auto fp = fingerprint(req);
    if (auto hit = cassette.next(fp)) return *hit;
    std::string preview = req.messages.back().content.substr(0, 80);
    throw CassetteMiss("no unconsumed cassette entry for request " + fp.substr(0, 12) + " (" +
                       preview + "...)");
  }
  if (!transport_) throw LlmError("no chat transport configured (network disabled)");
  ChatResponse resp = transport_->send(req);
  if (cassette.mode() == CassetteMode::Record) cassette.append(req, resp);
  return resp;
}

}  // namespace difforacle
