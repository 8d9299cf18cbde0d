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

#include <gtest/gtest.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <atomic>
#include <fstream>
#include <thread>

#include "core/errors.hpp"
#include "llm/answer.hpp"
#include "llm/cassette.hpp"
#include "llm/chat.hpp"
#include "llm/client.hpp"
#include "llm/prompts.hpp"
#include "test_support.hpp"

namespace difforacle {
namespace {

ChatRequest user(std::string text, double temperature = 0.2) {
  ChatRequest r;
  r.temperature = temperature;
  r.messages.push_back({Role::User, std::move(text)});
  return r;
}

TEST(Chat, Sha256MatchesKnownDigests) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Chat, FingerprintIgnoresWhitespaceLayout) {
  EXPECT_EQ(fingerprint(user("What is\n the  intention?")), fingerprint(user("What is the intention? ")));
  EXPECT_NE(fingerprint(user("a")), fingerprint(user("b")));
  EXPECT_NE(fingerprint(user("a", 0.2)), fingerprint(user("a", 1.0)));
  ChatRequest other = user("a");
  other.model = "another-model";
  EXPECT_NE(fingerprint(user("a")), fingerprint(other));
  EXPECT_EQ(fingerprint(user("a")).size(), 64u);
}

TEST(Chat, ValidateRejectsMalformedRequests) {
  EXPECT_THROW(validate(ChatRequest{}), ConfigError);
  EXPECT_THROW(validate(user("x", 2.5)), ConfigError);
  ChatRequest ends_with_assistant = user("x");
  ends_with_assistant.messages.push_back({Role::Assistant, "y"});
  EXPECT_THROW(validate(ends_with_assistant), ConfigError);
  EXPECT_NO_THROW(validate(user("x")));
}

TEST(Chat, JsonRoundTrip) {
  ChatRequest r = user("hello");
  r.messages.insert(r.messages.begin(), {Role::System, "sys"});
  EXPECT_EQ(chat_request_from_json(to_json(r)), r);
  ChatResponse resp{"text", "length", 12};
  EXPECT_EQ(chat_response_from_json(to_json(resp)), resp);
}

TEST(Cassette, ReplaysIdenticalRequestsInOrder) {
  testing::TempDir dir;
  auto path = dir.path() / "c.jsonl";
  {
    Cassette rec = Cassette::open_record(path);
    rec.append(user("q"), {"first", "stop", 0});
    rec.append(user("other"), {"x", "stop", 0});
    rec.append(user("q"), {"second", "stop", 0});
  }
  Cassette rep = Cassette::open_replay(path);
  EXPECT_EQ(rep.size(), 3u);
  auto fp = fingerprint(user("q"));
  EXPECT_EQ(rep.next(fp)->content, "first");
  EXPECT_EQ(rep.next(fp)->content, "second");
  EXPECT_FALSE(rep.next(fp));
  EXPECT_EQ(rep.consumed(), 2u);
}

TEST(Cassette, MissingFileReplaysAsEmpty) {
  Cassette rep = Cassette::open_replay("/nonexistent/cassette.jsonl");
  EXPECT_EQ(rep.size(), 0u);
  LlmClient client;
  EXPECT_THROW(client.complete(user("q"), rep), CassetteMiss);
}

TEST(Cassette, SaveAndReload) {
  testing::TempDir dir;
  Cassette c(CassetteMode::Record);
  c.append(user("q"), {"a", "stop", 3});
  c.save(dir.path() / "s.jsonl");
  Cassette back = Cassette::open_replay(dir.path() / "s.jsonl");
  ASSERT_EQ(back.entries().size(), 1u);
  EXPECT_EQ(back.entries()[0].response.usage_tokens, 3);
  EXPECT_EQ(back.entries()[0].fingerprint, fingerprint(user("q")));
}

TEST(Cassette, RejectsCorruptLines) {
  testing::TempDir dir;
  std::ofstream(dir.path() / "bad.jsonl") << "{not json\n";
  EXPECT_THROW(Cassette::open_replay(dir.path() / "bad.jsonl"), Error);
}

TEST(ScriptedTransport, MatchesRulesInOrder) {
  ScriptedTransport t(testing::script({{"alpha", {"A1", "A2"}}, {"", {"fallback"}}}));
  EXPECT_EQ(t.send(user("say alpha")).content, "A1");
  EXPECT_EQ(t.send(user("beta")).content, "fallback");
  EXPECT_EQ(t.send(user("alpha again")).content, "A2");
  EXPECT_THROW(t.send(user("alpha")), ScriptExhausted);
  EXPECT_EQ(t.calls(), 4u);
}

TEST(LlmClient, RecordModeAppendsToCassette) {
  auto t = std::make_shared<ScriptedTransport>(testing::script({{"", {"r1", "r2"}}}));
  LlmClient client(t);
  Cassette rec(CassetteMode::Record);
  EXPECT_EQ(client.complete(user("a"), rec).content, "r1");
  EXPECT_EQ(client.complete(user("b"), rec).content, "r2");
  EXPECT_EQ(rec.size(), 2u);

  Cassette rep(CassetteMode::Replay);
  for (auto& e : rec.entries()) rep.add_entry(e);
  LlmClient offline;
  EXPECT_EQ(offline.complete(user("b"), rep).content, "r2");
  EXPECT_EQ(offline.complete(user("a"), rep).content, "r1");
  EXPECT_THROW(offline.complete(user("a"), rep), CassetteMiss);
}

TEST(LlmClient, PassthroughWithoutTransportFails) {
  LlmClient client;
  Cassette c;
  EXPECT_THROW(client.complete(user("a"), c), LlmError);
}

// Local OpenAI-compatible endpoint that fails a configurable number of times.
class FakeEndpoint {
 public:
  explicit FakeEndpoint(int failures, int failure_status)
      : failures_(failures), failure_status_(failure_status) {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                                httplib::Response& res) {
      ++requests_;
      last_auth_ = req.get_header_value("Authorization");
      last_body_ = req.body;
      if (failures_-- > 0) {
        res.status = failure_status_;
        res.set_content("{}", "application/json");
        return;
      }
      res.set_content(
          R"({"choices": [{"message": {"role": "assistant", "content": "pong"},
              "finish_reason": "stop"}], "usage": {"total_tokens": 7}})",
          "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeEndpoint() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }
  int requests() const { return requests_; }
  std::string last_auth() const { return last_auth_; }
  std::string last_body() const { return last_body_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> failures_;
  int failure_status_;
  std::atomic<int> requests_{0};
  std::string last_auth_;
  std::string last_body_;
};

HttpOptions options_for(const FakeEndpoint& ep, std::vector<std::chrono::milliseconds>* sleeps) {
  HttpOptions o;
  o.base_url = ep.url();
  o.api_key = "test-key";
  o.sleep = [sleeps](std::chrono::milliseconds d) { sleeps->push_back(d); };
  return o;
}

TEST(HttpTransport, PostsChatCompletion) {
  FakeEndpoint ep(0, 500);
  std::vector<std::chrono::milliseconds> sleeps;
  HttpTransport t(options_for(ep, &sleeps));
  auto resp = t.send(user("ping"));
  EXPECT_EQ(resp.content, "pong");
  EXPECT_EQ(resp.usage_tokens, 7);
  EXPECT_EQ(ep.last_auth(), "Bearer test-key");
  auto body = Value::parse(ep.last_body());
  EXPECT_EQ(body["model"], kDefaultModel);
  EXPECT_EQ(body["messages"][0]["content"], "ping");
  EXPECT_TRUE(sleeps.empty());
}

TEST(HttpTransport, RetriesTransientFailuresWithBackoff) {
  FakeEndpoint ep(2, 429);
  std::vector<std::chrono::milliseconds> sleeps;
  HttpTransport t(options_for(ep, &sleeps));
  EXPECT_EQ(t.send(user("ping")).content, "pong");
  EXPECT_EQ(ep.requests(), 3);
  ASSERT_EQ(sleeps.size(), 2u);
  EXPECT_EQ(sleeps[0], std::chrono::milliseconds(1000));
  EXPECT_EQ(sleeps[1], std::chrono::milliseconds(2000));
}

TEST(HttpTransport, GivesUpAfterMaxAttempts) {
  FakeEndpoint limited(100, 429);
  std::vector<std::chrono::milliseconds> sleeps;
  HttpTransport t(options_for(limited, &sleeps));
  EXPECT_THROW(t.send(user("ping")), RateLimited);
  EXPECT_EQ(limited.requests(), 5);

  FakeEndpoint broken(100, 503);
  HttpTransport t2(options_for(broken, &sleeps));
  try {
    t2.send(user("ping"));
    FAIL() << "expected HttpError";
  } catch (const RateLimited&) {
    FAIL() << "5xx is not a rate limit";
  } catch (const HttpError&) {
  }
}

TEST(HttpTransport, ClientErrorsAreNotRetried) {
  FakeEndpoint ep(1, 401);
  std::vector<std::chrono::milliseconds> sleeps;
  HttpTransport t(options_for(ep, &sleeps));
  EXPECT_THROW(t.send(user("ping")), HttpError);
  EXPECT_EQ(ep.requests(), 1);
}

TEST(HttpTransport, RejectsUrlWithoutScheme) {
  HttpOptions o;
  o.base_url = "localhost:8080";
  EXPECT_THROW(HttpTransport{o}, ConfigError);
}

PromptLibrary library() { return PromptLibrary::load(testing::templates_dir()); }

TEST(Prompts, ShippedTemplatesRender) {
  auto lib = library();
  PromptContext ctx;
  ctx.source = "def gcd(a, b):\n    return a\n";
  ctx.entry_point = "gcd";
  ctx.n_inputs = 10;
  auto req = lib.render(PromptKind::GenerateInputs, ctx);
  ASSERT_EQ(req.messages.size(), 1u);
  const auto& text = req.messages[0].content;
  EXPECT_NE(text.find("Generate 10 diverse test inputs"), std::string::npos);
  EXPECT_NE(text.find("def gcd(a, b):"), std::string::npos);
  EXPECT_EQ(text.find("##"), std::string::npos);
  EXPECT_DOUBLE_EQ(req.temperature, 1.0);
  EXPECT_EQ(req.model, kDefaultModel);
  for (auto kind : kAllPromptKinds) EXPECT_FALSE(lib.text(kind).empty());
}

TEST(Prompts, IntentionPromptUsesLowTemperature) {
  PromptContext ctx;
  ctx.source = "x";
  ctx.entry_point = "f";
  EXPECT_DOUBLE_EQ(library().render(PromptKind::InferIntention, ctx).temperature, 0.2);
}

TEST(Prompts, MissingPlaceholderValueThrows) {
  PromptContext ctx;
  ctx.entry_point = "f";
  EXPECT_THROW(library().render(PromptKind::InferIntention, ctx), MissingPlaceholder);
  EXPECT_THROW(substitute_placeholders("{intention}", {}), MissingPlaceholder);
  EXPECT_EQ(substitute_placeholders("{unknown} {n_versions}", {.n_versions = 2}), "{unknown} 2");
}

TEST(Prompts, ReferencePromptNeverSeesTheSource) {
  PromptContext ctx;
  ctx.intention = "compute gcd";
  ctx.entry_point = "gcd";
  ctx.n_versions = 2;
  auto req = library().render(PromptKind::GenerateReferences, ctx);
  EXPECT_NE(req.messages[0].content.find("compute gcd"), std::string::npos);
  ctx.source = "def gcd(a, b): pass";
  EXPECT_THROW(library().render(PromptKind::GenerateReferences, ctx), ConfigError);

  std::array<std::string, kAllPromptKinds.size()> texts;
  for (auto& t : texts) t = "{entry_point}";
  texts[static_cast<std::size_t>(PromptKind::GenerateReferences)] = "{intention} {source}";
  EXPECT_THROW(PromptLibrary::from_texts(texts), ConfigError);
}

TEST(Prompts, MissingTemplateDirectory) {
  EXPECT_THROW(PromptLibrary::load("/nonexistent/templates"), IoError);
}

TEST(Prompts, ContinueConversationPrependsHistory) {
  auto req = continue_conversation({{Role::User, "q1"}, {Role::Assistant, "a1"}}, user("q2"));
  ASSERT_EQ(req.messages.size(), 3u);
  EXPECT_EQ(req.messages[1].content, "a1");
  EXPECT_EQ(req.messages[2].content, "q2");
}

TEST(Answer, ClassifiesYesNoReplies) {
  EXPECT_EQ(classify_answer("Yes, there is an off-by-one error."), Answer::Affirmative);
  EXPECT_EQ(classify_answer("The recursive call passes the wrong argument."), Answer::Affirmative);
  EXPECT_EQ(classify_answer("No bug is found in this program."), Answer::Negative);
  EXPECT_EQ(classify_answer("No, the function is correct."), Answer::Negative);
  EXPECT_EQ(classify_answer("This program does not contain bugs."), Answer::Negative);
  EXPECT_EQ(classify_answer("More information is required to decide."), Answer::Inconclusive);
  EXPECT_EQ(classify_answer("It computes a value."), Answer::Inconclusive);
}

}  // namespace
}  // namespace difforacle
