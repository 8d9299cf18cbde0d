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

#include "baseline/baseline.hpp"

#include "core/pyliteral.hpp"

namespace difforacle {

std::optional<TestCase> parse_asserted_test_case(std::string_view reply,
                                                 std::string_view entry_point) {
  std::size_t start = 0;
  while (start <= reply.size()) {
    auto end = reply.find('\n', start);
    if (end == std::string_view::npos) end = reply.size();
    std::string_view line = reply.substr(start, end - start);
    start = end + 1;

    auto call = find_call(line, entry_point);
    if (!call) continue;
    std::size_t pos = call->end;
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::string_view rest = line.substr(pos);
    std::size_t skip = 0;
    if (rest.rfind("==", 0) == 0) skip = 2;
    else if (rest.rfind("->", 0) == 0 || rest.rfind("=>", 0) == 0) skip = 2;
    else continue;
    pos += skip;
    auto expected = parse_literal_prefix(line, pos);
    if (!expected) continue;
    TestCase tc;
    tc.input.args = std::move(call->args);
    tc.input.origin = InputOrigin::Llm;
    tc.expected = std::move(*expected);
    return tc;
  }
  return std::nullopt;
}

PipelineOutcome base_chatgpt_find(const ProgramUnderTest& put, LlmContext& llm) {
  PipelineOutcome out;
  out.technique = "base_chatgpt";
  out.put_id = put.id;
  out.entry_point = put.entry_point;
  out.status = PipelineStatus::NotFound;

  PromptContext ctx;
  ctx.source = put.source;
  ctx.entry_point = put.entry_point;
  ChatRequest ask_bug = llm.render(PromptKind::BaselineHasBug, ctx);
  ChatResponse answer = llm.ask(ask_bug);
  Answer verdict = classify_answer(answer.content, llm.keywords);
  out.details["answer"] = std::string(to_string(verdict));
  out.details["has_bug_reply"] = answer.content;

  if (verdict == Answer::Negative) {
    out.disposition = "no_bug_claimed";
    return out;
  }
  if (verdict == Answer::Inconclusive) {
    out.disposition = "inconclusive";
    return out;
  }

  std::vector<ChatMessage> history = ask_bug.messages;
  history.push_back({Role::Assistant, answer.content});
  ChatResponse test_reply = llm.ask(
      continue_conversation(std::move(history), llm.render(PromptKind::BaselineMakeTest, ctx)));
  out.details["test_reply"] = test_reply.content;

  auto tc = parse_asserted_test_case(test_reply.content, put.entry_point);
  if (!tc) {
    out.disposition = "unparsable_test_case";
    out.details["error"] = "UnparsableTestCase";
    return out;
  }
  out.disposition = "test_case_parsed";
  out.status = PipelineStatus::Found;
  out.test_case = std::move(tc);
  return out;
}

}  // namespace difforacle
