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

#include "testgen/inputs.hpp"

#include <set>

#include "core/errors.hpp"
#include "core/pyliteral.hpp"
#include "generator/code_extract.hpp"

namespace difforacle {

namespace {

std::optional<std::vector<TestInput>> json_inputs(std::string_view text) {
  Value j = Value::parse(trim(text), nullptr, false);
  if (j.is_discarded() || !j.is_array() || j.empty()) return std::nullopt;
  std::vector<TestInput> out;
  for (const auto& row : j) {
    if (!row.is_array()) return std::nullopt;
    TestInput in;
    for (const auto& a : row) in.args.push_back(a);
    out.push_back(std::move(in));
  }
  return out;
}

void add_unique(std::vector<TestInput>& dst, std::set<std::string>& seen, TestInput in) {
  if (seen.insert(canonical(Value(in.args))).second) dst.push_back(std::move(in));
}

}  // namespace

ParsedInputs parse_test_inputs(std::string_view reply, std::string_view entry_point) {
  ParsedInputs parsed;
  std::set<std::string> seen;

  std::vector<std::string> candidates{std::string(reply)};
  for (auto& b : all_fenced_blocks(reply)) candidates.push_back(std::move(b));
  for (const auto& c : candidates) {
    if (auto rows = json_inputs(c)) {
      for (auto& in : *rows) add_unique(parsed.inputs, seen, std::move(in));
      return parsed;
    }
  }

  std::size_t start = 0;
  while (start <= reply.size()) {
    auto end = reply.find('\n', start);
    if (end == std::string_view::npos) end = reply.size();
    std::string line = trim(reply.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.rfind("```", 0) == 0) continue;
    auto call = find_call(line, entry_point);
    if (!call) {
      ++parsed.warnings;
      continue;
    }
    add_unique(parsed.inputs, seen, TestInput{std::move(call->args), InputOrigin::Llm});
  }
  return parsed;
}

ParsedInputs generate_inputs(const ProgramUnderTest& put, LlmContext& llm, int inputs_per_prompt) {
  PromptContext ctx;
  ctx.source = put.source;
  ctx.entry_point = put.entry_point;
  ctx.n_inputs = inputs_per_prompt;
  ChatResponse resp = llm.ask(llm.render(PromptKind::GenerateInputs, ctx));
  ParsedInputs parsed = parse_test_inputs(resp.content, put.entry_point);
  if (parsed.inputs.empty())
    throw NoParsableInputs("no test input could be parsed from the reply (" +
                           std::to_string(parsed.warnings) + " malformed lines)");
  return parsed;
}

}  // namespace difforacle
