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

#include "generator/generator.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "generator/code_extract.hpp"

namespace difforacle {

void GenerationConfig::validate() const {
  if (n_versions < 2) throw ConfigError("n_versions must be at least 2");
  if (max_regen_rounds < 0) throw ConfigError("max_regen_rounds must be non-negative");
}

bool intention_is_vague(const std::string& text) {
  std::istringstream in(text);
  int words = 0;
  for (std::string w; in >> w;) ++words;
  if (words < 6) return true;
  std::string lowered = text;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const char* marker : {"unclear", "does nothing", "not clear", "cannot determine",
                             "can't determine", "placeholder", "no implementation",
                             "not implemented", "empty function"}) {
    if (lowered.find(marker) != std::string::npos) return true;
  }
  return false;
}

Intention infer_intention(const ProgramUnderTest& put, LlmContext& llm) {
  if (trim(put.source).empty()) throw ConfigError("program '" + put.id + "' has no source");
  PromptContext ctx;
  ctx.source = put.source;
  ctx.entry_point = put.entry_point;
  ChatResponse resp = llm.ask(llm.render(PromptKind::InferIntention, ctx));

  Intention intention;
  intention.put_id = put.id;
  intention.raw_response = resp.content;
  intention.text = extract_intention_text(resp.content);
  if (intention.text.empty())
    throw EmptyIntention("no intention could be extracted for '" + put.id + "'");
  intention.low_confidence = intention_is_vague(intention.text);
  return intention;
}

std::vector<ReferenceVersion> generate_references(const Intention& intention,
                                                  const ProgramUnderTest& put,
                                                  const GenerationConfig& cfg, LlmContext& llm,
                                                  Sandbox& sandbox, GenerationLog* log) {
  cfg.validate();
  if (intention.text.empty()) throw EmptyIntention("intention text is empty");
  GenerationLog local;
  GenerationLog& stats = log ? *log : local;

  PromptContext ctx;
  ctx.intention = intention.text;
  ctx.entry_point = put.entry_point;
  ctx.n_versions = cfg.n_versions;
  const ChatRequest req = llm.render(PromptKind::GenerateReferences, ctx);

  auto shared_intention = std::make_shared<const Intention>(intention);
  const std::string put_normalized = normalize_whitespace(put.source);
  std::vector<ReferenceVersion> refs;

  for (int round = 0; round <= cfg.max_regen_rounds; ++round) {
    ChatResponse resp = llm.ask(req);
    ++stats.llm_calls;
    for (auto& candidate : extract_code(resp.content)) {
      ++stats.candidates;
      std::string source = normalize_entry_point(candidate, put.entry_point);
      if (normalize_whitespace(source) == put_normalized) {
        ++stats.rejected_echo;
        continue;
      }
      if (!defines_top_level_function(source, put.entry_point)) {
        ++stats.rejected_no_entry_point;
        continue;
      }
      if (!sandbox.syntax_check(source).ok) {
        ++stats.rejected_syntax;
        continue;
      }
      ReferenceVersion ref;
      ref.index = static_cast<int>(refs.size()) + 1;
      ref.source = std::move(source);
      ref.entry_point = put.entry_point;
      ref.intention = shared_intention;
      ref.compilable = true;
      refs.push_back(std::move(ref));
      if (static_cast<int>(refs.size()) == cfg.n_versions) return refs;
    }
  }
  throw InsufficientVersions("only " + std::to_string(refs.size()) + " of " +
                             std::to_string(cfg.n_versions) +
                             " reference versions compiled after " +
                             std::to_string(cfg.max_regen_rounds + 1) + " attempts");
}

std::string_view to_string(StrawmanOutcome o) {
  switch (o) {
    case StrawmanOutcome::Generated: return "generated";
    case StrawmanOutcome::NoBugClaimed: return "no_bug_claimed";
    case StrawmanOutcome::Inconclusive: return "inconclusive";
    case StrawmanOutcome::ExtractionFailed: return "extraction_failed";
  }
  return "extraction_failed";
}

StrawmanResult strawman_generate(const ProgramUnderTest& put, const GenerationConfig& cfg,
                                 LlmContext& llm, Sandbox& sandbox) {
  cfg.validate();
  StrawmanResult result;
  PromptContext ctx;
  ctx.source = put.source;
  ctx.entry_point = put.entry_point;
  ctx.n_versions = cfg.n_versions;

  ChatRequest ask_bug = llm.render(PromptKind::BaselineHasBug, ctx);
  ChatResponse answer = llm.ask(ask_bug);
  result.answer = answer.content;
  switch (classify_answer(answer.content, llm.keywords)) {
    case Answer::Negative: result.outcome = StrawmanOutcome::NoBugClaimed; return result;
    case Answer::Inconclusive: result.outcome = StrawmanOutcome::Inconclusive; return result;
    case Answer::Affirmative: break;
  }

  std::vector<ChatMessage> history = ask_bug.messages;
  history.push_back({Role::Assistant, answer.content});
  ChatResponse fixes = llm.ask(
      continue_conversation(std::move(history), llm.render(PromptKind::StrawmanFix, ctx)));

  for (auto& candidate : extract_code(fixes.content)) {
    std::string source = normalize_entry_point(candidate, put.entry_point);
    if (!defines_top_level_function(source, put.entry_point)) continue;
    if (!sandbox.syntax_check(source).ok) continue;
    ReferenceVersion ref;
    ref.index = static_cast<int>(result.versions.size()) + 1;
    ref.source = std::move(source);
    ref.entry_point = put.entry_point;
    ref.compilable = true;
    result.versions.push_back(std::move(ref));
    if (static_cast<int>(result.versions.size()) == cfg.n_versions) break;
  }
  result.outcome = result.versions.empty() ? StrawmanOutcome::ExtractionFailed
                                           : StrawmanOutcome::Generated;
  return result;
}

bool is_good_reference(const ReferenceVersion& ref, const std::vector<TestCase>& ground_truth_tests,
                       Sandbox& sandbox, int timeout_ms) {
  if (ground_truth_tests.empty())
    throw ConfigError("reference goodness needs at least one ground-truth test");
  for (const auto& t : ground_truth_tests) {
    auto r = sandbox.execute(ref.source, ref.entry_point, t.input.args, timeout_ms);
    auto out = observed_output(r);
    if (!out || !output_equal(*out, t.expected)) return false;
  }
  return true;
}

void persist_generation(const std::filesystem::path& out_dir, const Intention& intention,
                        const std::vector<ReferenceVersion>& refs) {
  auto dir = out_dir / intention.put_id;
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "intention.txt", std::ios::binary);
    f << intention.text << '\n';
  }
  for (const auto& r : refs) {
    std::ofstream f(dir / ("ref_" + std::to_string(r.index) + ".src"), std::ios::binary);
    f << r.source;
  }
}

}  // namespace difforacle
