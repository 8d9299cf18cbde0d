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

#include <filesystem>
#include <string>
#include <vector>

#include "core/taxonomy.hpp"
#include "llm/context.hpp"
#include "sandbox/sandbox.hpp"

namespace difforacle {

struct GenerationConfig {
  // Two references are the fewest that can cross-check an expected output.
  int n_versions = 2;
  int max_regen_rounds = 3;

  void validate() const;
};

// Counts of what happened to candidate references, kept for the trace.
struct GenerationLog {
  int llm_calls = 0;
  int candidates = 0;
  int rejected_syntax = 0;
  int rejected_echo = 0;
  int rejected_no_entry_point = 0;
};

Intention infer_intention(const ProgramUnderTest& put, LlmContext& llm);

// Heuristic: short or self-declared vague intentions.
bool intention_is_vague(const std::string& text);

// Prompts with the intention only and keeps compilable, non-echo candidates
// until `cfg.n_versions` are collected, re-asking up to max_regen_rounds
// times. Throws InsufficientVersions when that is not enough.
std::vector<ReferenceVersion> generate_references(const Intention& intention,
                                                  const ProgramUnderTest& put,
                                                  const GenerationConfig& cfg, LlmContext& llm,
                                                  Sandbox& sandbox, GenerationLog* log = nullptr);

enum class StrawmanOutcome { Generated, NoBugClaimed, Inconclusive, ExtractionFailed };
std::string_view to_string(StrawmanOutcome o);

struct StrawmanResult {
  StrawmanOutcome outcome = StrawmanOutcome::ExtractionFailed;
  std::vector<ReferenceVersion> versions;
  std::string answer;  // reply to the has-bug question
};

// Asks whether the PUT is buggy and, on an affirmative reply, for bug-fixed
// implementations derived from the PUT's own code.
StrawmanResult strawman_generate(const ProgramUnderTest& put, const GenerationConfig& cfg,
                                 LlmContext& llm, Sandbox& sandbox);

// A reference is good when it passes every ground-truth failure-inducing test.
bool is_good_reference(const ReferenceVersion& ref, const std::vector<TestCase>& ground_truth_tests,
                       Sandbox& sandbox, int timeout_ms = kDefaultTimeoutMs);

// Writes <out>/<put_id>/intention.txt and ref_<i>.src.
void persist_generation(const std::filesystem::path& out_dir, const Intention& intention,
                        const std::vector<ReferenceVersion>& refs);

}  // namespace difforacle
