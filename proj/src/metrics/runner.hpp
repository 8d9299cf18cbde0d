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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "generator/generator.hpp"
#include "llm/context.hpp"
#include "metrics/corpus.hpp"
#include "metrics/metrics.hpp"
#include "sandbox/sandbox.hpp"
#include "testgen/testgen.hpp"

namespace difforacle {

// Techniques understood by run_corpus.
inline constexpr const char* kDiffPrompt = "diffprompt";
inline constexpr const char* kBaseChatGpt = "base_chatgpt";
inline constexpr const char* kStrawman = "strawman";
inline constexpr const char* kIngested = "ingested";

bool is_known_technique(const std::string& name);

struct EvalConfig {
  std::vector<std::string> techniques{kDiffPrompt};
  int runs = 10;
  GenerationConfig generation;
  TestGenConfig testgen;
  int workers = 1;
  // Per-cell transcripts live at <cassette_dir>/<subject>/<technique>/run-<r>.jsonl.
  CassetteMode mode = CassetteMode::Passthrough;
  std::filesystem::path cassette_dir;
  // Record mode only: answer from <script_dir>/<subject>/<technique>/run-<r>.json
  // (or <technique>.json) instead of the shared transport.
  std::optional<std::filesystem::path> script_dir;
  std::filesystem::path out_dir = "out";

  void validate() const;
};

struct LlmSetup {
  std::shared_ptr<ChatTransport> transport;
  const PromptLibrary* prompts = nullptr;
  PromptSettings settings;
  AnswerKeywords keywords;
};

std::filesystem::path cell_cassette_path(const std::filesystem::path& cassette_dir,
                                         const std::string& subject,
                                         const std::string& technique, int run);

// Runs one cell and persists its outcome.json. Errors end up in the cell.
CellOutcome run_cell(const CorpusEntry& entry, const std::string& technique, int run,
                     const EvalConfig& cfg, const LlmSetup& llm, Sandbox& sandbox);

// Every (subject, technique, run) cell over a pool of cfg.workers threads,
// each with its own sandbox, then the reports under cfg.out_dir.
RunTable run_corpus(const std::vector<CorpusEntry>& corpus, const EvalConfig& cfg,
                    const LlmSetup& llm, const SandboxFactory& sandboxes);

struct GeneratedRefs {
  std::string subject;
  std::vector<ReferenceVersion> refs;
  // Requested versions; missing ones count as not good.
  int slots = 0;
};

// Checks every generated reference against its subject's ground truth.
double reference_goodness_rate(const std::vector<CorpusEntry>& corpus,
                               const std::vector<GeneratedRefs>& generated, Sandbox& sandbox,
                               int timeout_ms = kDefaultTimeoutMs);

}  // namespace difforacle
