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

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "llm/chat.hpp"

namespace difforacle {

enum class PromptKind {
  InferIntention,
  GenerateReferences,
  GenerateInputs,
  BaselineHasBug,
  BaselineMakeTest,
  StrawmanFix,
};

inline constexpr std::array kAllPromptKinds = {
    PromptKind::InferIntention, PromptKind::GenerateReferences, PromptKind::GenerateInputs,
    PromptKind::BaselineHasBug, PromptKind::BaselineMakeTest,  PromptKind::StrawmanFix};

std::string_view to_string(PromptKind kind);
// e.g. "infer_intention.txt"
std::string template_file_name(PromptKind kind);

// Values for the {source}, {intention}, {n_versions}, {entry_point} and
// {n_inputs} placeholders.
struct PromptContext {
  std::optional<std::string> source;
  std::optional<std::string> intention;
  std::optional<std::string> entry_point;
  std::optional<int> n_versions;
  std::optional<int> n_inputs;
};

struct PromptSettings {
  std::string model = kDefaultModel;
  double temperature_intent = 0.2;
  double temperature_gen = 1.0;
  double temperature_baseline = 1.0;

  double temperature_for(PromptKind kind) const;
};

// Prompt wording lives in UTF-8 template files, one per PromptKind. Lines
// starting with "##" are comments and are dropped before rendering.
class PromptLibrary {
 public:
  static PromptLibrary load(const std::filesystem::path& dir);
  static PromptLibrary from_texts(std::array<std::string, kAllPromptKinds.size()> texts);

  const std::string& text(PromptKind kind) const;

  // Single-turn request for `kind`. Throws MissingPlaceholder when the
  // template uses a placeholder that `ctx` leaves unset. The reference
  // prompt must be built from the intention alone: a {source} placeholder in
  // its template or a source in its context is rejected.
  ChatRequest render(PromptKind kind, const PromptContext& ctx,
                     const PromptSettings& settings = {}) const;

 private:
  std::array<std::string, kAllPromptKinds.size()> texts_;
};

std::string substitute_placeholders(const std::string& tmpl, const PromptContext& ctx);

// Prepends earlier turns of a conversation to a rendered request.
ChatRequest continue_conversation(std::vector<ChatMessage> history, ChatRequest next);

}  // namespace difforacle
