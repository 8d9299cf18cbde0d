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

#include "llm/prompts.hpp"

#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace difforacle {

std::string_view to_string(PromptKind kind) {
  switch (kind) {
    case PromptKind::InferIntention: return "infer_intention";
    case PromptKind::GenerateReferences: return "generate_references";
    case PromptKind::GenerateInputs: return "generate_inputs";
    case PromptKind::BaselineHasBug: return "baseline_has_bug";
    case PromptKind::BaselineMakeTest: return "baseline_make_test";
    case PromptKind::StrawmanFix: return "strawman_fix";
  }
  return "infer_intention";
}

std::string template_file_name(PromptKind kind) { return std::string(to_string(kind)) + ".txt"; }

double PromptSettings::temperature_for(PromptKind kind) const {
  switch (kind) {
    case PromptKind::InferIntention: return temperature_intent;
    case PromptKind::GenerateReferences:
    case PromptKind::GenerateInputs: return temperature_gen;
    default: return temperature_baseline;
  }
}

namespace {

std::string strip_comments(const std::string& raw) {
  std::istringstream in(raw);
  std::string line, out;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.rfind("##", 0) == 0) continue;
    if (!first) out += '\n';
    out += line;
    first = false;
  }
  while (!out.empty() && (out.back() == '\n' || out.back() == '\r' || out.back() == ' '))
    out.pop_back();
  std::size_t lead = out.find_first_not_of('\n');
  return lead == std::string::npos ? std::string() : out.substr(lead);
}

std::size_t index_of(PromptKind kind) { return static_cast<std::size_t>(kind); }

void check_reference_template(const std::string& text) {
  if (text.find("{source}") != std::string::npos)
    throw ConfigError(template_file_name(PromptKind::GenerateReferences) +
                      " must not reference {source}: references are built from the intention");
}

}  // namespace

PromptLibrary PromptLibrary::load(const std::filesystem::path& dir) {
  std::array<std::string, kAllPromptKinds.size()> texts;
  for (auto kind : kAllPromptKinds) {
    auto path = dir / template_file_name(kind);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("missing prompt template " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    texts[index_of(kind)] = buf.str();
  }
  return from_texts(std::move(texts));
}

PromptLibrary PromptLibrary::from_texts(std::array<std::string, kAllPromptKinds.size()> texts) {
  PromptLibrary lib;
  for (std::size_t i = 0; i < texts.size(); ++i) lib.texts_[i] = strip_comments(texts[i]);
  check_reference_template(lib.texts_[index_of(PromptKind::GenerateReferences)]);
  return lib;
}

const std::string& PromptLibrary::text(PromptKind kind) const { return texts_[index_of(kind)]; }

std::string substitute_placeholders(const std::string& tmpl, const PromptContext& ctx) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      auto close = tmpl.find('}', i + 1);
      if (close != std::string::npos) {
        std::string name = tmpl.substr(i + 1, close - i - 1);
        std::optional<std::string> value;
        bool known = true;
        if (name == "source") value = ctx.source;
        else if (name == "intention") value = ctx.intention;
        else if (name == "entry_point") value = ctx.entry_point;
        else if (name == "n_versions") {
          if (ctx.n_versions) value = std::to_string(*ctx.n_versions);
        } else if (name == "n_inputs") {
          if (ctx.n_inputs) value = std::to_string(*ctx.n_inputs);
        } else known = false;
        if (known) {
          if (!value) throw MissingPlaceholder("prompt context lacks {" + name + "}");
          out += *value;
          i = close + 1;
          continue;
        }
      }
    }
    out += tmpl[i++];
  }
  return out;
}

ChatRequest PromptLibrary::render(PromptKind kind, const PromptContext& ctx,
                                  const PromptSettings& settings) const {
  if (kind == PromptKind::GenerateReferences && ctx.source)
    throw ConfigError("reference generation must not see the program source");
  ChatRequest req;
  req.model = settings.model;
  req.temperature = settings.temperature_for(kind);
  req.messages.push_back({Role::User, substitute_placeholders(text(kind), ctx)});
  return req;
}

ChatRequest continue_conversation(std::vector<ChatMessage> history, ChatRequest next) {
  history.insert(history.end(), next.messages.begin(), next.messages.end());
  next.messages = std::move(history);
  return next;
}

}  // namespace difforacle
