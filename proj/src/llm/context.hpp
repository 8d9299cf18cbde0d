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

#include "llm/answer.hpp"
#include "llm/cassette.hpp"
#include "llm/client.hpp"
#include "llm/prompts.hpp"

namespace difforacle {

// Everything a pipeline stage needs to talk to the model.
struct LlmContext {
  LlmClient& client;
  Cassette& cassette;
  const PromptLibrary& prompts;
  PromptSettings settings;
  AnswerKeywords keywords;

  ChatRequest render(PromptKind kind, const PromptContext& ctx) const {
    return prompts.render(kind, ctx, settings);
  }
  ChatResponse ask(const ChatRequest& req) { return client.complete(req, cassette); }
};

}  // namespace difforacle
